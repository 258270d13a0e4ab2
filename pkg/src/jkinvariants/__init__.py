"""Jordan-Kronecker invariants of Lie algebras in exact arithmetic."""

__version__ = "0.1.0"
