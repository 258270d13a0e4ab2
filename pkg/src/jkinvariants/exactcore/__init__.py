"""Exact scalars, polynomials and matrices."""

from .field import GaussRat, I, Q, fmt_rat, fmt_scalar, parse_scalar
from .matrix import (
    congruence,
    det,
    identity,
    is_skew,
    kernel_basis,
    matmul,
    pfaffian,
    pfaffian_expansion,
    rank_exact,
    rref,
    solve,
    to_matrix,
    transpose,
    zeros,
)
from .multipoly import MultiPoly
from .polymatrix import pencil_matrix, smith_normal_form
from .roots import NonSplitError, exact_roots, split_roots
from .unipoly import UniPoly, interpolate, poly_gcd, squarefree_decompose, squarefree_part

__all__ = [
    "GaussRat",
    "I",
    "MultiPoly",
    "NonSplitError",
    "Q",
    "UniPoly",
    "congruence",
    "det",
    "exact_roots",
    "fmt_rat",
    "fmt_scalar",
    "identity",
    "interpolate",
    "is_skew",
    "kernel_basis",
    "matmul",
    "parse_scalar",
    "pencil_matrix",
    "pfaffian",
    "pfaffian_expansion",
    "poly_gcd",
    "rank_exact",
    "rref",
    "smith_normal_form",
    "solve",
    "split_roots",
    "squarefree_decompose",
    "squarefree_part",
    "to_matrix",
    "transpose",
    "zeros",
]
