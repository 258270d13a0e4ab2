"""Lie algebras given by structure constants c_{ij}^k over Q."""

from __future__ import annotations

import json
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .exactcore.field import Q, fmt_rat
from .exactcore.matrix import (
    inverse,
    kernel_basis,
    matmul,
    rank_exact,
    solve,
    transpose,
)
from .expr import evaluate

Covector = list  # list[Fraction], coordinates x_k = <x, e_k>


class LieAlgebraError(ValueError):
    pass


class StructureConstants:
    """Sparse tensor c_{ij}^k (0-based, stored for i < j)."""

    def __init__(self, dim: int, c: Mapping[tuple[int, int], Mapping[int, object]] | None = None,
                 name: str = "", params: Mapping[str, Fraction] | None = None):
        self.dim = dim
        self.name = name
        self.params = dict(params or {})
        store: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j), vec in (c or {}).items():
            if i == j:
                if any(v != 0 for v in vec.values()):
                    raise LieAlgebraError(f"[e{i + 1},e{i + 1}] must vanish")
                continue
            sign = 1
            if i > j:
                i, j, sign = j, i, -1
            if not (0 <= i < dim and 0 <= j < dim):
                raise LieAlgebraError(f"index out of range in bracket ({i + 1},{j + 1})")
            slot = store.setdefault((i, j), {})
            for k, v in vec.items():
                if not 0 <= k < dim:
                    raise LieAlgebraError(f"index out of range: e{k + 1}")
                slot[k] = slot.get(k, Fraction(0)) + sign * Fraction(v)
        self.c = {key: {k: v for k, v in vec.items() if v != 0} for key, vec in store.items()}
        self.c = {key: vec for key, vec in self.c.items() if vec}

    @classmethod
    def from_triples(cls, dim: int, triples: Iterable[Sequence], name: str = "",
                     params: Mapping[str, object] | None = None) -> StructureConstants:
        """Build from 1-based (i, j, k, value) triples; values may be expressions in params."""
        env = {k: Q(v) if not isinstance(v, Fraction) else v for k, v in (params or {}).items()}
        c: dict = {}
        for i, j, k, value in triples:
            v = evaluate(value, env) if isinstance(value, str) else Q(value)
            if i >= j:
                raise LieAlgebraError(f"bracket triple needs i < j, got ({i}, {j})")
            slot = c.setdefault((i - 1, j - 1), {})
            slot[k - 1] = slot.get(k - 1, Fraction(0)) + v
        return cls(dim, c, name=name, params=env)

    @classmethod
    def from_dict(cls, data: Mapping) -> StructureConstants:
        return cls.from_triples(int(data["dim"]), data.get("brackets", []), name=data.get("name", ""),
                                params=data.get("params") or {})

    @classmethod
    def from_file(cls, path) -> StructureConstants:
        return cls.from_dict(json.loads(Path(path).read_text()))

    def to_dict(self) -> dict:
        triples = [[i + 1, j + 1, k + 1, fmt_rat(v)]
                   for (i, j), vec in sorted(self.c.items()) for k, v in sorted(vec.items())]
        return {"name": self.name, "dim": self.dim, "brackets": triples,
                "params": {k: fmt_rat(v) for k, v in sorted(self.params.items())}}

    def coeffs(self, i: int, j: int) -> dict[int, Fraction]:
        """[e_i, e_j] as {k: c_ij^k}."""
        if i < j:
            return self.c.get((i, j), {})
        if i > j:
            return {k: -v for k, v in self.c.get((j, i), {}).items()}
        return {}

    def bracket(self, u: Sequence, v: Sequence) -> list:
        out = [Fraction(0)] * self.dim
        for (i, j), vec in self.c.items():
            w = u[i] * v[j] - u[j] * v[i]
            if w == 0:
                continue
            for k, ck in vec.items():
                out[k] += w * ck
        return out

    def ad(self, i: int):
        """Matrix of ad(e_i) acting on column vectors."""
        M = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for j in range(self.dim):
            for k, v in self.coeffs(i, j).items():
                M[k][j] = v
        return M

    def __eq__(self, other):
        return isinstance(other, StructureConstants) and self.dim == other.dim and self.c == other.c

    def __repr__(self):
        return f"StructureConstants(name={self.name!r}, dim={self.dim})"


@dataclass(frozen=True)
class Subspace:
    basis: tuple

    def __post_init__(self):
        if self.basis and rank_exact([list(v) for v in self.basis]) != len(self.basis):
            raise ValueError("subspace basis is not linearly independent")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v) -> bool:
        if all(e == 0 for e in v):
            return True
        return rank_exact([list(b) for b in self.basis] + [list(v)]) == self.dim


def abelian(n: int) -> StructureConstants:
    return StructureConstants(n, {}, name=f"abelian_{n}")


def validate_jacobi(g: StructureConstants) -> list[tuple[tuple[int, int, int], list]]:
    """Violating triples (1-based) with their residual vectors."""
    n = g.dim
    basis = [[Fraction(int(a == b)) for a in range(n)] for b in range(n)]
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                ei, ej, ek = basis[i], basis[j], basis[k]
                r1 = g.bracket(g.bracket(ei, ej), ek)
                r2 = g.bracket(g.bracket(ej, ek), ei)
                r3 = g.bracket(g.bracket(ek, ei), ej)
                res = [a + b + c for a, b, c in zip(r1, r2, r3)]
                if any(res):
                    out.append(((i + 1, j + 1, k + 1), res))
    return out


def poisson_matrix(g: StructureConstants, x: Sequence):
    """The skew form A_x with entries sum_k c_ij^k x_k."""
    if len(x) != g.dim:
        raise LieAlgebraError(f"covector of length {len(x)} for algebra of dim {g.dim}")
    n = g.dim
    M = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), vec in g.c.items():
        s = sum((v * x[k] for k, v in vec.items()), Fraction(0))
        M[i][j] = s
        M[j][i] = -s
    return M


def random_covector(rng: random.Random, n: int, box: int = 10) -> Covector:
    """Uniform integer covector in [-box, box]^n, never zero."""
    while True:
        v = [Fraction(rng.randint(-box, box)) for _ in range(n)]
        if any(v):
            return v


@dataclass(frozen=True)
class IndexResult:
    index: int
    coranks: tuple
    stable: bool


def index_report(g: StructureConstants, trials: int = 5, seed=0, box: int = 10) -> IndexResult:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    coranks = tuple(g.dim - rank_exact(poisson_matrix(g, random_covector(rng, g.dim, box)))
                    for _ in range(trials))
    ind = min(coranks)
    return IndexResult(ind, coranks, sum(1 for c in coranks if c == ind) >= min(3, trials))


def index(g: StructureConstants, trials: int = 5, seed=0, box: int = 10) -> int:
    """Minimal corank of A_x over random integer covectors."""
    return index_report(g, trials, seed, box).index


def annihilator(g: StructureConstants, a: Sequence) -> Subspace:
    return Subspace(tuple(tuple(v) for v in kernel_basis(poisson_matrix(g, a))))


def centre(g: StructureConstants) -> Subspace:
    """Joint kernel of all ad(e_i)."""
    rows = [row for i in range(g.dim) for row in g.ad(i)]
    return Subspace(tuple(tuple(v) for v in kernel_basis(rows, g.dim)))


def direct_sum(g1: StructureConstants, g2: StructureConstants) -> StructureConstants:
    n1 = g1.dim
    c = {key: dict(vec) for key, vec in g1.c.items()}
    for (i, j), vec in g2.c.items():
        c[(i + n1, j + n1)] = {k + n1: v for k, v in vec.items()}
    name = f"{g1.name}+{g2.name}" if g1.name or g2.name else ""
    return StructureConstants(n1 + g2.dim, c, name=name)


def z2_contraction(g: StructureConstants, k_indices: Iterable[int]) -> StructureConstants:
    """Zero out [p, p] for the Z2-grading g = k + p, k spanned by e_i (0-based i in k_indices)."""
    kset = set(k_indices)
    n = g.dim
    for i in range(n):
        for j in range(i + 1, n):
            parity = (i not in kset) + (j not in kset)
            for k in g.coeffs(i, j):
                target_p = k not in kset
                if target_p != (parity == 1):
                    raise LieAlgebraError(
                        f"not a Z2-grading: [e{i + 1},e{j + 1}] has a component along e{k + 1}"
                    )
    c = {(i, j): dict(vec) for (i, j), vec in g.c.items() if i in kset or j in kset}
    return StructureConstants(n, c, name=f"{g.name}_contracted" if g.name else "")


def change_basis(g: StructureConstants, T) -> StructureConstants:
    """Structure constants in the basis f_j = sum_i T[i][j] e_i."""
    n = g.dim
    Tinv = inverse(T)
    cols = [[T[i][j] for i in range(n)] for j in range(n)]
    c = {}
    for p in range(n):
        for q in range(p + 1, n):
            w = g.bracket(cols[p], cols[q])
            coords = [sum((Tinv[r][s] * w[s] for s in range(n) if w[s]), Fraction(0)) for r in range(n)]
            nz = {r: v for r, v in enumerate(coords) if v}
            if nz:
                c[(p, q)] = nz
    return StructureConstants(n, c, name=g.name, params=g.params)


def subalgebra(g: StructureConstants, basis: Sequence[Sequence]) -> StructureConstants:
    """Inherited brackets on span(basis); raises if the span is not closed."""
    m = len(basis)
    cols = [list(v) for v in basis]
    Bm = [[cols[j][i] for j in range(m)] for i in range(g.dim)]
    c = {}
    for p in range(m):
        for q in range(p + 1, m):
            w = g.bracket(cols[p], cols[q])
            coords = solve(Bm, w)
            if coords is None:
                raise LieAlgebraError(f"span not closed under bracket: [{p + 1},{q + 1}]")
            nz = {r: v for r, v in enumerate(coords) if v}
            if nz:
                c[(p, q)] = nz
    return StructureConstants(m, c)


def annihilator_subalgebra(g: StructureConstants, a: Sequence) -> StructureConstants:
    return subalgebra(g, annihilator(g, a).basis)


def from_matrices(mats: Sequence, name: str = "") -> StructureConstants:
    """Structure constants of the matrix Lie algebra spanned by ``mats`` (commutator bracket)."""
    flat = [[e for row in M for e in row] for M in mats]
    n = len(mats)
    if rank_exact(flat) != n:
        raise LieAlgebraError("basis matrices are linearly dependent")
    Bm = transpose(flat)
    c = {}
    for p in range(n):
        for q in range(p + 1, n):
            X, Y = mats[p], mats[q]
            XY, YX = matmul(X, Y), matmul(Y, X)
            w = [a - b for ra, rb in zip(XY, YX) for a, b in zip(ra, rb)]
            coords = solve(Bm, w)
            if coords is None:
                raise LieAlgebraError(f"matrix span not closed: [{p + 1},{q + 1}]")
            nz = {r: v for r, v in enumerate(coords) if v}
            if nz:
                c[(p, q)] = nz
    return StructureConstants(n, c, name=name)


def modal(values: Iterable):
    """Most common value and its count; ties broken by first occurrence."""
    counts = Counter(values)
    best = max(counts.values())
    for v in counts:
        if counts[v] == best:
            return v, best
    raise ValueError("empty")


__all__ = [
    "Covector",
    "IndexResult",
    "LieAlgebraError",
    "StructureConstants",
    "Subspace",
    "abelian",
    "annihilator",
    "annihilator_subalgebra",
    "centre",
    "change_basis",
    "direct_sum",
    "from_matrices",
    "index",
    "index_report",
    "poisson_matrix",
    "random_covector",
    "subalgebra",
    "validate_jacobi",
    "z2_contraction",
]
