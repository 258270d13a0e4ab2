"""Polynomial Poisson brackets on g*, argument shifts and bi-involution checks."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exactcore.matrix import form, rank_exact
from .exactcore.multipoly import MultiPoly
from .liealg import StructureConstants, annihilator, index, poisson_matrix, random_covector
from .pencil import Pencil, PencilError, pencil_rank, recursion_chains

SYMBOLIC_PFAFFIAN_MAX_DIM = 12


class FamilyError(ValueError):
    pass


@dataclass
class PolyFamily:
    polys: list
    label: str = ""

    def __post_init__(self):
        if len({p.nvars for p in self.polys}) > 1:
            raise FamilyError("family members live in different polynomial rings")

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def to_json(self) -> list:
        return [p.to_terms() for p in self.polys]

    @classmethod
    def from_json(cls, nvars: int, data, label: str = "") -> PolyFamily:
        return cls([MultiPoly.from_terms(nvars, terms) for terms in data], label)


def _check_dim(g: StructureConstants, *polys: MultiPoly):
    for p in polys:
        if p.nvars != g.dim:
            raise FamilyError(f"polynomial in {p.nvars} variables for algebra of dim {g.dim}")


def _bracket(g: StructureConstants, f: MultiPoly, h: MultiPoly, weight) -> MultiPoly:
    df, dh = f.gradient(), h.gradient()
    out = MultiPoly(g.dim)
    for (i, j), vec in g.c.items():
        cross = df[i] * dh[j] - df[j] * dh[i]
        if cross.is_zero():
            continue
        out = out + cross * weight(vec)
    return out


def lie_poisson_bracket(g: StructureConstants, f: MultiPoly, h: MultiPoly) -> MultiPoly:
    """{f, h}(x) = sum c_ij^k x_k df/dx_i dh/dx_j."""
    _check_dim(g, f, h)
    n = g.dim
    return _bracket(g, f, h, lambda vec: MultiPoly.linear([vec.get(k, 0) for k in range(n)]))


def frozen_bracket(g: StructureConstants, a: Sequence, f: MultiPoly, h: MultiPoly) -> MultiPoly:
    """The constant bracket with the structure tensor frozen at a."""
    _check_dim(g, f, h)
    if len(a) != g.dim:
        raise FamilyError("covector length does not match the algebra")
    return _bracket(g, f, h, lambda vec: sum((v * a[k] for k, v in vec.items()), Fraction(0)))


@dataclass
class InvolutionResult:
    ok: bool
    witness: tuple | None = None  # (i, j, "lie" | "frozen", nonzero bracket)

    def __bool__(self):
        return self.ok


def verify_biinvolution(g: StructureConstants, a: Sequence, fam: PolyFamily) -> InvolutionResult:
    polys = list(fam)
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            b = lie_poisson_bracket(g, polys[i], polys[j])
            if not b.is_zero():
                return InvolutionResult(False, (i, j, "lie", b))
            b = frozen_bracket(g, a, polys[i], polys[j])
            if not b.is_zero():
                return InvolutionResult(False, (i, j, "frozen", b))
    return InvolutionResult(True)


def is_casimir(g: StructureConstants, f: MultiPoly) -> bool:
    return all(
        lie_poisson_bracket(g, f, MultiPoly.var(g.dim, i)).is_zero() for i in range(g.dim)
    )


def shift_generators(g: StructureConstants, a: Sequence, invariants: PolyFamily) -> PolyFamily:
    """Homogeneous Taylor components f^k, k > 0, of f(a + λx) for each Casimir f."""
    out = []
    for idx, f in enumerate(invariants):
        _check_dim(g, f)
        if not is_casimir(g, f):
            raise FamilyError(f"invariant #{idx + 1} ({f}) is not a Casimir function")
        for deg, comp in f.shift(a).homogeneous_components().items():
            if deg > 0 and not comp.is_zero():
                out.append(comp)
    return PolyFamily(out, label="shifts")


def symbolic_pfaffian(M) -> MultiPoly:
    """Pfaffian of a skew matrix of MultiPoly entries, by expansion along the first row
    with memoisation over the remaining index sets."""
    n = len(M)
    if n % 2:
        raise ValueError("Pfaffian of an odd-size matrix")
    nvars = next((e.nvars for row in M for e in row if isinstance(e, MultiPoly)), 0)
    zero = MultiPoly(nvars)

    @lru_cache(maxsize=None)
    def pf(idx: tuple) -> MultiPoly:
        if not idx:
            return MultiPoly.const(nvars, 1)
        i, rest = idx[0], idx[1:]
        total = zero
        for pos, j in enumerate(rest):
            entry = M[i][j]
            if isinstance(entry, MultiPoly) and entry.is_zero():
                continue
            sub = pf(rest[:pos] + rest[pos + 1:])
            if sub.is_zero():
                continue
            term = sub * entry
            total = total - term if pos % 2 else total + term
        return total

    return pf(tuple(range(n)))


def symbolic_poisson_matrix(g: StructureConstants):
    n = g.dim
    M = [[MultiPoly(n) for _ in range(n)] for _ in range(n)]
    for (i, j), vec in g.c.items():
        lin = MultiPoly.linear([vec.get(k, 0) for k in range(n)])
        M[i][j] = lin
        M[j][i] = -lin
    return M


def pfaffian_polynomial(g: StructureConstants) -> MultiPoly:
    """Pf(A_x) as a polynomial in x."""
    if g.dim > SYMBOLIC_PFAFFIAN_MAX_DIM:
        raise FamilyError(
            f"symbolic Pfaffian limited to dim <= {SYMBOLIC_PFAFFIAN_MAX_DIM}, got {g.dim}"
        )
    return symbolic_pfaffian(symbolic_poisson_matrix(g))


def frobenius_family(g: StructureConstants, a: Sequence, seed=0) -> PolyFamily:
    """Non-constant λ-coefficients of Pf(A_{x+λa}) for a Frobenius algebra."""
    if g.dim % 2 or index(g, seed=seed) != 0:
        raise FamilyError("frobenius_family needs an algebra of index 0")
    F = pfaffian_polynomial(g)
    comps = F.shift(a).homogeneous_components()
    # the λ^k coefficient of F(x + λa) is the degree (m - k) part of F(x + a)
    polys = [c for d, c in sorted(comps.items(), reverse=True) if d > 0 and not c.is_zero()]
    return PolyFamily(polys, label="pfaffian")


def jacobian_rank(fam: PolyFamily, point: Sequence) -> int:
    if not fam.polys:
        return 0
    rows = [[d(point) for d in p.gradient()] for p in fam.polys]
    return rank_exact(rows)


def completeness_count(g: StructureConstants, fam: PolyFamily, samples: int = 3, seed=0,
                       box: int = 10) -> int:
    """Number of algebraically independent members: maximal Jacobian rank at random points."""
    rng = random.Random(seed)
    return max(
        (jacobian_rank(fam, random_covector(rng, g.dim, box)) for _ in range(max(samples, 1))),
        default=0,
    )


def chain_biisotropy_check(g: StructureConstants, x: Sequence, a: Sequence) -> bool:
    """Recursion-chain vectors of A_x + λA_a are isotropic for both forms."""
    P = Pencil(poisson_matrix(g, x), poisson_matrix(g, a))
    if rank_exact(P.B) != pencil_rank(P):
        raise PencilError("a is singular for this pencil; sample a generic pair")
    vecs = recursion_chains(P).vectors()
    return all(form(P.A, u, v) == 0 and form(P.B, u, v) == 0 for u in vecs for v in vecs)


def kostant_regularity_check(g: StructureConstants, invariants: PolyFamily, x: Sequence,
                             seed=0) -> bool:
    """(dF_i(x) span Ann x) <=> (x regular), both sides exact."""
    from .jkinv import classify

    ind = index(g, seed=seed)
    degrees = [p.total_degree() for p in invariants]
    if 2 * sum(degrees) != g.dim + ind:
        raise FamilyError(f"sum of degrees {sum(degrees)} != (dim + ind)/2 = {(g.dim + ind) / 2}")
    if any(not is_casimir(g, p) for p in invariants):
        raise FamilyError("invariants must be Casimir functions")
    if classify(g, seed=seed) != "Kronecker":
        raise FamilyError("kostant_regularity_check applies to Kronecker-type algebras")
    ann = annihilator(g, x)
    grads = [[d(x) for d in p.gradient()] for p in invariants]
    spans = (rank_exact(grads) if grads else 0) == ann.dim
    regular = ann.dim == ind
    return spans == regular


__all__ = [
    "FamilyError",
    "InvolutionResult",
    "PolyFamily",
    "chain_biisotropy_check",
    "completeness_count",
    "frobenius_family",
    "frozen_bracket",
    "is_casimir",
    "jacobian_rank",
    "kostant_regularity_check",
    "lie_poisson_bracket",
    "pfaffian_polynomial",
    "shift_generators",
    "symbolic_pfaffian",
    "verify_biinvolution",
]
