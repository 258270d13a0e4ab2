"""Pencils A + λB of skew-symmetric forms: rank, characteristic polynomial,
Jordan strata from chain-matrix ranks, Kronecker (minimal) indices, and recursion
chains spanning the core subspace L."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .exactcore.field import fmt_scalar
from .exactcore.matrix import (
    Matrix,
    form,
    is_skew,
    kernel_basis,
    lin_comb,
    matvec,
    pfaffian,
    principal_submatrix,
    rank_exact,
    rref,
    shape,
    solve,
    to_matrix,
)
from .exactcore.polymatrix import pencil_matrix, smith_normal_form
from .exactcore.residue import rank_modulo
from .exactcore.unipoly import UniPoly, interpolate, poly_gcd, squarefree_part

INFINITY = "inf"


class PencilError(ValueError):
    pass


class InconsistentProfileError(RuntimeError):
    """Internal cross-check failed; indicates a bug, never a property of the input."""


class Pencil:
    """Ordered pair of skew matrices (A, B) standing for A + λB."""

    __slots__ = ("A", "B", "n")

    def __init__(self, A, B):
        A, B = to_matrix(A), to_matrix(B)
        if shape(A) != shape(B) or shape(A)[0] != shape(A)[1]:
            raise PencilError(f"pencil matrices must be square of equal size, got {shape(A)} and {shape(B)}")
        if not (is_skew(A) and is_skew(B)):
            raise PencilError("pencil matrices must be skew-symmetric")
        self.A, self.B, self.n = A, B, len(A)

    def at(self, t) -> Matrix:
        return lin_comb(1, self.A, t, self.B)

    def swapped(self) -> Pencil:
        return Pencil(self.B, self.A)

    def shifted(self, mu) -> Pencil:
        """A + λ(B + μA)."""
        return Pencil(self.A, lin_comb(1, self.B, mu, self.A))

    def congruent(self, T) -> Pencil:
        from .exactcore.matrix import congruence

        return Pencil(congruence(T, self.A), congruence(T, self.B))

    def __repr__(self):
        return f"Pencil(n={self.n})"


# -- rank -----------------------------------------------------------------


def _sample_points(k: int, seed=0) -> list[Fraction]:
    rng = random.Random(seed)
    pts: list[Fraction] = []
    while len(pts) < k:
        t = Fraction(rng.randint(-97, 97), rng.randint(1, 31))
        if t not in pts:
            pts.append(t)
    return pts


def pencil_rank(P: Pencil, seed=0) -> int:
    """Rank of A + λB over Q(λ)."""
    if P.n == 0:
        return 0
    ranks = {rank_exact(P.at(t)) for t in _sample_points(3, seed)}
    if len(ranks) == 1:
        return ranks.pop()
    return smith_normal_form(pencil_matrix(P.A, P.B))[1]


def corank(P: Pencil, seed=0) -> int:
    return P.n - pencil_rank(P, seed)


# -- characteristic polynomial ------------------------------------------------


def pfaffian_poly(P: Pencil, idx: Sequence[int]) -> UniPoly:
    """Pf of the principal minor of A + λB on ``idx`` (interpolated)."""
    m = len(idx)
    A = principal_submatrix(P.A, idx)
    B = principal_submatrix(P.B, idx)
    pts = [Fraction(t) for t in range(m // 2 + 1)]
    vals = [pfaffian(lin_comb(1, A, t, B)) for t in pts]
    return interpolate(pts, vals)


def characteristic_polynomial(P: Pencil, seed=0) -> UniPoly:
    """Monic gcd of the Pfaffians of principal minors of order rank P."""
    r = pencil_rank(P, seed)
    if r == 0:
        return UniPoly([1])
    g = UniPoly()
    for idx in combinations(range(P.n), r):
        f = pfaffian_poly(P, idx)
        if f.is_zero():
            continue
        g = poly_gcd(g, f)
        if g.degree() == 0:
            break
    return g


# -- Jordan structure ------------------------------------------------------------


@dataclass(frozen=True)
class JordanStratum:
    poly: UniPoly  # squarefree monic, roots = characteristic numbers of this type
    root_count: int
    block_sizes: tuple  # even sizes, descending; one entry per Jordan pair

    def type_key(self):
        return (self.block_sizes, self.root_count)

    def to_dict(self) -> dict:
        return {"poly": str(self.poly), "root_count": self.root_count, "block_sizes": list(self.block_sizes)}


def _split_by_multiplicity(q: UniPoly, f: UniPoly) -> dict[int, UniPoly]:
    """Split squarefree q by the multiplicity of its roots in f (f != 0)."""
    out: dict[int, UniPoly] = {}
    prev, h, m = q, f, 0
    while prev.degree() > 0:
        cur = poly_gcd(prev, h)
        lost = prev.exact_div(cur)
        if lost.degree() > 0:
            out[m] = lost
        if cur.degree() <= 0:
            break
        h = h.exact_div(cur)
        prev, m = cur, m + 1
    return out


def strata_from_factors(factors: Sequence[UniPoly]) -> list[JordanStratum]:
    """Group roots of the invariant factors by elementary-divisor exponents."""
    nonconst = [s for s in factors if s.degree() > 0]
    if not nonconst:
        return []
    top = nonconst[-1]
    groups: list[tuple[UniPoly, tuple]] = [(squarefree_part(top), ())]
    for s in nonconst:
        refined = []
        for q, exps in groups:
            for mult, part in _split_by_multiplicity(q, s).items():
                refined.append((part, exps + (mult,)))
        groups = refined
    strata = []
    for q, exps in groups:
        degs = sorted((e for e in exps if e), reverse=True)
        if len(degs) % 2:
            raise InconsistentProfileError(f"unpaired elementary divisors {degs} at stratum {q}")
        sizes = tuple(2 * degs[i] for i in range(0, len(degs), 2))
        if any(degs[i] != degs[i + 1] for i in range(0, len(degs), 2)):
            raise InconsistentProfileError(f"elementary divisors do not pair: {degs} at {q}")
        strata.append(JordanStratum(q, q.degree(), sizes))
    strata.sort(key=lambda s: (tuple(-b for b in s.block_sizes), -s.root_count, str(s.poly)))
    return strata


def _zero_multiplicity(f: UniPoly) -> int:
    k = 0
    while k < len(f.coeffs) and f.coeffs[k] == 0:
        k += 1
    return k


@dataclass(frozen=True)
class JordanStructure:
    strata: tuple
    has_infinite_eigenvalue: bool
    invariant_factors: tuple
    infinite_block_sizes: tuple = ()


def jordan_structure_smith(P: Pencil, seed=0) -> JordanStructure:
    """Jordan strata from chain-matrix ranks of A + λB (slow on larger pencils; kept as a cross-check)."""
    factors, r = smith_normal_form(pencil_matrix(P.A, P.B))
    strata = strata_from_factors(factors)
    infinite = rank_exact(P.B) < r
    inf_sizes: tuple = ()
    if infinite:
        rev, _ = smith_normal_form(pencil_matrix(P.B, P.A))
        degs = sorted((_zero_multiplicity(s) for s in rev), reverse=True)
        degs = [d for d in degs if d]
        inf_sizes = tuple(2 * degs[i] for i in range(0, len(degs), 2))
    return JordanStructure(tuple(strata), infinite, factors, inf_sizes)


def chain_matrix(P: Pencil, k: int) -> list:
    """Block lower-bidiagonal W_k(θ) with A + θB on the diagonal and B below it.

    Entries are polynomials in θ. dim ker W_k(θ) = k·corank + sum_j min(e_j, k)
    over the Jordan blocks (sizes e_j) with eigenvalue θ.
    """
    n = P.n
    diag = [[UniPoly([P.A[i][j], P.B[i][j]]) for j in range(n)] for i in range(n)]
    sub = [[UniPoly([P.B[i][j]]) for j in range(n)] for i in range(n)]
    zero = UniPoly()
    W = [[zero] * (k * n) for _ in range(k * n)]
    for b in range(k):
        for i in range(n):
            row = W[b * n + i]
            for j in range(n):
                row[b * n + j] = diag[i][j]
                if b:
                    row[(b - 1) * n + j] = sub[i][j]
    return W


def _paired_sizes(counts: Sequence[int], where) -> tuple:
    """Block sizes 2e per Jordan pair from c_k = sum_j min(e_j, k), c_0 = 0."""
    c = [0, *counts, counts[-1]]
    at_least = [c[k] - c[k - 1] for k in range(1, len(c))]
    exps = []
    for k in range(1, len(at_least)):
        exps += [k] * (at_least[k - 1] - at_least[k])
    exps.sort(reverse=True)
    if any(n % 2 for n in Counter(exps).values()):
        raise InconsistentProfileError(f"elementary divisors do not pair: {exps} at {where}")
    return tuple(2 * exps[i] for i in range(0, len(exps), 2))


def _weyr_pieces(P: Pencil, q: UniPoly, s: int) -> list[tuple[UniPoly, tuple]]:
    """Split q into pieces on which the Jordan block sizes of P are constant."""
    n = P.n
    done = []
    active = [(q.monic(), [])]
    k = 0
    while active:
        k += 1
        if k > n:
            raise InconsistentProfileError("Jordan chain length exceeded the pencil size")
        W = chain_matrix(P, k)
        nxt = []
        for piece, counts in active:
            for sub, r in rank_modulo(W, piece):
                c = k * n - r - k * s
                cs = counts + [c]
                prev = counts[-1] if counts else 0
                if c < prev or (len(counts) > 1 and c - prev > prev - counts[-2]):
                    raise InconsistentProfileError(f"non-concave chain counts {cs} at {sub}")
                (nxt if c > prev else done).append((sub, cs[:-1] if c == prev else cs))
        active = nxt
    return [(piece, _paired_sizes(counts, piece)) for piece, counts in done if counts]


def jordan_structure(P: Pencil, seed=0) -> JordanStructure:
    """Jordan strata from ranks of the chain matrices W_k over Q[θ]/(q), q = rad p.

    The roots of q are never separated unless their block structure differs, so
    the work stays over Q and small extensions of it.
    """
    p = characteristic_polynomial(P, seed)
    s = corank(P, seed)
    by_sizes: dict[tuple, UniPoly] = {}
    if p.degree() > 0:
        for piece, sizes in _weyr_pieces(P, squarefree_part(p), s):
            if not sizes:
                raise InconsistentProfileError(f"no Jordan block at a root of p: {piece}")
            by_sizes[sizes] = by_sizes[sizes] * piece if sizes in by_sizes else piece
    strata = [JordanStratum(q, q.degree(), sizes) for sizes, q in by_sizes.items()]
    if sum(st.root_count * sum(st.block_sizes) for st in strata) != 2 * p.degree():
        raise InconsistentProfileError(f"Jordan sizes {strata} do not account for p = {p}")
    strata.sort(key=lambda st: (tuple(-b for b in st.block_sizes), -st.root_count, str(st.poly)))
    infinite = rank_exact(P.B) < P.n - s
    inf_sizes: tuple = ()
    if infinite:
        pieces = _weyr_pieces(P.swapped(), UniPoly([0, 1]), s)
        inf_sizes = pieces[0][1] if pieces else ()
    return JordanStructure(tuple(strata), infinite, (), inf_sizes)


# -- Kronecker indices -------------------------------------------------------------


def toeplitz_stack(P: Pencil, k: int) -> Matrix:
    """(k+1) x k block matrix with A on the diagonal and B below it."""
    n = P.n
    T = [[Fraction(0)] * (k * n) for _ in range((k + 1) * n)]
    for j in range(k):
        for a in range(n):
            for b in range(n):
                T[j * n + a][j * n + b] = P.A[a][b]
                T[(j + 1) * n + a][j * n + b] = P.B[a][b]
    return T


def kronecker_indices(P: Pencil, seed=0) -> tuple:
    """Kronecker indices k_i = ε_i + 1 (block size 2k_i − 1), descending."""
    s = corank(P, seed)
    if s == 0:
        return ()
    found: list[int] = []
    d_prev = 0
    cnt_prev = 0
    k = 0
    while len(found) < s:
        k += 1
        if k > P.n + 1:
            raise InconsistentProfileError("minimal indices did not close up")
        T = toeplitz_stack(P, k)
        d = k * P.n - rank_exact(T)
        cnt = d - d_prev  # #{ε <= k-1}
        found.extend([k] * (cnt - cnt_prev))  # ε = k-1 -> k_i = k
        d_prev, cnt_prev = d, cnt
    if len(found) != s:
        raise InconsistentProfileError(f"found {len(found)} minimal indices for corank {s}")
    return tuple(sorted(found, reverse=True))


def minimal_basis(P: Pencil) -> list[list[list[Fraction]]]:
    """Minimal polynomial basis of ker(A + λB): each entry is [v_0, ..., v_ε]
    with A v_0 = 0, A v_t + B v_{t-1} = 0, B v_ε = 0."""
    n = P.n
    s = corank(P)
    basis: list[list] = []
    k = 0
    while len(basis) < s:
        k += 1
        if k > n + 1:
            raise InconsistentProfileError("minimal basis did not close up")
        T = toeplitz_stack(P, k)
        K = kernel_basis(T, k * n)
        span = []
        for coeffs in basis:
            eps = len(coeffs) - 1
            for j in range(k - eps):
                v = [Fraction(0)] * (k * n)
                for t, c in enumerate(coeffs):
                    v[(j + t) * n:(j + t + 1) * n] = c
                span.append(v)
        r = rank_exact(span) if span else 0
        for v in K:
            if rank_exact(span + [v]) > r:
                span.append(v)
                r += 1
                basis.append([v[t * n:(t + 1) * n] for t in range(k)])
    return basis


# -- profile ----------------------------------------------------------------------


@dataclass(frozen=True)
class JKProfile:
    kronecker: tuple
    strata: tuple
    has_infinite_eigenvalue: bool = False
    shift: Fraction | None = None
    n: int = 0

    def algebraic_type(self):
        return (self.kronecker, tuple(s.type_key() for s in self.strata))

    def jordan_dimension(self) -> int:
        return sum(s.root_count * sum(s.block_sizes) for s in self.strata)

    def kronecker_dimension(self) -> int:
        return sum(2 * k - 1 for k in self.kronecker)

    def has_jordan(self) -> bool:
        return bool(self.strata)

    def summary(self) -> str:
        ks = ",".join(str(k) for k in self.kronecker)
        js = ", ".join(
            f"{s.root_count}x{{{','.join(str(b) for b in s.block_sizes)}}}" for s in self.strata
        )
        return f"K:[{ks}], J:[{js}]"

    def to_dict(self) -> dict:
        d = {
            "kronecker": list(self.kronecker),
            "jordan": [s.to_dict() for s in self.strata],
            "has_infinite_eigenvalue": self.has_infinite_eigenvalue,
        }
        if self.shift is not None:
            d["shift"] = fmt_scalar(self.shift)
        return d


def _profile_unshifted(P: Pencil, seed=0) -> tuple[JKProfile, JordanStructure]:
    kron = kronecker_indices(P, seed)
    js = jordan_structure(P, seed)
    prof = JKProfile(kron, js.strata, js.has_infinite_eigenvalue, None, P.n)
    return prof, js


def jk_profile(P: Pencil, seed=0) -> JKProfile:
    """Kronecker indices plus Jordan strata; infinite eigenvalues are moved
    to a finite value by B' = B + μA and reported in that frame."""
    prof, js = _profile_unshifted(P, seed)
    shift = None
    if js.has_infinite_eigenvalue:
        rng = random.Random(seed)
        for _ in range(5):
            mu = Fraction(rng.randint(1, 29), rng.randint(1, 7)) * rng.choice((1, -1))
            Q = P.shifted(mu)
            p2, j2 = _profile_unshifted(Q, seed)
            if not j2.has_infinite_eigenvalue:
                prof, shift = p2, mu
                break
        else:
            raise PencilError("infinite characteristic number persisted under 5 random shifts")
        prof = JKProfile(prof.kronecker, prof.strata, True, shift, P.n)
    total = prof.kronecker_dimension() + prof.jordan_dimension()
    if total != P.n or len(prof.kronecker) != corank(P, seed):
        raise InconsistentProfileError(
            f"dimension sum {total} != {P.n}: kronecker={prof.kronecker}, strata={prof.strata}"
        )
    return prof


# -- counts at a characteristic value ----------------------------------------------


def jordan_counts_at(P: Pencil, mu) -> tuple[int, int]:
    """(all Jordan μ-blocks, non-trivial Jordan μ-blocks); ``mu`` may be INFINITY."""
    s = corank(P)
    if mu == INFINITY:
        M, restrict = P.B, P.A
    else:
        M, restrict = P.at(mu), P.B
    K = kernel_basis(M, P.n)
    total2 = len(K) - s
    if total2 <= 0:
        return (0, 0)
    R = [[form(restrict, u, v) for v in K] for u in K]
    nontriv2 = (len(K) - rank_exact(R)) - s
    if total2 % 2 or nontriv2 % 2 or nontriv2 < 0:
        raise InconsistentProfileError(f"odd or negative block counts at {mu}: {total2}, {nontriv2}")
    return (total2 // 2, nontriv2 // 2)


# -- recursion chains -----------------------------------------------------------------


@dataclass
class ChainFamily:
    chains: list = field(default_factory=list)

    def vectors(self):
        return [v for ch in self.chains for v in ch]

    def span_dim(self) -> int:
        vs = self.vectors()
        return rank_exact(vs) if vs else 0


def recursion_chains(P: Pencil, max_len: int | None = None) -> ChainFamily:
    """Chains v^0 ∈ Ker B, A v^k = B v^{k-1}; their span is L."""
    r = pencil_rank(P)
    if rank_exact(P.B) != r:
        raise PencilError("B is not regular in the pencil; shift it as B' = B + μA first")
    chains = []
    for coeffs in minimal_basis(P):
        eps = len(coeffs) - 1
        z = [[((-1) ** t) * c for c in coeffs[t]] for t in range(eps + 1)]
        length = (eps + 2) if max_len is None else max_len + 1
        # v^0 = z^ε, then v^k = z^{k-1} cycling with period ε + 1
        chains.append([z[eps]] + [z[(k - 1) % (eps + 1)] for k in range(1, length)])
    fam = ChainFamily(chains)
    for ch in fam.chains:
        for k in range(1, len(ch)):
            if matvec(P.A, ch[k]) != matvec(P.B, ch[k - 1]):
                raise InconsistentProfileError("chain recursion violated")
    return fam


def core_subspace(P: Pencil) -> list:
    """L = sum of Ker(A + λB) over non-characteristic λ, as an RREF basis."""
    vecs = [c for coeffs in minimal_basis(P) for c in coeffs]
    if not vecs:
        return []
    R, piv = rref(vecs)
    return R[: len(piv)]


def core_subspace_iterative(P: Pencil) -> list:
    """L computed independently as the limit of S_0 = Ker B,
    S_{k+1} = S_k + A'^{-1}(B S_k) with A' = A + μB regular."""
    r = pencil_rank(P)
    A = None
    for mu in (0, 1, -1, 2, -2, 3, Fraction(1, 2), 5, 7):
        cand = P.at(mu) if mu else P.A
        if rank_exact(cand) == r:
            A = cand
            break
    if A is None or rank_exact(P.B) != r:
        raise PencilError("need regular A and B")
    S = kernel_basis(P.B, P.n)
    kerA = kernel_basis(A, P.n)
    while True:
        new = list(S) + kerA
        for v in S:
            w = solve(A, matvec(P.B, v))
            if w is not None:
                new.append(w)
        R, piv = rref(new) if new else ([], [])
        basis = R[: len(piv)]
        if len(basis) == (rank_exact(S) if S else 0):
            return basis
        S = basis


def is_bi_isotropic(P: Pencil, vectors: Sequence) -> bool:
    return all(
        form(P.A, u, v) == 0 and form(P.B, u, v) == 0 for u in vectors for v in vectors
    )
