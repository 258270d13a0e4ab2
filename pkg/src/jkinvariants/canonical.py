"""Explicit canonical bases for pencils of skew forms.

Blocks (basis order inside a block in brackets):

* Kronecker, index k  [u_1..u_{k-1}, w_1..w_k]:
  A(u_i, w_j) = δ_ij,  B(u_i, w_j) = δ_{i+1,j}.
* Jordan at λ_0, size d  [p_1..p_d, q_1..q_d]:
  A(p_i, q_j) = J(λ_0)_ij,  B(p_i, q_j) = -δ_ij.
* infinite, size d  [p_1..p_d, q_1..q_d]:
  A(p_i, q_j) = -δ_ij,  B(p_i, q_j) = J(0)_ij.

All remaining entries vanish apart from skew-symmetry.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactcore.field import GaussRat, fmt_scalar, scalar_key
from .exactcore.matrix import (
    det,
    form,
    inverse,
    kernel_basis,
    lin_comb,
    matmul,
    matvec,
    rank_exact,
    solve,
    transpose,
    zeros,
)
from .exactcore.roots import NonSplitError, split_roots
from .liealg import Subspace
from .pencil import (
    InconsistentProfileError,
    Pencil,
    PencilError,
    characteristic_polynomial,
    corank,
    toeplitz_stack,
)


@dataclass(frozen=True)
class Block:
    kind: str  # "kronecker" | "jordan" | "infinite"
    size: int  # k for Kronecker, d for Jordan/infinite
    root: object = None

    @property
    def dim(self) -> int:
        return 2 * self.size - 1 if self.kind == "kronecker" else 2 * self.size

    def describe(self) -> str:
        if self.kind == "kronecker":
            return f"K(k={self.size})"
        if self.kind == "jordan":
            return f"J(λ={fmt_scalar(self.root)}, d={self.size})"
        return f"J(λ=∞, d={self.size})"


@dataclass
class CanonicalForm:
    T: list  # columns are the new basis vectors
    blocks: list
    A: list
    B: list
    field: str

    def columns(self) -> list:
        return [list(c) for c in zip(*self.T)]


def block_matrices(block: Block):
    m = block.dim
    A, B = zeros(m), zeros(m)
    if block.kind == "kronecker":
        k = block.size
        for i in range(k - 1):
            A[i][k - 1 + i] = Fraction(1)
            B[i][k - 1 + i + 1] = Fraction(1)
    else:
        d = block.size
        for i in range(d):
            for j in range(d):
                if block.kind == "jordan":
                    a = (block.root if i == j else 0) + (1 if j == i + 1 else 0)
                    b = -1 if i == j else 0
                else:
                    a = -1 if i == j else 0
                    b = 1 if j == i + 1 else 0
                A[i][d + j] = a if isinstance(a, (Fraction, GaussRat)) else Fraction(a)
                B[i][d + j] = Fraction(b)
    for i in range(m):
        for j in range(i + 1, m):
            A[j][i] = -A[i][j]
            B[j][i] = -B[i][j]
    return A, B


def direct_sum_matrices(blocks: Sequence[Block]):
    n = sum(b.dim for b in blocks)
    A, B = zeros(n), zeros(n)
    off = 0
    for b in blocks:
        Ab, Bb = block_matrices(b)
        for i in range(b.dim):
            for j in range(b.dim):
                A[off + i][off + j] = Ab[i][j]
                B[off + i][off + j] = Bb[i][j]
        off += b.dim
    return A, B


# -- helpers on local coordinates --------------------------------------------


def _restrict(M, basis):
    """Gram matrix of the form M on the given vectors."""
    Mb = [matvec(M, v) for v in basis]
    return [[sum((a * b for a, b in zip(u, mv) if a != 0 and b != 0), Fraction(0)) for mv in Mb]
            for u in basis]


def _combine(Y, coords):
    """Vector sum_t coords[t] * Y[t]."""
    n = len(Y[0])
    out = [Fraction(0)] * n
    for c, y in zip(coords, Y):
        if c != 0:
            for i in range(n):
                if y[i] != 0:
                    out[i] = out[i] + c * y[i]
    return out


def _min_kernel_vector(A, B):
    """Coefficients [v_0..v_ε] of a minimal-degree polynomial kernel vector."""
    P = Pencil(A, B)
    n = P.n
    for k in range(1, n + 2):
        K = kernel_basis(toeplitz_stack(P, k), k * n)
        if K:
            v = K[0]
            return [v[t * n:(t + 1) * n] for t in range(k)]
    raise InconsistentProfileError("no polynomial kernel vector found")


def _split_kronecker(A, B):
    """One Kronecker block in local coordinates: (k, S vectors, complement basis)."""
    m = len(A)
    coeffs = _min_kernel_vector(A, B)
    k = len(coeffs)
    w = [None] * (k + 1)
    for t, v in enumerate(coeffs):
        w[k - t] = [((-1) ** t) * e for e in v]
    w = w[1:]
    if k == 1:
        S = [w[0]]
        comp = []
        for j in range(m):
            e = [Fraction(int(i == j)) for i in range(m)]
            if rank_exact(S + comp + [e]) > len(S) + len(comp):
                comp.append(e)
        return k, S, comp
    Aw = [matvec(A, x) for x in w]
    Bw = [matvec(B, x) for x in w]
    nu = k - 1
    rows, rhs = [], []
    for i in range(nu):
        for j in range(k):
            for vec, target in ((Aw[j], int(i == j)), (Bw[j], int(i + 1 == j))):
                row = [Fraction(0)] * (nu * m)
                row[i * m:(i + 1) * m] = vec
                rows.append(row)
                rhs.append(Fraction(target))
    for i in range(1, nu):
        for r in range(m):
            row = [Fraction(0)] * (nu * m)
            row[i * m:(i + 1) * m] = A[r]
            row[(i - 1) * m:i * m] = [-b for b in B[r]]
            rows.append(row)
            rhs.append(Fraction(0))
    sol = solve(rows, rhs)
    if sol is None:
        raise InconsistentProfileError("Kronecker partner vectors not found")
    u = [sol[i * m:(i + 1) * m] for i in range(nu)]
    S = u + w
    cons = [matvec(transpose(A), s) for s in S] + [matvec(transpose(B), s) for s in S]
    comp = kernel_basis(cons, m)
    if len(comp) != m - len(S):
        raise InconsistentProfileError("Kronecker block has no orthogonal complement")
    return k, S, comp


def _symplectic_jordan(Af, Bf, rho):
    """Jordan chains of R = Bf^{-1} Af at eigenvalue rho on a space where
    R - rho is nilpotent and Bf is nondegenerate.

    Returns a list of (d, [p_1..p_d], [q_1..q_d]) in local coordinates."""
    m = len(Af)
    R = matmul(inverse(Bf), Af)
    N = [[R[i][j] - (rho if i == j else 0) for j in range(m)] for i in range(m)]

    def Nv(v):
        return matvec(N, v)

    def bf(u, v):
        return form(Bf, u, v)

    W = [[Fraction(int(i == j)) for i in range(m)] for j in range(m)]
    out = []
    while W:
        # nilpotency index on W
        d, cur = 0, list(W)
        while any(any(e != 0 for e in v) for v in cur):
            cur = [Nv(v) for v in cur]
            d += 1
        x = None
        for v in W:
            t = v
            for _ in range(d - 1):
                t = Nv(t)
            if any(e != 0 for e in t):
                x, top = v, t
                break
        y = next(v for v in W if bf(top, v) != 0)
        h, t = [], y
        for _ in range(d):
            h.append(bf(x, t))
            t = Nv(t)
        c = [Fraction(0)] * d
        c[0] = Fraction((-1) ** d) / h[d - 1]
        for s in range(1, d):
            acc = sum((c[t] * h[d - 1 - s + t] for t in range(s)), Fraction(0))
            c[s] = -acc / h[d - 1]
        yp, t = [Fraction(0)] * m, y
        for s in range(d):
            yp = [a + c[s] * b for a, b in zip(yp, t)]
            t = Nv(t)
        ps = [x]
        for _ in range(d - 1):
            ps.append([-e for e in Nv(ps[-1])])
        qs = [yp]  # q_d
        for _ in range(d - 1):
            qs.append([-e for e in Nv(qs[-1])])
        qs.reverse()
        out.append((d, ps, qs))
        used = ps + qs
        cons = [[bf(wv, z) for wv in W] for z in used]
        coeffs = kernel_basis(cons, len(W))
        W = [_combine(W, cf) for cf in coeffs]
    return out


def _regular_split(A, B):
    """Fitting decomposition of a regular pencil: (finite basis, infinite basis)."""
    m = len(A)
    C = None
    for mu in (0, 1, -1, 2, -2, 3, -3, 5, 7, 11):
        cand = lin_comb(1, A, mu, B) if mu else A
        if rank_exact(cand) == m:
            C = cand
            break
    if C is None:
        raise InconsistentProfileError("regular part has no nondegenerate member")
    M = matmul(inverse(C), B)
    Mp = M
    for _ in range(m - 1):
        Mp = matmul(Mp, M)
    infinite = kernel_basis(Mp, m)
    image = [list(c) for c in zip(*Mp)] if m else []
    from .exactcore.matrix import span_basis

    finite = span_basis(image) if any(any(e != 0 for e in c) for c in image) else []
    return finite, infinite


def canonicalize(P: Pencil, field: str | None = None) -> CanonicalForm:
    """Congruence T with T^T (A + λB) T in canonical block form, verified exactly."""
    n = P.n
    p = characteristic_polynomial(P)
    roots = split_roots(p) if p.degree() > 0 else []
    gaussian = any(isinstance(r, GaussRat) for r in roots)
    if gaussian and field == "Q":
        raise NonSplitError(f"characteristic polynomial {p} does not split over Q")
    fld = "Qi" if gaussian or field == "Qi" else "Q"

    kron: list = []  # (k, vectors in original coordinates)
    Y = [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    A, B = P.A, P.B
    while Y and corank(Pencil(A, B)) > 0:
        k, S, comp = _split_kronecker(A, B)
        kron.append((k, [_combine(Y, s) for s in S]))
        Y = [_combine(Y, c) for c in comp]
        A, B = _restrict(P.A, Y), _restrict(P.B, Y)

    jordan: list = []  # (root, d, vectors)
    infinite: list = []
    if Y:
        fin, inf = _regular_split(A, B)
        if fin:
            Yf = [_combine(Y, c) for c in fin]
            Af, Bf = _restrict(P.A, Yf), _restrict(P.B, Yf)
            Rm = matmul(inverse(Bf), Af)
            mloc = len(Yf)
            for lam in roots:
                rho = -lam
                Nm = [[Rm[i][j] - (rho if i == j else 0) for j in range(mloc)] for i in range(mloc)]
                Np = Nm
                for _ in range(mloc - 1):
                    Np = matmul(Np, Nm)
                G = kernel_basis(Np, mloc)
                if not G:
                    continue
                Yg = [_combine(Yf, g) for g in G]
                Ag, Bg = _restrict(P.A, Yg), _restrict(P.B, Yg)
                for d, ps, qs in _symplectic_jordan(Ag, Bg, rho):
                    jordan.append((lam, d, [_combine(Yg, v) for v in ps + qs]))
        if inf:
            Yi = [_combine(Y, c) for c in inf]
            Ai, Bi = _restrict(P.A, Yi), _restrict(P.B, Yi)
            for d, ps, qs in _symplectic_jordan(Bi, Ai, Fraction(0)):
                infinite.append((d, [_combine(Yi, v) for v in ps + qs]))

    kron.sort(key=lambda t: -t[0])
    jordan.sort(key=lambda t: (scalar_key(t[0]), -t[1]))
    infinite.sort(key=lambda t: -t[0])
    blocks, cols = [], []
    for k, vs in kron:
        blocks.append(Block("kronecker", k))
        cols.extend(vs)
    for lam, d, vs in jordan:
        blocks.append(Block("jordan", d, lam))
        cols.extend(vs)
    for d, vs in infinite:
        blocks.append(Block("infinite", d))
        cols.extend(vs)
    if len(cols) != n:
        raise InconsistentProfileError(f"canonical basis has {len(cols)} vectors for dimension {n}")
    T = [list(r) for r in zip(*cols)] if cols else []
    Acan, Bcan = direct_sum_matrices(blocks)
    if n:
        if det(T) == 0:
            raise InconsistentProfileError("canonical transform is singular")
        TA = _restrict(P.A, cols)
        TB = _restrict(P.B, cols)
        if TA != Acan or TB != Bcan:
            raise InconsistentProfileError("canonical congruence check failed")
    return CanonicalForm(T, blocks, Acan, Bcan, fld)


def bi_lagrangian(P: Pencil, field: str | None = None) -> Subspace:
    """A subspace of dimension (n + corank)/2 isotropic for every form of the pencil."""
    cf = canonicalize(P, field)
    cols = cf.columns()
    chosen = []
    off = 0
    for b in cf.blocks:
        if b.kind == "kronecker":
            chosen.extend(cols[off + b.size - 1: off + b.dim])  # the w vectors
        else:
            chosen.extend(cols[off + b.size: off + b.dim])  # the q vectors
        off += b.dim
    target = (P.n + corank(P)) // 2
    if len(chosen) != target:
        raise InconsistentProfileError(f"bi-Lagrangian subspace has dim {len(chosen)} != {target}")
    checks = [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)),
              (Fraction(3), Fraction(-2)), (Fraction(5), Fraction(7)), (Fraction(-1, 2), Fraction(11))]
    for al, be in checks:
        M = lin_comb(al, P.A, be, P.B)
        if any(form(M, u, v) != 0 for u in chosen for v in chosen):
            raise InconsistentProfileError("bi-Lagrangian check failed")
    return Subspace(tuple(tuple(v) for v in chosen))


__all__ = [
    "Block",
    "CanonicalForm",
    "NonSplitError",
    "PencilError",
    "bi_lagrangian",
    "block_matrices",
    "canonicalize",
    "direct_sum_matrices",
]
