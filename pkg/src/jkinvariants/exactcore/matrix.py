"""Exact dense matrices as lists of rows.

Entries are Fractions, or GaussRats when working over Q(i).  Functions here
never mutate their arguments.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Sequence

from .field import GaussRat, Q

Matrix = list  # list[list[Scalar]]
Vector = list


def to_matrix(rows) -> Matrix:
    return [[e if isinstance(e, (Fraction, GaussRat)) else Q(e) for e in row] for row in rows]


def zeros(m: int, n: int | None = None) -> Matrix:
    n = m if n is None else n
    return [[Fraction(0)] * n for _ in range(m)]


def identity(n: int) -> Matrix:
    out = zeros(n)
    for i in range(n):
        out[i][i] = Fraction(1)
    return out


def shape(M: Matrix) -> tuple[int, int]:
    return len(M), (len(M[0]) if M else 0)


def transpose(M: Matrix) -> Matrix:
    return [list(col) for col in zip(*M)] if M else []


def matmul(A: Matrix, B: Matrix) -> Matrix:
    Bt = transpose(B)
    out = []
    for row in A:
        nz = [(k, a) for k, a in enumerate(row) if a != 0]
        out.append([sum((a * col[k] for k, a in nz), Fraction(0)) for col in Bt])
    if not A:
        return []
    if not Bt:
        return [[] for _ in A]
    return out


def matvec(A: Matrix, v: Sequence) -> Vector:
    return [sum((a * x for a, x in zip(row, v) if a != 0 and x != 0), Fraction(0)) for row in A]


def vecmat(v: Sequence, A: Matrix) -> Vector:
    return matvec(transpose(A), v)


def dot(u: Sequence, v: Sequence):
    return sum((a * b for a, b in zip(u, v) if a != 0 and b != 0), Fraction(0))


def form(M: Matrix, u: Sequence, v: Sequence):
    """Bilinear form u^T M v."""
    return dot(u, matvec(M, v))


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(A: Matrix, c) -> Matrix:
    return [[a * c for a in row] for row in A]


def lin_comb(alpha, A: Matrix, beta, B: Matrix) -> Matrix:
    return [[alpha * a + beta * b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def congruence(T: Matrix, M: Matrix) -> Matrix:
    """T^T M T."""
    return matmul(transpose(T), matmul(M, T))


def columns_to_matrix(vectors: Sequence[Sequence], nrows: int | None = None) -> Matrix:
    """Matrix whose columns are the given vectors."""
    if not vectors:
        return [[] for _ in range(nrows or 0)]
    return [list(r) for r in zip(*vectors)]


def is_skew(M: Matrix) -> bool:
    n, m = shape(M)
    if n != m:
        return False
    return all(M[i][j] == -M[j][i] for i in range(n) for j in range(i, n))


def is_zero_matrix(M: Matrix) -> bool:
    return all(e == 0 for row in M for e in row)


def _all_rational(M) -> bool:
    return all(isinstance(e, (Fraction, int)) for row in M for e in row)


def _integer_rows(M: Matrix) -> list[list[int]]:
    out = []
    for row in M:
        den = lcm(*(Fraction(e).denominator for e in row)) if row else 1
        out.append([int(Fraction(e) * den) for e in row])
    return out


def _bareiss(rows: list[list[int]]) -> tuple[int, int]:
    """Fraction-free elimination in place; returns (rank, sign * last pivot)."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    r, prev, sign = 0, 1, 1
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
            sign = -sign
        piv = rows[r][c]
        prow = rows[r]
        for i in range(r + 1, m):
            row = rows[i]
            f = row[c]
            for j in range(c + 1, n):
                row[j] = (piv * row[j] - f * prow[j]) // prev
            row[c] = 0
        prev = piv
        r += 1
    return r, sign * prev


def rank_exact(M: Matrix) -> int:
    """Exact rank (fraction-free Bareiss over Z for rational input)."""
    if not M or not M[0]:
        return 0
    if _all_rational(M):
        rows = _integer_rows(M)
        return _bareiss(rows)[0]
    return len(rref(M)[1])


def det(M: Matrix):
    n, m = shape(M)
    if n != m:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    if _all_rational(M):
        dens = [lcm(*(Fraction(e).denominator for e in row)) for row in M]
        rows = _integer_rows(M)
        r, d = _bareiss(rows)
        if r < n:
            return Fraction(0)
        scale = 1
        for x in dens:
            scale *= x
        return Fraction(d, scale)
    R = [list(row) for row in M]
    out = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if R[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            R[c], R[p] = R[p], R[c]
            out = -out
        piv = R[c][c]
        out = out * piv
        inv = Fraction(1) / piv
        for i in range(c + 1, n):
            f = R[i][c] * inv
            if f != 0:
                R[i] = [a - f * b for a, b in zip(R[i], R[c])]
    return out


def rref(M: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    R = [list(row) for row in M]
    m, n = shape(R)
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if R[i][c] != 0), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        inv = Fraction(1) / R[r][c]
        R[r] = [e * inv for e in R[r]]
        for i in range(m):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [a - f * b for a, b in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
    return R, pivots


def normalize_vector(v: Vector) -> Vector:
    """Rational vectors: primitive integer vector, first nonzero entry positive.
    Gaussian vectors: first nonzero entry scaled to 1."""
    if all(isinstance(e, Fraction) for e in v):
        den = lcm(*(e.denominator for e in v))
        ints = [int(e * den) for e in v]
        g = 0
        for k in ints:
            g = gcd(g, k)
        if g == 0:
            return [Fraction(0)] * len(v)
        first = next(k for k in ints if k)
        if first < 0:
            g = -g
        return [Fraction(k // g) for k in ints]
    lead = next((e for e in v if e != 0), None)
    if lead is None:
        return list(v)
    inv = Fraction(1) / lead
    return [e * inv for e in v]


def kernel_basis(M: Matrix, ncols: int | None = None) -> list[Vector]:
    """Basis of the right kernel, one vector per free column."""
    n = ncols if ncols is not None else (len(M[0]) if M else 0)
    if not M:
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    R, pivots = rref(M)
    pivset = set(pivots)
    basis = []
    for f in range(n):
        if f in pivset:
            continue
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -R[r][f]
        basis.append(normalize_vector(v))
    return basis


def solve(M: Matrix, b: Sequence) -> Vector | None:
    """One solution of M v = b (free variables set to zero), or None."""
    m, n = shape(M)
    aug = [list(row) + [bi] for row, bi in zip(M, b)]
    R, pivots = rref(aug)
    if n in pivots:
        return None
    v = [Fraction(0)] * n
    for r, pc in enumerate(pivots):
        v[pc] = R[r][n]
    return v


def inverse(M: Matrix) -> Matrix:
    n = len(M)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in R]


def span_basis(vectors: Sequence[Vector]) -> list[Vector]:
    """Independent subset-free basis of span(vectors) (rows of the RREF)."""
    if not vectors:
        return []
    R, pivots = rref([list(v) for v in vectors])
    return [R[i] for i in range(len(pivots))]


def complement_basis(vectors: Sequence[Vector], n: int) -> list[Vector]:
    """Standard basis vectors completing span(vectors) to the whole space."""
    if not vectors:
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    _, pivots = rref([list(v) for v in vectors])
    ps = set(pivots)
    return [[Fraction(int(i == j)) for i in range(n)] for j in range(n) if j not in ps]


def pfaffian(M: Matrix):
    """Pfaffian by skew-symmetric elimination (congruences of determinant 1)."""
    n, m = shape(M)
    if n != m or not is_skew(M):
        raise ValueError("pfaffian needs a square skew-symmetric matrix")
    if n % 2:
        raise ValueError("pfaffian of odd size")
    A = [list(row) for row in M]
    pf = Fraction(1)
    idx = list(range(n))
    for k in range(0, n, 2):
        # pivot in row k among remaining columns
        rk = A[idx[k]]
        p = next((j for j in range(k + 1, n) if rk[idx[j]] != 0), None)
        if p is None:
            return Fraction(0)
        if p != k + 1:
            idx[k + 1], idx[p] = idx[p], idx[k + 1]
            pf = -pf
        i0, i1 = idx[k], idx[k + 1]
        a = A[i0][i1]
        pf = pf * a
        inv = Fraction(1) / a
        rest = idx[k + 2:]
        r0, r1 = A[i0], A[i1]
        for s, i in enumerate(rest):
            ci = r0[i]
            di = r1[i]
            if ci == 0 and di == 0:
                continue
            row = A[i]
            for j in rest[s + 1:]:
                upd = (r0[j] * di - ci * r1[j]) * inv
                if upd != 0:
                    row[j] = row[j] + upd
                    A[j][i] = -row[j]
    return pf


def pfaffian_expansion(M: Matrix):
    """Pfaffian by expansion along the first row; exponential, for cross-checks."""
    n = len(M)
    if n % 2:
        raise ValueError("pfaffian of odd size")

    def rec(ix):
        if not ix:
            return Fraction(1)
        i0 = ix[0]
        total = Fraction(0)
        for t in range(1, len(ix)):
            e = M[i0][ix[t]]
            if e == 0:
                continue
            sign = 1 if t % 2 == 1 else -1
            total = total + sign * e * rec(ix[1:t] + ix[t + 1:])
        return total

    return rec(tuple(range(n)))


def principal_submatrix(M: Matrix, idx: Sequence[int]) -> Matrix:
    return [[M[i][j] for j in idx] for i in idx]


def submatrix(M: Matrix, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
    return [[M[i][j] for j in cols] for i in rows]


def minors(M: Matrix, k: int):
    """All k x k minors (for brute-force cross-checks)."""
    m, n = shape(M)
    for rs in combinations(range(m), k):
        for cs in combinations(range(n), k):
            yield det(submatrix(M, rs, cs))
