"""Matrix realisations of the parametric families (semisimple, semidirect, Kozlov, ...)."""

from __future__ import annotations

from fractions import Fraction

from ..liealg import StructureConstants, from_matrices, z2_contraction


def unit(n: int, i: int, j: int):
    """Matrix unit E_ij (0-based)."""
    M = [[Fraction(0)] * n for _ in range(n)]
    M[i][j] = Fraction(1)
    return M


def _add(*mats):
    n = len(mats[0])
    return [[sum((M[i][j] for M in mats), Fraction(0)) for j in range(n)] for i in range(n)]


def _neg(M):
    return [[-v for v in row] for row in M]


def sl(n: int) -> StructureConstants:
    mats = [unit(n, i, j) for i in range(n) for j in range(n) if i != j]
    mats += [_add(unit(n, i, i), _neg(unit(n, i + 1, i + 1))) for i in range(n - 1)]
    return from_matrices(mats, name=f"sl{n}")


def so_basis(n: int):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def so(n: int) -> StructureConstants:
    mats = [_add(unit(n, i, j), _neg(unit(n, j, i))) for i, j in so_basis(n)]
    return from_matrices(mats, name=f"so{n}")


def sp4() -> StructureConstants:
    """sp(4) as [[A, B], [C, -A^T]] with B, C symmetric 2x2."""
    mats = []
    for i in range(2):
        for j in range(2):
            mats.append(_add(unit(4, i, j), _neg(unit(4, 2 + j, 2 + i))))
    for i in range(2):
        for j in range(i, 2):
            mats.append(_add(unit(4, i, 2 + j), unit(4, j, 2 + i)) if i != j else unit(4, i, 2 + i))
    for i in range(2):
        for j in range(i, 2):
            mats.append(_add(unit(4, 2 + i, j), unit(4, 2 + j, i)) if i != j else unit(4, 2 + i, i))
    return from_matrices(mats, name="sp4")


def euclidean(n: int) -> StructureConstants:
    """e(n) = so(n) + R^n as [[M, v], [0, 0]]."""
    m = n + 1
    mats = [_add(unit(m, i, j), _neg(unit(m, j, i))) for i, j in so_basis(n)]
    mats += [unit(m, i, n) for i in range(n)]
    return from_matrices(mats, name=f"e{n}")


def euclidean_by_contraction(n: int) -> StructureConstants:
    """Contract so(n+1) along the symmetric pair so(n) + R^n (rotations fixing e_{n+1})."""
    g = so(n + 1)
    k = [idx for idx, (i, j) in enumerate(so_basis(n + 1)) if j < n]
    h = z2_contraction(g, k)
    h.name = f"e{n}_contracted"
    return h


def aff(n: int) -> StructureConstants:
    """gl(n) + R^n as [[M, v], [0, 0]]; coordinates M_ij row-major, then v."""
    m = n + 1
    mats = [unit(m, i, j) for i in range(n) for j in range(n)]
    mats += [unit(m, i, n) for i in range(n)]
    return from_matrices(mats, name=f"aff{n}")


def gl_plus_matrices(n: int) -> StructureConstants:
    """gl(n) + R^{n^2} as [[A, C], [0, 0]] with n x n blocks; A row-major, then C row-major."""
    m = 2 * n
    mats = [unit(m, i, j) for i in range(n) for j in range(n)]
    mats += [unit(m, i, n + j) for i in range(n) for j in range(n)]
    return from_matrices(mats, name=f"gl{n}_plus_R{n * n}")


def upper_triangular(n: int) -> StructureConstants:
    mats = [unit(n, i, j) for i in range(n) for j in range(i, n)]
    return from_matrices(mats, name=f"t{n}")


def heisenberg(n: int) -> StructureConstants:
    """Basis e_1..e_n, f_1..f_n, h with [e_i, f_i] = h."""
    d = 2 * n + 1
    c = {(i, n + i): {d - 1: 1} for i in range(n)}
    return StructureConstants(d, c, name=f"heisenberg{n}")


def kozlov_kronecker(k: int) -> StructureConstants:
    """Basis e_1..e_k, f_1..f_{k+1}: e_i = E_ii - E_{i+1,i+1} acting on the last column f_j = E_{j,k+2}."""
    m = k + 2
    mats = [_add(unit(m, i, i), _neg(unit(m, i + 1, i + 1))) for i in range(k)]
    mats += [unit(m, j, k + 1) for j in range(k + 1)]
    return from_matrices(mats, name=f"kozlov_kronecker{k}")


def kozlov_frobenius(sizes) -> StructureConstants:
    """Frobenius algebra with Jordan blocks 2(n_1+1), 2n_2, ..., 2n_m (n_1 the largest).

    Basis order: a_0, the rows x_1..x_m, b_0, the columns y_1..y_m.
    """
    sizes = list(sizes)
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError("block sizes must be positive")
    total = sum(sizes)
    m = total + 2
    offsets = []
    pos = 1
    for s in sizes:
        offsets.append(pos)
        pos += s
    a0 = _add(*([unit(m, 0, 0)] + [unit(m, r, r) for r in range(1, total + 1)]))
    mats = [a0]
    for off, s in zip(offsets, sizes):
        for j in range(s):
            parts = [unit(m, 0, off + j)]
            # x_k^{j+1} sits on the (j+1)-th superdiagonal of A_k
            parts += [unit(m, off + r, off + r + j + 1) for r in range(s - j - 1)]
            mats.append(_add(*parts))
    mats.append(unit(m, 0, m - 1))
    for off, s in zip(offsets, sizes):
        mats += [unit(m, off + r, m - 1) for r in range(s)]
    name = "kozlov_frobenius" + "_".join(str(s) for s in sizes)
    return from_matrices(mats, name=name)


def _coordinate_grid(n: int, offset: int, nvars: int):
    from ..exactcore.multipoly import MultiPoly

    return [[MultiPoly.var(nvars, offset + i * n + j) for j in range(n)] for i in range(n)]


def _poly_det(M):
    """Determinant of a small matrix of MultiPoly entries by cofactor expansion."""
    n = len(M)
    if n == 1:
        return M[0][0]
    total = None
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * _poly_det(minor)
        total = term if total is None else (total - term if j % 2 else total + term)
    return total


def aff_invariant(n: int):
    """det(v, Mv, ..., M^{n-1} v) on aff(n)*, with M_ij the coordinate dual to E_ij."""
    from ..exactcore.multipoly import MultiPoly

    nvars = n * n + n
    M = _coordinate_grid(n, 0, nvars)
    v = [MultiPoly.var(nvars, n * n + i) for i in range(n)]
    cols = [v]
    for _ in range(n - 1):
        prev = cols[-1]
        cols.append([sum((M[i][k] * prev[k] for k in range(n)), MultiPoly(nvars)) for i in range(n)])
    return _poly_det([[cols[j][i] for j in range(n)] for i in range(n)])


def gl_plus_invariant(n: int):
    """det C on (gl(n) + R^{n^2})*."""
    nvars = 2 * n * n
    return _poly_det(_coordinate_grid(n, n * n, nvars))
