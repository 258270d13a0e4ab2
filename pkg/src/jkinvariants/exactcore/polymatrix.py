"""Matrices over Q[λ] and their Smith normal form."""

from __future__ import annotations

from .unipoly import UniPoly

MatUniPoly = list  # list[list[UniPoly]]


def pencil_matrix(A, B) -> MatUniPoly:
    """Entrywise A + λB."""
    return [[UniPoly([a, b]) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def evaluate(P: MatUniPoly, t):
    return [[p(t) for p in row] for row in P]


def _min_degree_entry(M, rows, cols):
    best = None
    for i in rows:
        for j in cols:
            d = M[i][j].degree()
            if d >= 0 and (best is None or d < best[0]):
                best = (d, i, j)
                if d == 0:
                    return best
    return best


def smith_normal_form(P: MatUniPoly) -> tuple[tuple[UniPoly, ...], int]:
    """Monic invariant factors s_1 | s_2 | ... | s_r and the rank r.

    Pivot: nonzero entry of minimal degree, ties broken by smallest (row, col).
    """
    M = [list(row) for row in P]
    m = len(M)
    n = len(M[0]) if m else 0
    factors = []
    t = 0
    while t < min(m, n):
        found = _min_degree_entry(M, range(t, m), range(t, n))
        if found is None:
            break
        _, i, j = found
        M[t], M[i] = M[i], M[t]
        for row in M:
            row[t], row[j] = row[j], row[t]
        while True:
            piv = M[t][t]
            dirty = False
            prow = M[t]
            for i in range(t + 1, m):
                e = M[i][t]
                if e.is_zero():
                    continue
                q, r = divmod(e, piv)
                row = M[i]
                for k in range(t, n):
                    if not prow[k].is_zero():
                        row[k] = row[k] - q * prow[k]
                if not r.is_zero():
                    dirty = True
            for j in range(t + 1, n):
                e = M[t][j]
                if e.is_zero():
                    continue
                q, r = divmod(e, piv)
                for k in range(t, m):
                    if not M[k][t].is_zero():
                        M[k][j] = M[k][j] - q * M[k][t]
                if not r.is_zero():
                    dirty = True
            if dirty:
                cand = [(M[t][k].degree(), t, k) for k in range(t, n) if not M[t][k].is_zero()]
                cand += [(M[k][t].degree(), k, t) for k in range(t + 1, m) if not M[k][t].is_zero()]
                _, i, j = min(cand)
                M[t], M[i] = M[i], M[t]
                for row in M:
                    row[t], row[j] = row[j], row[t]
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n)
                 if not M[i][j].is_zero() and not piv.divides(M[i][j])),
                None,
            )
            if bad is None:
                break
            M[t] = [a + b for a, b in zip(M[t], M[bad])]
        factors.append(M[t][t].monic())
        t += 1
    return tuple(factors), len(factors)
