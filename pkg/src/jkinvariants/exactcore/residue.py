"""Linear algebra over Q[t]/(q) for squarefree q, splitting q at zero divisors.

Q[t]/(q) is a product of number fields. Elimination proceeds as if it were a
field; when a pivot candidate shares a factor with q the modulus is split into
coprime parts and each part is continued separately, so every returned piece
has a well-defined rank at each of its roots.
"""

from __future__ import annotations

from fractions import Fraction

from .matrix import rank_exact
from .unipoly import UniPoly, poly_gcd, poly_xgcd


def reduce_matrix(M, q: UniPoly):
    return [[e % q if isinstance(e, UniPoly) else UniPoly([e]) % q for e in row] for row in M]


def _rank_pieces(M, q: UniPoly, start: int) -> list[tuple[UniPoly, int]]:
    rows = [list(r) for r in M]
    m = len(rows)
    n = len(rows[0]) if m else 0
    rank = start
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, m):
            e = rows[i][c]
            if e.is_zero():
                continue
            g = poly_gcd(e, q)
            if g.degree() > 0:
                # zero divisor: continue separately on the two coprime parts of q
                # rows above r are already in echelon form; only the rest needs more work
                q1, q2 = g, q.exact_div(g)
                rest = [row[c:] for row in rows[r:]]
                return (_rank_pieces(reduce_matrix(rest, q1), q1, rank)
                        + _rank_pieces(reduce_matrix(rest, q2), q2, rank))
            piv = i
            break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        _, inv, _ = poly_xgcd(rows[r][c], q)
        prow = [(e * inv) % q for e in rows[r]]
        rows[r] = prow
        nz = [k for k in range(c, n) if not prow[k].is_zero()]
        for i in range(r + 1, m):
            f = rows[i][c]
            if f.is_zero():
                continue
            row = rows[i]
            for k in nz:
                row[k] = (row[k] - f * prow[k]) % q
        r += 1
        rank += 1
        if r == m:
            break
    return [(q, rank)]


def rank_modulo(M, q: UniPoly) -> list[tuple[UniPoly, int]]:
    """Pieces (q_i, rank_i) with q = prod q_i and rank M(θ) = rank_i at every root θ of q_i.

    ``q`` must be squarefree of positive degree. Linear q is handled over Q directly.
    """
    q = q.monic()
    if q.degree() < 1:
        raise ValueError("modulus must have positive degree")
    if q.degree() == 1:
        theta = -q[0]
        vals = [[e(theta) if isinstance(e, UniPoly) else Fraction(e) for e in row] for row in M]
        return [(q, rank_exact(vals) if vals else 0)]
    return _rank_pieces(reduce_matrix(M, q), q, 0)
