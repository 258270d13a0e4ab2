"""Exact rational and Gaussian-rational roots of polynomials over Q.

Candidates come from high-precision numerical roots of the squarefree part;
every candidate is verified by exact evaluation, so a wrong guess can only
cause a root to be missed, never a false root.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

import mpmath

from .field import GaussRat, scalar_key
from .unipoly import UniPoly, squarefree_part


class NonSplitError(ValueError):
    """The polynomial has roots outside Q(i)."""


def _integer_poly(p: UniPoly) -> list[int]:
    den = lcm(*(Fraction(c).denominator for c in p.coeffs))
    return [int(Fraction(c) * den) for c in p.coeffs]


def numeric_roots(p: UniPoly, dps: int | None = None):
    coeffs = _integer_poly(p)
    size = max(len(str(abs(c))) for c in coeffs)
    dps = dps or max(60, 4 * size + 10 * len(coeffs))
    with mpmath.workdps(dps):
        return mpmath.polyroots(list(reversed(coeffs)), maxsteps=400, extraprec=4 * dps)


def exact_roots(p: UniPoly) -> list:
    """Distinct roots of p lying in Q(i), sorted by (re, im).

    Rational roots are returned as Fractions, others as GaussRats.
    """
    if p.is_zero():
        raise ValueError("roots of the zero polynomial")
    q = squarefree_part(p)
    if q.degree() <= 0:
        return []
    if q.degree() == 1:
        return [-q[0] / q[1]]
    ints = _integer_poly(q)
    c = abs(ints[-1])
    found = []
    for z in numeric_roots(q):
        re = Fraction(int(mpmath.nint(mpmath.re(z) * c)), c)
        im = Fraction(int(mpmath.nint(mpmath.im(z) * c)), c)
        cand = re if im == 0 else GaussRat(re, im)
        if q(cand) == 0 and cand not in found:
            found.append(cand)
    return sorted(found, key=scalar_key)


def split_roots(p: UniPoly) -> list:
    """All distinct roots of p; raises NonSplitError unless p splits over Q(i)."""
    roots = exact_roots(p)
    if len(roots) != max(squarefree_part(p).degree(), 0):
        raise NonSplitError(f"{p} does not split over Q(i)")
    return roots


def multiplicity(p: UniPoly, root) -> int:
    lin = UniPoly([-root, 1])
    k = 0
    while not p.is_zero() and lin.divides(p):
        p = p.exact_div(lin)
        k += 1
    return k
