"""Dense univariate polynomials in λ over Q or Q(i)."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .field import fmt_scalar

#: degree reported for the zero polynomial
ZERO_DEGREE = -1


def _strip(coeffs):
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class UniPoly:
    """Polynomial sum(coeffs[k] * λ**k); immutable.

    Coefficients may be Fractions or GaussRats (mixing promotes to GaussRat).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _strip(c if not isinstance(c, int) else Fraction(c) for c in coeffs)

    @classmethod
    def const(cls, c) -> UniPoly:
        return cls([c])

    @classmethod
    def lam(cls) -> UniPoly:
        return cls([0, 1])

    @classmethod
    def linear(cls, a, b) -> UniPoly:
        """a + b λ"""
        return cls([a, b])

    @classmethod
    def from_roots(cls, roots) -> UniPoly:
        out = cls([1])
        for r in roots:
            out = out * cls([-r, 1])
        return out

    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    @staticmethod
    def _wrap(other):
        if isinstance(other, UniPoly):
            return other
        return UniPoly([other])

    def __add__(self, other):
        o = self._wrap(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return UniPoly(self[k] + o[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return UniPoly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out, base = UniPoly([1]), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __divmod__(self, other: UniPoly):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree()
        inv_lc = Fraction(1) / other.lc()
        quo = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            f = c * inv_lc
            quo[k - dq] = f
            for j, oc in enumerate(other.coeffs):
                rem[k - dq + j] = rem[k - dq + j] - f * oc
        return UniPoly(quo), UniPoly(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: UniPoly) -> UniPoly:
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def divides(self, other: UniPoly) -> bool:
        """True if self | other."""
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    def monic(self) -> UniPoly:
        if self.is_zero():
            return self
        lc = self.lc()
        if lc == 1:
            return self
        return UniPoly(c / lc for c in self.coeffs)

    def derivative(self) -> UniPoly:
        return UniPoly(k * c for k, c in enumerate(self.coeffs) if k)

    def __call__(self, t):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return self.coeffs == UniPoly([other]).coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({self})"

    def __str__(self):
        return self.to_str("λ")

    def to_str(self, var: str = "λ") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else var if k == 1 else f"{var}^{k}"
            cs = fmt_scalar(c)
            complex_coeff = ("i" in cs) and ("+" in cs[1:] or "-" in cs[1:])
            if complex_coeff:
                cs = f"({cs})"
            if mono:
                if cs == "1":
                    term = mono
                elif cs == "-1":
                    term = "-" + mono
                else:
                    term = f"{cs}*{mono}"
            else:
                term = cs
            parts.append(term)
        s = parts[0]
        for t in parts[1:]:
            s += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return s


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd; gcd(0, 0) = 0."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_gcd_many(polys: Iterable[UniPoly]) -> UniPoly:
    g = UniPoly()
    for p in polys:
        g = poly_gcd(g, p)
        if g.degree() == 0:
            break
    return g


def squarefree_decompose(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm: pairs (q_e, e) with p = lc * prod q_e**e."""
    if p.is_zero():
        raise ValueError("squarefree decomposition of the zero polynomial")
    f = p.monic()
    out = []
    if f.degree() == 0:
        return out
    df = f.derivative()
    a0 = poly_gcd(f, df)
    b = f.exact_div(a0)
    c = df.exact_div(a0)
    d = c - b.derivative()
    e = 1
    while b.degree() > 0:
        a = poly_gcd(b, d)
        if a.degree() > 0:
            out.append((a, e))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        e += 1
    return out


def squarefree_part(p: UniPoly) -> UniPoly:
    out = UniPoly([1])
    for q, _ in squarefree_decompose(p):
        out = out * q
    return out


def interpolate(points: Sequence, values: Sequence) -> UniPoly:
    """Newton interpolation through (points[k], values[k])."""
    n = len(points)
    coef = list(values)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (points[i] - points[i - j])
    out = UniPoly([coef[-1]]) if n else UniPoly()
    for k in range(n - 2, -1, -1):
        out = out * UniPoly([-points[k], 1]) + coef[k]
    return out


def poly_xgcd(p: UniPoly, q: UniPoly) -> tuple[UniPoly, UniPoly, UniPoly]:
    """(g, s, t) with s*p + t*q = g, g monic (or zero)."""
    r0, r1 = p, q
    s0, s1 = UniPoly([1]), UniPoly()
    t0, t1 = UniPoly(), UniPoly([1])
    while not r1.is_zero():
        quo, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    if r0.is_zero():
        return r0, s0, t0
    lc = r0.lc()
    return r0.monic(), UniPoly(c / lc for c in s0.coeffs), UniPoly(c / lc for c in t0.coeffs)
