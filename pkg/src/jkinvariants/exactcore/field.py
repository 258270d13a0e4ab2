"""Scalars: rationals (``fractions.Fraction``) and Gaussian rationals."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Union

Scalar = Union[Fraction, "GaussRat"]


def Q(value) -> Fraction:
    """Parse an int, Fraction or ``"num/den"`` string into a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def fmt_rat(q: Fraction) -> str:
    """Serialize a rational as ``num`` or ``num/den``."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class GaussRat:
    """Element re + i*im of Q(i) with Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussRat):
            re, im = re.re, re.im + Fraction(im)
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussRat):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussRat(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussRat(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussRat(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussRat(self.re * other, self.im * other)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussRat(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def conjugate(self) -> GaussRat:
        return GaussRat(self.re, -self.im)

    def inverse(self) -> GaussRat:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("GaussRat division by zero")
        return GaussRat(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("GaussRat division by zero")
            return GaussRat(self.re / other, self.im / other)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out, base = GaussRat(1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, GaussRat):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussRat({fmt_rat(self.re)}, {fmt_rat(self.im)})"

    def __str__(self):
        return fmt_scalar(self)

    def sort_key(self):
        return (self.re, self.im)


I = GaussRat(0, 1)


def is_gauss(x) -> bool:
    return isinstance(x, GaussRat)


def to_gauss(x) -> GaussRat:
    return x if isinstance(x, GaussRat) else GaussRat(x)


def real_if_possible(x):
    """Demote a GaussRat with zero imaginary part to a Fraction."""
    if isinstance(x, GaussRat) and x.im == 0:
        return x.re
    return x


def conj(x):
    return x.conjugate() if isinstance(x, GaussRat) else x


def scalar_key(x):
    """Lexicographic (re, im) ordering key."""
    if isinstance(x, GaussRat):
        return (x.re, x.im)
    return (Fraction(x), Fraction(0))


def fmt_scalar(x) -> str:
    if not isinstance(x, GaussRat):
        return fmt_rat(x)
    if x.im == 0:
        return fmt_rat(x.re)
    im = "i" if x.im == 1 else "-i" if x.im == -1 else f"{fmt_rat(x.im)}*i"
    if x.re == 0:
        return im
    sign = "" if im.startswith("-") else "+"
    return f"{fmt_rat(x.re)}{sign}{im}"


def parse_scalar(text: str):
    """Parse ``"p/q"``, ``"a+b*i"`` style strings produced by :func:`fmt_scalar`."""
    s = text.replace(" ", "")
    if "i" not in s:
        return Fraction(s)
    body = s.replace("*i", "i")
    # split at the last sign that is not the leading one
    cut = max(body.rfind("+", 1), body.rfind("-", 1))
    if cut > 0 and body[cut - 1] != "/":
        re_part, im_part = body[:cut], body[cut:]
    else:
        re_part, im_part = "0", body
    im_part = im_part[:-1]
    if im_part in ("", "+"):
        im_part = "1"
    elif im_part == "-":
        im_part = "-1"
    return GaussRat(Fraction(re_part), Fraction(im_part))
