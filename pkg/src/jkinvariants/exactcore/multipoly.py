"""Sparse multivariate polynomials in x1..xn with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Sequence

from .field import Q, fmt_rat, fmt_scalar


class MultiPoly:
    """Immutable sparse polynomial: ``{exponent tuple: coefficient}``."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple, object] | None = None):
        self.nvars = nvars
        clean = {}
        for exp, c in (terms or {}).items():
            if c == 0:
                continue
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} has length != {nvars}")
            clean[exp] = c if not isinstance(c, int) else Fraction(c)
        self.terms = clean

    @classmethod
    def const(cls, nvars: int, c) -> MultiPoly:
        return cls(nvars, {(0,) * nvars: Q(c) if isinstance(c, (int, str)) else c})

    @classmethod
    def var(cls, nvars: int, i: int) -> MultiPoly:
        """The coordinate x_{i+1} (0-based i)."""
        exp = [0] * nvars
        exp[i] = 1
        return cls(nvars, {tuple(exp): Fraction(1)})

    @classmethod
    def linear(cls, coeffs: Sequence) -> MultiPoly:
        n = len(coeffs)
        out = {}
        for i, c in enumerate(coeffs):
            if c:
                exp = [0] * n
                exp[i] = 1
                out[tuple(exp)] = c
        return cls(n, out)

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def _check(self, other: MultiPoly):
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def _wrap(self, other):
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        return MultiPoly.const(self.nvars, other)

    def __add__(self, other):
        o = self._wrap(other)
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return MultiPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self.nvars, out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return MultiPoly(self.nvars, {e: c / scalar for e, c in self.terms.items()})

    def __pow__(self, k: int):
        out = MultiPoly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.const(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def diff(self, i: int) -> MultiPoly:
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = c * e[i]
        return MultiPoly(self.nvars, out)

    def gradient(self) -> list[MultiPoly]:
        return [self.diff(i) for i in range(self.nvars)]

    def __call__(self, point: Sequence):
        if len(point) != self.nvars:
            raise ValueError("evaluation point has wrong length")
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for xi, k in zip(point, e):
                if k:
                    t = t * xi**k
            total = total + t
        return total

    def shift(self, a: Sequence) -> MultiPoly:
        """f(x + a)."""
        n = self.nvars
        out: dict = {}
        for e, c in self.terms.items():
            # expand prod (x_i + a_i)^{e_i}
            partial = {(0,) * n: c}
            for i, k in enumerate(e):
                if not k:
                    continue
                nxt: dict = {}
                for pe, pc in partial.items():
                    for j in range(k + 1):
                        w = comb(k, j) * (a[i] ** (k - j) if k - j else 1)
                        if w == 0:
                            continue
                        ne = list(pe)
                        ne[i] += j
                        ne = tuple(ne)
                        nxt[ne] = nxt.get(ne, 0) + pc * w
                partial = nxt
            for pe, pc in partial.items():
                out[pe] = out.get(pe, 0) + pc
        return MultiPoly(n, out)

    def homogeneous_components(self) -> dict[int, MultiPoly]:
        parts: dict[int, dict] = {}
        for e, c in self.terms.items():
            parts.setdefault(sum(e), {})[e] = c
        return {d: MultiPoly(self.nvars, t) for d, t in sorted(parts.items())}

    def substitute_linear(self, images: Sequence[MultiPoly]) -> MultiPoly:
        """Compose with x_i -> images[i] (polynomials in a possibly different ring)."""
        if len(images) != self.nvars:
            raise ValueError("wrong number of images")
        m = images[0].nvars if images else 0
        out = MultiPoly(m)
        cache: dict = {}
        for e, c in self.terms.items():
            t = MultiPoly.const(m, c)
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in cache:
                        cache[key] = images[i] ** k
                    t = t * cache[key]
            out = out + t
        return out

    def sorted_terms(self):
        """Terms in graded-reverse-lex-free but deterministic order: by degree desc, then exponents desc."""
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-k for k in t[0])))

    def to_str(self, names: Sequence[str] | None = None) -> str:
        names = names or [f"x{i + 1}" for i in range(self.nvars)]
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(e) if k
            )
            cs = fmt_scalar(c)
            if "i" in cs and len(cs) > 1 and ("+" in cs[1:] or "-" in cs[1:]):
                cs = f"({cs})"
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"{cs}*{mono}")
        s = parts[0]
        for t in parts[1:]:
            s += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return s

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"MultiPoly({self})"

    def to_terms(self) -> list[dict]:
        return [{"exponents": list(e), "coeff": fmt_rat(c)} for e, c in self.sorted_terms()]

    @classmethod
    def from_terms(cls, nvars: int, terms: Iterable[Mapping]) -> MultiPoly:
        out: dict = {}
        for t in terms:
            e = tuple(int(k) for k in t["exponents"])
            out[e] = out.get(e, 0) + Q(t["coeff"])
        return cls(nvars, out)
