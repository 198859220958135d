"""Dense univariate polynomials with exact integer or rational coefficients.

Coefficients are stored degree-ascending and trimmed, so the zero polynomial
has an empty coefficient tuple.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable


class _DensePoly:
    __slots__ = ("coeffs",)

    @staticmethod
    def _coerce(c):
        raise NotImplementedError

    def __init__(self, coeffs: Iterable = ()):
        cs = [self._coerce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls):
        return cls([0, 1])

    @classmethod
    def constant(cls, c):
        return cls([c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else self._coerce(0)

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self._coerce(0)

    def _result_type(self, other):
        if isinstance(other, RatPolynomial) or isinstance(self, RatPolynomial):
            return RatPolynomial
        if isinstance(other, Fraction) and other.denominator != 1:
            return RatPolynomial
        return type(self)

    def __add__(self, other):
        cls = self._result_type(other)
        a, b = cls(self.coeffs), _as(cls, other)
        n = max(len(a.coeffs), len(b.coeffs))
        return cls(a.coeff(k) + b.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return type(self)(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as(self._result_type(other), other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        cls = self._result_type(other)
        a, b = cls(self.coeffs), _as(cls, other)
        if not a.coeffs or not b.coeffs:
            return cls()
        out = [cls._coerce(0)] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, ca in enumerate(a.coeffs):
            if ca == 0:
                continue
            for j, cb in enumerate(b.coeffs):
                out[i + j] += ca * cb
        return cls(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = type(self)([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x):
        """Horner evaluation; ``x`` may be int, Fraction, float or complex."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_neg(self):
        """p(-x)."""
        return type(self)(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs))

    def __eq__(self, other):
        if isinstance(other, _DensePoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == type(self)([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"{type(self).__name__}({list(map(str, self.coeffs))})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if k == 0:
                body = str(mag)
            else:
                var = "x" if k == 1 else f"x^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]


class IntPolynomial(_DensePoly):
    __slots__ = ()

    @staticmethod
    def _coerce(c):
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise ValueError(f"non-integer coefficient {c}")
            return int(c)
        if isinstance(c, bool) or not isinstance(c, int):
            raise TypeError(f"integer coefficient expected, got {type(c).__name__}")
        return c

    @classmethod
    def from_json(cls, data: list[str]) -> "IntPolynomial":
        return cls(int(s) for s in data)


class RatPolynomial(_DensePoly):
    __slots__ = ()

    @staticmethod
    def _coerce(c):
        if isinstance(c, float):
            raise TypeError("float coefficients are not exact")
        return Fraction(c)

    @classmethod
    def from_json(cls, data: list[str]) -> "RatPolynomial":
        return cls(Fraction(s) for s in data)


def _as(cls, value):
    if isinstance(value, cls):
        return value
    if isinstance(value, _DensePoly):
        return cls(value.coeffs)
    return cls([value])

