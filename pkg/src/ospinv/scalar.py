"""Exact scalars in Q(i).

Polynomial coefficients are kept as plain ``int`` or ``Fraction`` whenever
they are real, since almost every computation stays inside Q and Python
integers are much faster than any wrapper.  :class:`Scalar` only appears
when an imaginary part is genuinely present (the z / z-bar change of
variables).  :func:`normalize` maps any coefficient back to the cheapest
representation.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import factorial, gcd

RATIONAL_TYPES = (int, Fraction)


class Scalar:
    """Gaussian rational ``re + im*i`` with both parts in lowest terms."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, Scalar):
            re, im = re.re, re.im + Fraction(im)
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def of(cls, value) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, complex):
            raise TypeError("floating point complex values are not exact")
        return cls(value, 0)

    # arithmetic -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Scalar):
            return other
        if isinstance(other, RATIONAL_TYPES):
            return Scalar(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        if isinstance(other, RATIONAL_TYPES):
            return Scalar(self.re * other, self.im * other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return Scalar(self.re * other.re - self.im * other.im,
                      self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        den = o.re * o.re + o.im * o.im
        if den == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        num = self * o.conjugate()
        return Scalar(num.re / den, num.im / den)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (Scalar(1) / self) ** (-k)
        result = Scalar(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.re == other.re and self.im == other.im
        if isinstance(other, RATIONAL_TYPES):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"Scalar({self.re}, {self.im})"

    def __str__(self):
        return format_scalar(self)


I = Scalar(0, 1)


def normalize(c):
    """Cheapest exact representation of ``c`` (int, Fraction or Scalar)."""
    if type(c) is int:
        return c
    if isinstance(c, Scalar):
        if c.im == 0:
            c = c.re
        else:
            return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):  # bool and int subclasses
        return int(c)
    raise TypeError(f"not an exact scalar: {c!r}")


def real_imag(c) -> tuple[Fraction, Fraction]:
    if isinstance(c, Scalar):
        return c.re, c.im
    return Fraction(c), Fraction(0)


def is_real(c) -> bool:
    return not isinstance(c, Scalar) or c.im == 0


def format_fraction(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def format_scalar(c) -> str:
    re, im = real_imag(c)
    if im == 0:
        return str(re)
    if re == 0:
        return f"{im}*i"
    sign = "+" if im > 0 else "-"
    return f"({re} {sign} {abs(im)}*i)"


def binom_half(top: Fraction, k: int) -> Fraction:
    """Generalised binomial coefficient ``top choose k`` for rational ``top``."""
    top = Fraction(top)
    num = Fraction(1)
    for j in range(k):
        num *= top - j
    return num / factorial(k)


def lcm_of_denominators(values) -> int:
    dens = [Fraction(v).denominator for v in values]
    return reduce(lambda a, b: a * b // gcd(a, b), dens, 1)
