"""The localisation S(m)[Δ^-1] and the specialisation ξ used to detect poles.

Only the even determinant Δ = det(x^i_t) is ever inverted.  An element is a
numerator together with a Δ-exponent and is kept normalised, meaning the
numerator is not exactly divisible by Δ unless the exponent is already 0.
"""

from __future__ import annotations

from functools import lru_cache

from .matrices import det_division_free
from .ring import AlgebraSignature, SuperPolynomial, exact_div, substitute


@lru_cache(maxsize=None)
def even_determinant(sig: AlgebraSignature) -> SuperPolynomial:
    if sig.N != sig.m:
        raise ValueError(f"Δ needs N == m, got N={sig.N}, m={sig.m}")
    M = [[sig.x(i, t) for t in range(1, sig.m + 1)] for i in range(1, sig.m + 1)]
    return det_division_free(M, sig)


def loc_normalize(numerator: SuperPolynomial, exponent: int) -> "LocalizedElement":
    if exponent < 0:
        raise ValueError("Δ-exponent must be nonnegative")
    if numerator.is_zero():
        return LocalizedElement(numerator, 0)
    d = even_determinant(numerator.sig)
    while exponent > 0:
        q = exact_div(numerator, d)
        if q is None:
            break
        numerator, exponent = q, exponent - 1
    return LocalizedElement(numerator, exponent)


class LocalizedElement:
    """``numerator / Δ**exponent`` in S(m)[Δ^-1]; build through :func:`loc_normalize`."""

    __slots__ = ("numerator", "exponent")

    def __init__(self, numerator: SuperPolynomial, exponent: int):
        self.numerator = numerator
        self.exponent = exponent

    @classmethod
    def of(cls, f: SuperPolynomial) -> "LocalizedElement":
        return cls(f, 0)

    @property
    def sig(self) -> AlgebraSignature:
        return self.numerator.sig

    @property
    def is_polynomial(self) -> bool:
        return self.exponent == 0

    def to_polynomial(self) -> SuperPolynomial:
        if self.exponent:
            raise ValueError("element has a pole along Δ")
        return self.numerator

    def _lift(self, other):
        if isinstance(other, LocalizedElement):
            return other
        if isinstance(other, SuperPolynomial):
            return LocalizedElement(other, 0)
        return LocalizedElement(self.sig.const(other), 0)

    def _common(self, other):
        o = self._lift(other)
        d = even_determinant(self.sig)
        e = max(self.exponent, o.exponent)
        a = self.numerator * d ** (e - self.exponent) if e > self.exponent else self.numerator
        b = o.numerator * d ** (e - o.exponent) if e > o.exponent else o.numerator
        return a, b, e

    def __add__(self, other):
        a, b, e = self._common(other)
        return loc_normalize(a + b, e)

    __radd__ = __add__

    def __sub__(self, other):
        a, b, e = self._common(other)
        return loc_normalize(a - b, e)

    def __neg__(self):
        return LocalizedElement(-self.numerator, self.exponent)

    def __mul__(self, other):
        o = self._lift(other)
        return loc_normalize(self.numerator * o.numerator, self.exponent + o.exponent)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return loc_normalize(self.numerator ** k, self.exponent * k)

    def __eq__(self, other):
        if not isinstance(other, (LocalizedElement, SuperPolynomial)):
            return NotImplemented
        o = self._lift(other)
        d = even_determinant(self.sig)
        return self.numerator * d ** o.exponent == o.numerator * d ** self.exponent

    __hash__ = None

    def __repr__(self):
        return f"LocalizedElement(({self.numerator}) / Δ^{self.exponent})"


def xi_target(sig: AlgebraSignature) -> AlgebraSignature:
    """S(W) for W = C^{1|2n}: ``x1_1`` plays the even variable t."""
    return AlgebraSignature(1, sig.n, 1)


def specialize_xi(elem) -> dict[int, SuperPolynomial]:
    """Laurent expansion in t of the image of ``elem`` under ξ.

    ξ sends copy s < m to the s-th unit row and copy m to
    ``(0, ..., 0, t, theta^1, ..., theta^2n)``.  The result maps each
    power of t to its Grassmann coefficient in the signature ``(0, n, 1)``.
    """
    if isinstance(elem, SuperPolynomial):
        elem = LocalizedElement(elem, 0)
    sig = elem.sig
    m = sig.m
    if sig.N != m or m < 1:
        raise ValueError("ξ is defined on S(m) with m >= 1")
    W = xi_target(sig)
    images = {}
    for a, s in sig.generators():
        if s < m:
            images[(a, s)] = W.one() if a == s else W.zero()
        elif a < m:
            images[(a, s)] = W.zero()
        elif a == m:
            images[(a, s)] = W.x(1, 1)
        else:
            images[(a, s)] = W.theta(a - m, 1)
    image = substitute(elem.numerator, images, W)
    grass = AlgebraSignature(0, sig.n, 1)
    out: dict[int, dict] = {}
    for key, c in image.terms.items():
        power = W.even_exponents(key)[0] - elem.exponent
        out.setdefault(power, {})[key & W.odd_mask] = c
    return {p: SuperPolynomial(grass, out[p]) for p in sorted(out)}
