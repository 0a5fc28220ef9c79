"""Elementary invariants, the determinants D(k) and the super Pfaffian.

Everything is cached per signature because the identity suite and the
decomposition checks ask for the same D(k) many times.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .localize import LocalizedElement, even_determinant, loc_normalize
from .matrices import adjugate, det_division_free
from .metric import MetricData, metric
from .ring import AlgebraSignature, SuperPolynomial, poly_sum
from .scalar import binom_half

__all__ = [
    "MetricData", "metric", "q_elem", "p_elem", "phi_elem", "Q_matrix", "Q_adjugate",
    "D_of", "D_lambda", "coeff_C", "coeff_C_lambda", "delta", "zeta_and_F", "omega",
    "delta_F_power", "pfaffian_membership", "NilpotencyError",
]

MAX_PARTS = 64


class NilpotencyError(RuntimeError):
    pass


def _check_pair(sig, s, t):
    sig._check_copy(s)
    sig._check_copy(t)


@lru_cache(maxsize=None)
def p_elem(sig: AlgebraSignature, s: int, t: int) -> SuperPolynomial:
    _check_pair(sig, s, t)
    return poly_sum([sig.x(i, s) * sig.x(i, t) for i in range(1, sig.m + 1)], sig)


@lru_cache(maxsize=None)
def phi_elem(sig: AlgebraSignature, s: int, t: int) -> SuperPolynomial:
    _check_pair(sig, s, t)
    g = metric(sig.m, sig.n)
    m = sig.m
    parts = []
    for mu in range(1, 2 * sig.n + 1):
        for nu in range(1, 2 * sig.n + 1):
            c = g.kinv(m + mu, m + nu)
            if c:
                parts.append((sig.theta(mu, s) * sig.theta(nu, t)).scale(c))
    return poly_sum(parts, sig)


@lru_cache(maxsize=None)
def q_elem(sig: AlgebraSignature, s: int, t: int) -> SuperPolynomial:
    """q_st = X_s kappa^-1 X_t^T."""
    return p_elem(sig, s, t) + phi_elem(sig, s, t)


def Q_matrix(sig: AlgebraSignature, k: int, part: str = "q"):
    fn = {"q": q_elem, "p": p_elem, "phi": phi_elem}[part]
    return [[fn(sig, s, t) for t in range(1, k + 1)] for s in range(1, k + 1)]


@lru_cache(maxsize=None)
def D_of(sig: AlgebraSignature, k: int) -> SuperPolynomial:
    """D(k) = det Q(k); D(0) = 1."""
    if not 0 <= k <= sig.N:
        raise IndexError(f"k={k} outside 0..{sig.N}")
    if k == 0:
        return sig.one()
    return det_division_free(Q_matrix(sig, k), sig)


@lru_cache(maxsize=None)
def Q_adjugate(sig: AlgebraSignature, k: int):
    """Q~(k), indexed 0-based: ``Q_adjugate(sig, k)[r-1][j-1]``."""
    if not 1 <= k <= sig.N:
        raise IndexError(f"k={k} outside 1..{sig.N}")
    return adjugate(Q_matrix(sig, k), sig)


@lru_cache(maxsize=None)
def _D_power(sig, k, e):
    if e == 0:
        return sig.one()
    if e == 1:
        return D_of(sig, k)
    return _D_power(sig, k, e - 1) * D_of(sig, k)


def D_lambda(sig: AlgebraSignature, ell) -> SuperPolynomial:
    """prod_i D(i)^{ell_i}; the weight is lambda = 2 sum ell_i omega_i."""
    ell = list(ell)
    if len(ell) > sig.N:
        raise IndexError("exponent vector longer than N")
    out = sig.one()
    for i, e in enumerate(ell, start=1):
        if e < 0:
            raise ValueError("exponents must be nonnegative")
        if e:
            out = out * _D_power(sig, i, e)
    return out


def ell_of(lam) -> list[int]:
    """Exponent vector of an even partition: ell_i = (lambda_i - lambda_{i+1}) / 2."""
    parts = list(getattr(lam, "parts", lam))
    if any(p % 2 for p in parts):
        raise ValueError("partition is not even")
    nxt = parts[1:] + [0]
    return [(a - b) // 2 for a, b in zip(parts, nxt)]


def coeff_C(m: int, n: int, k: int, ell: int) -> int:
    if ell < 0:
        raise ValueError("ell must be nonnegative")
    out = 1
    for j in range(1, ell + 1):
        out *= 2 * j * (m - 2 * n - k + 2 * j - 1)
    return out


def coeff_C_lambda(m: int, n: int, lam) -> int:
    parts = list(getattr(lam, "parts", lam))
    out = 1
    for k in range(m + 1, len(parts) + 1):
        if parts[k - 1] % 2:
            raise ValueError(f"lambda_{k} must be even for k > m")
        out *= coeff_C(m, n, k, parts[k - 1] // 2)
    return out


def delta(sig: AlgebraSignature) -> SuperPolynomial:
    return even_determinant(sig)


@lru_cache(maxsize=None)
def _zeta(sig: AlgebraSignature):
    if sig.N != sig.m:
        raise ValueError(f"needs N == m, got N={sig.N}, m={sig.m}")
    d = delta(sig)
    zeta = D_of(sig, sig.m) - d * d
    cap = sig.m * sig.n + 1
    powers = [sig.one()]
    while not powers[-1].is_zero():
        if len(powers) > cap + 1:
            raise NilpotencyError(f"zeta not nilpotent within {cap} steps; sign error suspected")
        powers.append(powers[-1] * zeta)
    return zeta, tuple(powers[:-1])


def zeta_and_F(sig: AlgebraSignature):
    """``(zeta, K, F)`` with zeta^{K+1} = 0 and F = sqrt(1 + zeta/Delta^2) truncated."""
    zeta, powers = _zeta(sig)
    K = len(powers) - 1
    F = delta_F_power(sig, 0, shift=-1)
    return zeta, K, F


def delta_F_power(sig: AlgebraSignature, k: int, shift: int = 0) -> LocalizedElement:
    """Delta^{2k+1+shift} * sum_j binom(k+1/2, j) (zeta/Delta^2)^j, normalised.

    ``shift = 0`` gives Delta F (det Q)^k; ``shift = -1, k = 0`` gives F.
    """
    zeta, powers = _zeta(sig)
    d = delta(sig)
    top = Fraction(2 * k + 1, 2)
    base = 2 * k + 1 + shift
    K = len(powers) - 1
    e = max(0, 2 * K - base)
    parts = []
    for j, zj in enumerate(powers):
        c = binom_half(top, j)
        if c:
            parts.append((zj * d ** (base - 2 * j + e)).scale(c))
    return loc_normalize(poly_sum(parts, sig), e)


@lru_cache(maxsize=None)
def omega(sig: AlgebraSignature) -> SuperPolynomial:
    """The super Pfaffian Delta F (det Q)^n as a polynomial in S(m)."""
    loc = delta_F_power(sig, sig.n)
    if not loc.is_polynomial:
        raise ArithmeticError(f"Omega did not normalise to a polynomial: {loc!r}")
    return loc.numerator


def pfaffian_membership(sig: AlgebraSignature, k: int) -> bool:
    if k < 0:
        raise ValueError("k must be nonnegative")
    return delta_F_power(sig, k).is_polynomial


def omega_signature(m: int, n: int) -> AlgebraSignature:
    if m < 1:
        raise ValueError("Omega needs m >= 1")
    return AlgebraSignature(m, n, m)


def embed(f: SuperPolynomial, target: AlgebraSignature) -> SuperPolynomial:
    """Include S(N) into S(N') for N <= N' (same m, n)."""
    sig = f.sig
    if (sig.m, sig.n) != (target.m, target.n) or target.N < sig.N:
        raise ValueError("cannot embed into a smaller or different signature")
    images = {(a, t): target.gen(a, t) for a, t in sig.generators()}
    from .ring import substitute
    return substitute(f, images, target)
