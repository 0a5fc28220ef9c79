"""Exact verification of the determinant identities for D(k)."""

from __future__ import annotations

from fractions import Fraction

from .diffops import laplacian_op, nabla_lambda, op_E, partial
from .metric import metric
from .pfaffian import (D_lambda, D_of, Q_adjugate, _D_power, coeff_C, coeff_C_lambda,
                       ell_of, q_elem)
from .report import Check, check, short
from .ring import AlgebraSignature, SuperPolynomial, poly_sum

IDENTITIES = ("D-formulae-1", "D-formulae-2", "Laplace", "ED", "reduce", "EQ", "truncation",
              "truncating-D")


def lowered(sig: AlgebraSignature, a: int, t: int) -> SuperPolynomial:
    """X_at = sum_c (kappa^-1)_ac X^c_t."""
    return poly_sum([sig.gen(c, t).scale(v) for c, v in metric(sig.m, sig.n).kinv_row(a)], sig)


def _cmp(name, params, lhs, rhs) -> Check:
    ok = lhs == rhs
    return check(name, params, ok, "" if ok else f"difference {short(lhs - rhs)}")


def identity_checks(sig: AlgebraSignature, max_ell: int = 3, max_part: int = 4,
                    only=None) -> list[Check]:
    """All identity instances for one signature, every k <= N."""
    m, n, N = sig.m, sig.n, sig.N
    want = set(only or IDENTITIES)
    base = {"m": m, "n": n, "N": N}
    out: list[Check] = []
    for k in range(1, N + 1):
        D = D_of(sig, k)
        Qt = Q_adjugate(sig, k)
        for j in range(1, k + 1):
            p = dict(base, k=k, j=j)
            if "D-formulae-1" in want:
                for a in range(1, sig.dim + 1):
                    rhs = poly_sum([lowered(sig, a, r) * Qt[r - 1][j - 1]
                                    for r in range(1, k + 1)], sig).scale(2)
                    out.append(_cmp("D-formulae-1", dict(p, a=a), partial(a, j, D), rhs))
            if "D-formulae-2" in want:
                lhs = laplacian_op(sig, j, j)(D)
                out.append(_cmp("D-formulae-2", p, lhs,
                                Qt[j - 1][j - 1].scale(2 * (m - 2 * n - k + 1))))
            if "EQ" in want:
                out.append(_cmp("EQ", dict(p, r=j), op_E(sig, j, j)(Qt[j - 1][j - 1]),
                                sig.zero()))
                for r in range(1, k + 1):
                    if r != j:
                        out.append(_cmp("EQ", dict(p, r=r), op_E(sig, r, j)(Qt[r - 1][j - 1]),
                                        -Qt[j - 1][j - 1]))
            if "ED" in want:
                for i in range(1, N + 1):
                    rhs = poly_sum([q_elem(sig, i, r) * Qt[r - 1][j - 1]
                                    for r in range(1, k + 1)], sig).scale(2)
                    out.append(_cmp("ED", dict(p, i=i), op_E(sig, i, j)(D), rhs))
        L = laplacian_op(sig, k, k)
        for ell in range(1, max_ell + 1):
            p = dict(base, k=k, ell=ell)
            Dl = _D_power(sig, k, ell)
            if "Laplace" in want:
                rhs = (_D_power(sig, k, ell - 1) * D_of(sig, k - 1)).scale(
                    2 * ell * (m - 2 * n - k + 2 * ell - 1))
                out.append(_cmp("Laplace", p, L(Dl), rhs))
            if "truncation" in want:
                lhs = Dl
                for _ in range(ell):
                    lhs = L(lhs)
                rhs = _D_power(sig, k - 1, ell).scale(coeff_C(m, n, k, ell))
                out.append(_cmp("truncation", p, lhs, rhs))
        if "reduce" in want and k + 1 <= N:
            rhs = q_elem(sig, k + 1, k + 1) * D - poly_sum(
                [q_elem(sig, r, k + 1) * op_E(sig, k + 1, r)(D) for r in range(1, k + 1)],
                sig).scale(Fraction(1, 2))
            out.append(_cmp("reduce", dict(base, k=k), D_of(sig, k + 1), rhs))
    if "truncating-D" in want:
        for lam in _even_partitions(N, max_part):
            ell = ell_of(lam)
            lhs = nabla_lambda(lam, D_lambda(sig, ell))
            if m == 0:
                rhs = sig.one()
            else:
                rhs = D_lambda(sig, [0] * (m - 1) + [lam[m - 1] // 2]) if m <= len(lam) \
                    else sig.one()
                rhs = rhs * D_lambda(sig, ell[:m - 1]) if m > 1 else rhs
            rhs = rhs.scale(coeff_C_lambda(m, n, lam))
            out.append(_cmp("truncating-D", dict(base, lam=list(lam)), lhs, rhs))
    return out


def _even_partitions(N: int, max_part: int):
    """Nonzero even partitions with at most N parts, each <= max_part."""
    evens = list(range(max_part - max_part % 2, 0, -2))

    def rec(prefix, cap):
        if prefix:
            yield tuple(prefix)
        if len(prefix) == N:
            return
        for v in evens:
            if v <= cap:
                yield from rec(prefix + [v], v)

    return list(rec([], max_part))


def identity_suite(params: list[tuple[int, int, int]], max_ell: int = 3, max_part: int = 4,
                   workers: int = 1) -> list[Check]:
    """Run :func:`identity_checks` over ``(m, n, N)`` triples, in parallel if asked."""
    from .parallel import pmap
    jobs = [(m, n, N, max_ell, max_part) for m, n, N in params]
    results = pmap(_job, jobs, workers)
    return [c for chunk in results for c in chunk]


def _job(args):
    m, n, N, max_ell, max_part = args
    return identity_checks(AlgebraSignature(m, n, N), max_ell, max_part)
