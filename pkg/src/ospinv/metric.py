"""The even supersymmetric form on V = C^{m|2n}."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


def _eta(n: int) -> tuple:
    k = 2 * n
    rows = [[0] * k for _ in range(k)]
    for i in range(n):
        rows[i][n + i] = 1
        rows[n + i][i] = -1
    return tuple(tuple(r) for r in rows)


@dataclass(frozen=True)
class MetricData:
    """kappa = diag(I_m, eta) with eta = [[0, I_n], [-I_n, 0]]; integer entries, 0-based."""

    m: int
    n: int
    kappa: tuple
    kappa_inv: tuple
    eta: tuple

    def k(self, a: int, b: int) -> int:
        return self.kappa[a - 1][b - 1]

    def kinv(self, a: int, b: int) -> int:
        return self.kappa_inv[a - 1][b - 1]

    def kinv_row(self, a: int):
        """Nonzero ``(c, (kappa^-1)_{ac})`` pairs, 1-based."""
        return [(c + 1, v) for c, v in enumerate(self.kappa_inv[a - 1]) if v]

    def k_pairs(self, lo: int = 1, hi: int | None = None):
        """Nonzero ``(a, b, kappa_ab)`` with both indices in ``lo..hi``."""
        hi = hi or self.m + 2 * self.n
        return [(a, b, self.k(a, b)) for a in range(lo, hi + 1) for b in range(lo, hi + 1)
                if self.k(a, b)]


@lru_cache(maxsize=None)
def metric(m: int, n: int) -> MetricData:
    eta = _eta(n)
    dim = m + 2 * n
    kappa = [[0] * dim for _ in range(dim)]
    kinv = [[0] * dim for _ in range(dim)]
    for i in range(m):
        kappa[i][i] = kinv[i][i] = 1
    for i in range(2 * n):
        for j in range(2 * n):
            kappa[m + i][m + j] = eta[i][j]
            kinv[m + i][m + j] = -eta[i][j]  # eta^-1 = -eta
    return MetricData(m, n, tuple(map(tuple, kappa)), tuple(map(tuple, kinv)), eta)
