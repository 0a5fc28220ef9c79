"""Partitions, hook conditions and the dimension formulas used as oracles."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, prod


class Partition:
    """Weakly decreasing tuple of positive parts (trailing zeros dropped)."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError("parts must be nonnegative")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        self.parts = parts

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self.parts == Partition(other).parts
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __lt__(self, other):
        return self.parts < other.parts

    def __repr__(self):
        return f"Partition{self.parts}"

    def part(self, i: int) -> int:
        """lambda_i with 1-based i; zero beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def length(self) -> int:
        return len(self.parts)

    def size(self) -> int:
        return sum(self.parts)

    def padded(self, N: int) -> tuple[int, ...]:
        if len(self.parts) > N:
            raise ValueError(f"length {len(self.parts)} exceeds {N}")
        return self.parts + (0,) * (N - len(self.parts))

    def transpose(self) -> "Partition":
        if not self.parts:
            return Partition()
        return Partition(sum(1 for p in self.parts if p > j) for j in range(self.parts[0]))

    def is_even(self) -> bool:
        return all(p % 2 == 0 for p in self.parts)

    def in_hook(self, m: int, odd_dim: int) -> bool:
        """lambda_{m+1} <= odd_dim."""
        return self.part(m + 1) <= odd_dim

    def pseudo_admissible(self, m: int, n: int) -> bool:
        """lambda = omega_m + even partition with lambda_{m+1} <= 2n < lambda_m."""
        if m < 1:
            return False
        for i, p in enumerate(self.parts, start=1):
            if (p % 2 == 1) != (i <= m):
                return False
        return self.part(m) > 2 * n >= self.part(m + 1)

    def hooks(self):
        conj = self.transpose()
        for i, row in enumerate(self.parts):
            for j in range(row):
                yield row - j + conj.parts[j] - i - 1


def omega_weight(r: int, N: int) -> tuple[int, ...]:
    return (1,) * r + (0,) * (N - r)


@lru_cache(maxsize=None)
def _partitions(d: int, max_part: int, max_len: int) -> tuple:
    if d == 0:
        return ((),)
    if max_len == 0:
        return ()
    out = []
    for first in range(min(d, max_part), 0, -1):
        for rest in _partitions(d - first, first, max_len - 1):
            out.append((first,) + rest)
    return tuple(out)


FILTERS = ("all", "hook", "even-hook", "pseudo-admissible")


def enumerate_partitions(d: int, N: int, filter: str = "all", m: int = 0, n: int = 0
                         ) -> list[Partition]:
    """Partitions of d with at most N parts passing ``filter``, in lexicographic order."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    if filter not in FILTERS:
        raise ValueError(f"unknown filter {filter!r}")
    keep = {
        "all": lambda p: True,
        "hook": lambda p: p.in_hook(m, 2 * n),
        "even-hook": lambda p: p.is_even() and p.in_hook(m, 2 * n),
        "pseudo-admissible": lambda p: p.pseudo_admissible(m, n),
    }[filter]
    parts = [Partition(p) for p in _partitions(d, d, N)]
    return sorted(p for p in parts if keep(p))


def dim_glN(lam, N: int) -> int:
    """Weyl dimension of the simple gl_N module with highest weight lambda."""
    lam = Partition(lam).padded(N) if not isinstance(lam, Partition) else lam.padded(N)
    num = prod(lam[i] - lam[j] + j - i for i in range(N) for j in range(i + 1, N))
    den = prod(j - i for i in range(N) for j in range(i + 1, N))
    return num // den


def f_mu(mu) -> int:
    """Number of standard Young tableaux (hook length formula)."""
    mu = mu if isinstance(mu, Partition) else Partition(mu)
    return factorial(mu.size()) // prod(mu.hooks())


def dim_glV_hook(lam, m: int, n: int) -> int:
    """Count semistandard (m|2n)-hook tableaux of shape lambda.

    Even letters 1..m: rows weakly, columns strictly increasing.
    Odd letters m+1..m+2n: rows strictly, columns weakly increasing.
    """
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    cells = [(i, j) for i, row in enumerate(lam.parts) for j in range(row)]
    letters = m + 2 * n
    filled: dict[tuple[int, int], int] = {}

    def ok(i, j, v):
        left = filled.get((i, j - 1))
        up = filled.get((i - 1, j))
        odd = v > m
        if left is not None:
            if left > v or (odd and left == v):
                return False
        if up is not None:
            if up > v or (not odd and up == v):
                return False
        return True

    def rec(idx):
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        total = 0
        for v in range(1, letters + 1):
            if ok(i, j, v):
                filled[(i, j)] = v
                total += rec(idx + 1)
                del filled[(i, j)]
        return total

    return rec(0)


def dim_gamma_exact(N: int, m: int, n: int) -> Fraction:
    out = Fraction(1)
    for j in range(m + 1, N + 1):
        for i in range(1, m + 1):
            out *= Fraction(2 * n + 1 + j - i, j - i)
    return out


def dim_gamma(N: int, m: int, n: int) -> int:
    if N < m:
        raise ValueError("needs N >= m")
    value = dim_gamma_exact(N, m, n)
    if value.denominator != 1:
        raise ArithmeticError(f"dim Gamma({N}) = {value} is not an integer")
    return int(value)


def formula_dims(d: int, N: int, m: int, n: int) -> tuple[int, int]:
    """Predicted (invariant, pseudo-invariant) dimensions of the degree-d component."""
    inv = sum(dim_glN(p, N) for p in enumerate_partitions(d, N, "even-hook", m, n))
    pseudo = sum(dim_glN(p, N) for p in enumerate_partitions(d, N, "pseudo-admissible", m, n))
    return inv, pseudo


def tensor_formula_dims(N: int, m: int, n: int) -> tuple[int, int]:
    inv = sum(f_mu(p) for p in enumerate_partitions(N, N, "even-hook", m, n))
    pseudo = sum(f_mu(p) for p in enumerate_partitions(N, N, "pseudo-admissible", m, n))
    return inv, pseudo
