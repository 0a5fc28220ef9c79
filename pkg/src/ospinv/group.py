"""The even group O(m) x Sp(2n) acting on S(N) by linear substitution."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .matrices import scalar_det
from .ring import SuperPolynomial, substitute


def eta(n: int):
    """Odd block of the form: [[0, I_n], [-I_n, 0]]."""
    k = 2 * n
    M = [[0] * k for _ in range(k)]
    for i in range(n):
        M[i][n + i] = 1
        M[n + i][i] = -1
    return M


def _mat_mul(A, B):
    return [[sum(A[i][r] * B[r][j] for r in range(len(B))) for j in range(len(B[0]))]
            for i in range(len(A))]


def _transpose(A):
    return [list(col) for col in zip(*A)] if A else []


def _identity(k):
    return [[1 if i == j else 0 for j in range(k)] for i in range(k)]


@dataclass(frozen=True)
class GroupElement:
    """Block-diagonal element ``diag(g0, g1)`` of GL(m) x GL(2n)."""

    g0: tuple
    g1: tuple

    def __post_init__(self):
        object.__setattr__(self, "g0", tuple(tuple(Fraction(v) for v in r) for r in self.g0))
        object.__setattr__(self, "g1", tuple(tuple(Fraction(v) for v in r) for r in self.g1))
        if self.g0 and scalar_det(self.g0) == 0:
            raise ValueError("even block is not invertible")
        if self.g1 and scalar_det(self.g1) == 0:
            raise ValueError("odd block is not invertible")

    @classmethod
    def identity(cls, m: int, n: int) -> "GroupElement":
        return cls(_identity(m), _identity(2 * n))

    @property
    def m(self) -> int:
        return len(self.g0)

    @property
    def n(self) -> int:
        return len(self.g1) // 2

    def det0(self) -> Fraction:
        return scalar_det(self.g0) if self.g0 else Fraction(1)

    def is_orthogonal(self) -> bool:
        return _mat_mul(_transpose(self.g0), self.g0) == _identity(self.m)

    def is_symplectic(self) -> bool:
        e = eta(self.n)
        return _mat_mul(_mat_mul(_transpose(self.g1), e), self.g1) == e

    def in_even_group(self) -> bool:
        return self.is_orthogonal() and self.is_symplectic()

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(_mat_mul(self.g0, other.g0) if self.g0 else (),
                            _mat_mul(self.g1, other.g1) if self.g1 else ())

    def block(self, a: int, b: int) -> Fraction:
        """Entry (a, b) of diag(g0, g1), 1-based rows of V."""
        m = self.m
        if a <= m and b <= m:
            return self.g0[a - 1][b - 1]
        if a > m and b > m:
            return self.g1[a - m - 1][b - m - 1]
        return Fraction(0)


def group_action(g: GroupElement, f: SuperPolynomial) -> SuperPolynomial:
    """Substitute ``X_t -> X_t diag(g0, g1)`` in every copy (row-vector convention).

    With this convention ``group_action(g @ h, f) == group_action(g, group_action(h, f))``
    and every q_st is fixed by O(m) x Sp(2n).
    """
    sig = f.sig
    if g.m != sig.m or g.n != sig.n:
        raise ValueError("group element does not match the signature")
    images = {}
    dim = sig.dim
    for t in range(1, sig.N + 1):
        for b in range(1, dim + 1):
            img = sig.zero()
            for a in range(1, dim + 1):
                c = g.block(a, b)
                if c:
                    img = img + sig.gen(a, t).scale(c)
            images[(b, t)] = img
    return substitute(f, images)


def reflection(m: int, n: int, i: int = 1) -> GroupElement:
    g0 = _identity(m)
    g0[i - 1][i - 1] = -1
    return GroupElement(g0, _identity(2 * n))


def rotation(m: int, n: int, i: int, j: int, c, s) -> GroupElement:
    """Rotation in the (i, j) plane; needs ``c**2 + s**2 == 1``."""
    c, s = Fraction(c), Fraction(s)
    if c ** 2 + s ** 2 != 1:
        raise ValueError("c^2 + s^2 must be 1")
    g0 = _identity(m)
    g0[i - 1][i - 1] = c
    g0[i - 1][j - 1] = -s
    g0[j - 1][i - 1] = s
    g0[j - 1][j - 1] = c
    return GroupElement(g0, _identity(2 * n))


def symplectic_upper(m: int, n: int, S) -> GroupElement:
    """[[I, S], [0, I]] with S symmetric."""
    g1 = _identity(2 * n)
    for i in range(n):
        for j in range(n):
            g1[i][n + j] = S[i][j]
    return GroupElement(_identity(m), g1)


def symplectic_lower(m: int, n: int, S) -> GroupElement:
    """[[I, 0], [S, I]] with S symmetric."""
    g1 = _identity(2 * n)
    for i in range(n):
        for j in range(n):
            g1[n + i][j] = S[i][j]
    return GroupElement(_identity(m), g1)


def symplectic_diagonal(m: int, n: int, A) -> GroupElement:
    """[[A, 0], [0, A^-T]] for invertible A."""
    A = [[Fraction(v) for v in row] for row in A]
    inv = _invert(A)
    g1 = _identity(2 * n)
    for i in range(n):
        for j in range(n):
            g1[i][j] = A[i][j]
            g1[n + i][n + j] = inv[j][i]
    return GroupElement(_identity(m), g1)


def _invert(A):
    k = len(A)
    M = [list(row) + [Fraction(int(i == j)) for j in range(k)] for i, row in enumerate(A)]
    for c in range(k):
        piv = next(r for r in range(c, k) if M[r][c] != 0)
        M[c], M[piv] = M[piv], M[c]
        p = M[c][c]
        M[c] = [v / p for v in M[c]]
        for r in range(k):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    return [row[k:] for row in M]
