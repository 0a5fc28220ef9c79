"""Square matrices with even polynomial entries.

Entries of a ``PolyMatrix`` are pairwise commuting (all even), so the usual
permutation expansion of the determinant is well defined.  Because S(N) has
nilpotents, nothing here ever divides: elimination over a ring with zero
divisors is unsound.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .ring import AlgebraSignature, SuperPolynomial, poly_sum

PolyMatrix = list  # list[list[SuperPolynomial]]

LAPLACE_CUTOVER = 8


def _shape(M, sig):
    k = len(M)
    for row in M:
        if len(row) != k:
            raise ValueError("matrix is not square")
        for entry in row:
            if not entry.is_even():
                raise ValueError("matrix entries must be even")
    if sig is None:
        if k == 0:
            raise ValueError("signature required for the empty matrix")
        sig = M[0][0].sig
    return k, sig


def permutation_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def det_permutation(M: PolyMatrix, sig: AlgebraSignature | None = None) -> SuperPolynomial:
    """Leibniz expansion over all permutations."""
    k, sig = _shape(M, sig)
    terms = []
    for perm in itertools.permutations(range(k)):
        prod = sig.one()
        for i, j in enumerate(perm):
            prod = prod * M[i][j]
            if prod.is_zero():
                break
        if not prod.is_zero():
            terms.append(prod if permutation_sign(perm) > 0 else -prod)
    return poly_sum(terms, sig)


def det_laplace(M: PolyMatrix, sig: AlgebraSignature | None = None) -> SuperPolynomial:
    """Column-by-column Laplace expansion with memoised minors."""
    k, sig = _shape(M, sig)
    memo: dict[tuple[int, ...], SuperPolynomial] = {}

    def minor(rows: tuple[int, ...]) -> SuperPolynomial:
        col = k - len(rows)
        if not rows:
            return sig.one()
        hit = memo.get(rows)
        if hit is not None:
            return hit
        parts = []
        for idx, r in enumerate(rows):
            entry = M[r][col]
            if entry.is_zero():
                continue
            term = entry * minor(rows[:idx] + rows[idx + 1:])
            parts.append(-term if idx % 2 else term)
        out = poly_sum(parts, sig)
        memo[rows] = out
        return out

    return minor(tuple(range(k)))


def det_division_free(M: PolyMatrix, sig: AlgebraSignature | None = None) -> SuperPolynomial:
    k, sig = _shape(M, sig)
    if k <= LAPLACE_CUTOVER:
        return det_laplace(M, sig)
    return det_permutation(M, sig)


def submatrix(M: PolyMatrix, drop_row: int, drop_col: int) -> PolyMatrix:
    return [[e for j, e in enumerate(row) if j != drop_col]
            for i, row in enumerate(M) if i != drop_row]


def adjugate(M: PolyMatrix, sig: AlgebraSignature | None = None) -> PolyMatrix:
    """Transposed cofactor matrix, so that ``M @ adj(M) == det(M) * I``."""
    k, sig = _shape(M, sig)
    adj = [[None] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            c = det_division_free(submatrix(M, i, j), sig)
            adj[j][i] = -c if (i + j) % 2 else c
    return adj


def matmul(A: PolyMatrix, B: PolyMatrix, sig: AlgebraSignature) -> PolyMatrix:
    rows, inner = len(A), len(B)
    cols = len(B[0]) if B else 0
    return [[poly_sum([A[i][r] * B[r][j] for r in range(inner)], sig)
             for j in range(cols)] for i in range(rows)]


def scalar_identity(k: int, sig: AlgebraSignature) -> PolyMatrix:
    return [[sig.one() if i == j else sig.zero() for j in range(k)] for i in range(k)]


def scalar_det(A) -> Fraction:
    """Determinant of a matrix of exact scalars by fraction elimination."""
    k = len(A)
    M = [list(row) for row in A]
    det = Fraction(1) if k else Fraction(1)
    for c in range(k):
        piv = next((r for r in range(c, k) if M[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        p = M[c][c]
        det = det * p
        for r in range(c + 1, k):
            f = M[r][c] / p
            if f != 0:
                for j in range(c, k):
                    M[r][j] = M[r][j] - f * M[c][j]
    return det
