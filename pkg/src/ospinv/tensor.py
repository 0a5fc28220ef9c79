"""Tensor powers of V as the multidegree (1, ..., 1) component of S(N).

e_{a_1} (x) ... (x) e_{a_N} corresponds to X^{a_1}_1 ... X^{a_N}_N.  The
symmetric group acts through the substitution X^a_t -> X^a_{sigma(t)}, so
all Koszul signs come from the ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .invariants import CapExceeded, brute_graded_invariants, gamma_space, span
from .linalg import Subspace
from .metric import metric
from .partitions import tensor_formula_dims
from .report import Check, check
from .ring import AlgebraSignature, SuperPolynomial, substitute
from .scalar import normalize

TENSOR_CAP = 100_000


class TensorVector:
    """Sparse map from words (a_1, ..., a_N) to scalars."""

    __slots__ = ("m", "n", "N", "coeffs")

    def __init__(self, m: int, n: int, N: int, coeffs: dict | None = None):
        self.m, self.n, self.N = m, n, N
        dim = m + 2 * n
        clean = {}
        for w, c in (coeffs or {}).items():
            w = tuple(w)
            if len(w) != N or any(not 1 <= a <= dim for a in w):
                raise ValueError(f"bad word {w} for V^(x){N}")
            if c:
                clean[w] = normalize(c)
        self.coeffs = clean

    @classmethod
    def basis(cls, m, n, word) -> "TensorVector":
        return cls(m, n, len(word), {tuple(word): 1})

    @property
    def sig(self) -> AlgebraSignature:
        return AlgebraSignature(self.m, self.n, self.N)

    def _same(self, other):
        if (self.m, self.n, self.N) != (other.m, other.n, other.N):
            raise ValueError("tensor vectors of different shapes")

    def __add__(self, other):
        self._same(other)
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, 0) + c
        return TensorVector(self.m, self.n, self.N, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "TensorVector":
        return TensorVector(self.m, self.n, self.N, {w: c * v for w, v in self.coeffs.items()})

    def tensor(self, other) -> "TensorVector":
        if (self.m, self.n) != (other.m, other.n):
            raise ValueError("different superspaces")
        out = {}
        for w, c in self.coeffs.items():
            for u, d in other.coeffs.items():
                out[w + u] = out.get(w + u, 0) + c * d
        return TensorVector(self.m, self.n, self.N + other.N, out)

    def __eq__(self, other):
        if not isinstance(other, TensorVector):
            return NotImplemented
        return (self.m, self.n, self.N) == (other.m, other.n, other.N) \
            and self.coeffs == other.coeffs

    def is_zero(self) -> bool:
        return not self.coeffs

    def scalar(self):
        """The coefficient of the empty word (for N = 0)."""
        if self.N != 0:
            raise ValueError("not a scalar")
        return self.coeffs.get((), 0)

    def __repr__(self):
        body = " + ".join(f"{c}*e{w}" for w, c in sorted(self.coeffs.items())) or "0"
        return f"TensorVector({body})"


def iota(v: TensorVector) -> SuperPolynomial:
    sig = v.sig
    terms = {}
    for w, c in v.coeffs.items():
        even = {}
        odd = []
        for t, a in enumerate(w, start=1):
            if a <= sig.m:
                even[(a, t)] = 1
            else:
                odd.append((a, t))
        terms[sig.encode(even, odd)] = c
    return SuperPolynomial(sig, terms)


def iota_inverse(f: SuperPolynomial) -> TensorVector:
    sig = f.sig
    out = {}
    for key, c in f.terms.items():
        word = [0] * sig.N
        for s, e in enumerate(sig.even_exponents(key)):
            if e:
                if e != 1:
                    raise ValueError("not in the multidegree (1,...,1) component")
                a, t = sig.slot_generator(s)
                word[t - 1] = a
        for j in sig.odd_bits(key):
            a, t = sig.bit_generator(j)
            if word[t - 1]:
                raise ValueError("not in the multidegree (1,...,1) component")
            word[t - 1] = a
        if not all(word):
            raise ValueError("not in the multidegree (1,...,1) component")
        out[tuple(word)] = c
    return TensorVector(sig.m, sig.n, sig.N, out)


def permute(sigma, v: TensorVector) -> TensorVector:
    """Signed action of a permutation; ``sigma[t-1]`` is the new position of copy t."""
    sig = v.sig
    if sorted(sigma) != list(range(1, sig.N + 1)):
        raise ValueError(f"not a permutation of 1..{sig.N}: {sigma}")
    images = {(a, t): sig.gen(a, sigma[t - 1]) for a, t in sig.generators()}
    return iota_inverse(substitute(iota(v), images))


def _check_cap(m, n, N):
    if (m + 2 * n) ** N > TENSOR_CAP:
        raise CapExceeded(f"(m+2n)^N = {(m + 2 * n) ** N} exceeds {TENSOR_CAP}")


@dataclass
class TensorInvariants:
    m: int
    n: int
    N: int
    inv: list
    pseudo: list

    @property
    def dim_inv(self) -> int:
        return len(self.inv)

    @property
    def dim_pseudo(self) -> int:
        return len(self.pseudo)

    def inv_space(self) -> Subspace:
        return span(iota(v) for v in self.inv)

    def pseudo_space(self) -> Subspace:
        return span(iota(v) for v in self.pseudo)


def tensor_invariants(m: int, n: int, N: int) -> TensorInvariants:
    _check_cap(m, n, N)
    res = brute_graded_invariants(AlgebraSignature(m, n, N), multideg=(1,) * N)
    return TensorInvariants(m, n, N, [iota_inverse(f) for f in res.inv],
                            [iota_inverse(f) for f in res.pseudo])


def coevaluation(m: int, n: int) -> TensorVector:
    """sum_{a,b} e_a (x) (kappa^-1)_ab e_b."""
    g = metric(m, n)
    return TensorVector(m, n, 2, {(a, c): v for a in range(1, m + 2 * n + 1)
                                  for c, v in g.kinv_row(a)})


def brauer_vectors(m: int, n: int, N: int) -> list[TensorVector]:
    if N % 2:
        raise ValueError("brauer_span needs N even")
    _check_cap(m, n, N)
    base = TensorVector(m, n, 0, {(): 1})
    C = coevaluation(m, n)
    for _ in range(N // 2):
        base = base.tensor(C)
    seen = {}
    for sigma in permutations(range(1, N + 1)):
        v = permute(sigma, base)
        seen.setdefault(tuple(sorted(v.coeffs.items())), v)
    return list(seen.values())


def brauer_span(m: int, n: int, N: int) -> Subspace:
    return span(iota(v) for v in brauer_vectors(m, n, N))


def contraction(i: int, j: int, v: TensorVector) -> TensorVector:
    """C_ij: move copies i, j to the front with the signed action, then pair them by kappa."""
    r = v.N
    if not 1 <= i < j <= r:
        raise IndexError(f"need 1 <= i < j <= {r}, got ({i}, {j})")
    others = [t for t in range(1, r + 1) if t not in (i, j)]
    sigma = [0] * r
    sigma[i - 1], sigma[j - 1] = 1, 2
    for pos, t in enumerate(others, start=3):
        sigma[t - 1] = pos
    w = permute(sigma, v) if (i, j) != (1, 2) else v
    g = metric(v.m, v.n)
    out: dict = {}
    for word, c in w.coeffs.items():
        k = g.k(word[0], word[1])
        if k:
            out[word[2:]] = out.get(word[2:], 0) + k * c
    return TensorVector(v.m, v.n, r - 2, out)


def critical_rank(m: int, n: int) -> int:
    return m * (2 * n + 1)


def gamma0(m: int, n: int) -> list[TensorVector]:
    rc = critical_rank(m, n)
    _check_cap(m, n, rc)
    G = gamma_space(AlgebraSignature(m, n, rc))
    return [iota_inverse(f) for f in G.weight_slice((1,) * rc)]


def tensor_checks(m: int, n: int, N: int) -> list[Check]:
    p = {"m": m, "n": n, "N": N}
    res = tensor_invariants(m, n, N)
    f_inv, f_pseudo = tensor_formula_dims(N, m, n)
    out = [
        check("tensor-invariant", p, res.dim_inv == f_inv, f"formula {f_inv}, brute {res.dim_inv}",
              formula=f_inv, brute=res.dim_inv),
        check("tensor-pseudo", p, res.dim_pseudo == f_pseudo,
              f"formula {f_pseudo}, brute {res.dim_pseudo}", formula=f_pseudo,
              brute=res.dim_pseudo),
    ]
    if N % 2 == 0:
        B = brauer_span(m, n, N)
        I = res.inv_space()
        out.append(check("brauer-span", p, B == I, f"brauer rank {B.dim}, invariant rank {I.dim}",
                         formula=B.dim, brute=I.dim))
    else:
        out.append(check("odd-power", p, res.dim_inv == 0, f"dim {res.dim_inv}",
                         formula=0, brute=res.dim_inv))
    return out


def harmonicity_checks(m: int, n: int) -> list[Check]:
    rc = critical_rank(m, n)
    G = gamma0(m, n)
    from .partitions import f_mu
    expected = f_mu((2 * n + 1,) * m)
    p = {"m": m, "n": n, "r": rc}
    out = [check("gamma0-dimension", p, len(G) == expected, f"expected {expected}, got {len(G)}",
                 formula=expected, brute=len(G))]
    pseudo = tensor_invariants(m, n, rc).pseudo_space()
    out.append(check("gamma0-pseudo", p, all(pseudo.contains(iota(v).terms) for v in G),
                     "Gamma0 not inside the pseudo-invariant part"))
    for i in range(1, rc + 1):
        for j in range(i + 1, rc + 1):
            ok = all(contraction(i, j, v).is_zero() for v in G)
            out.append(check("harmonicity", dict(p, i=i, j=j), ok, "nonzero contraction"))
    return out
