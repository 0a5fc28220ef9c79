"""Differential operators on S(N).

An operator is a finite sum of words ``c * s_1 s_2 ... s_k`` where each
letter is either multiplication by a generator or a partial derivative
with respect to one.  Words act right to left, as written.  Odd partials
are left derivatives: removing theta sitting at position p of a canonical
odd monomial costs ``(-1)**(p-1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .metric import metric
from .ring import EXP_BITS, EXP_MASK, AlgebraSignature, SuperPolynomial, monomial_keys
from .scalar import Scalar, normalize

MUL, PARTIAL = 0, 1


@dataclass(frozen=True)
class Step:
    kind: int
    a: int
    t: int

    def __str__(self):
        return f"X{self.a}_{self.t}" if self.kind == MUL else f"d{self.a}_{self.t}"


def _locate(sig: AlgebraSignature, a: int, t: int):
    """``(is_odd, shift or bit)`` for generator ``(a, t)``."""
    sig._check_row(a)
    sig._check_copy(t)
    if a <= sig.m:
        return False, sig.n_odd + EXP_BITS * sig.even_slot(a, t)
    return True, sig.odd_bit(a, t)


def _apply_step(sig: AlgebraSignature, step: Step, terms: dict) -> dict:
    odd, pos = _locate(sig, step.a, step.t)
    out: dict[int, object] = {}
    get = out.get
    if not odd:
        unit = 1 << pos
        if step.kind == MUL:
            for k, c in terms.items():
                out[k + unit] = c
            return out
        for k, c in terms.items():
            e = (k >> pos) & EXP_MASK
            if e:
                nk = k - unit
                out[nk] = get(nk, 0) + c * e
    else:
        bit = 1 << pos
        below = bit - 1
        want = 0 if step.kind == MUL else bit
        for k, c in terms.items():
            if k & bit != want:
                continue
            nk = k ^ bit
            if (k & below).bit_count() & 1:
                c = -c
            out[nk] = get(nk, 0) + c
    return {k: v for k, v in out.items() if v}


def _step_parity(sig: AlgebraSignature, step: Step) -> int:
    return 0 if step.a <= sig.m else 1


class LinearOperator:
    """Sum of coefficient-weighted words in multiplications and partials."""

    __slots__ = ("sig", "words", "label")

    def __init__(self, sig: AlgebraSignature, words=(), label: str = ""):
        self.sig = sig
        merged: dict[tuple, object] = {}
        for c, steps in words:
            steps = tuple(steps)
            merged[steps] = merged.get(steps, 0) + c
        self.words = tuple((normalize(c), s) for s, c in merged.items() if c)
        self.label = label

    @classmethod
    def identity(cls, sig) -> "LinearOperator":
        return cls(sig, [(1, ())], "1")

    @classmethod
    def zero(cls, sig) -> "LinearOperator":
        return cls(sig, [], "0")

    @property
    def parity(self) -> int | None:
        ps = {sum(_step_parity(self.sig, s) for s in steps) & 1 for _, steps in self.words}
        if not ps:
            return 0
        return ps.pop() if len(ps) == 1 else None

    def order(self) -> int:
        """Largest number of derivatives in one word."""
        return max((sum(s.kind == PARTIAL for s in steps) for _, steps in self.words), default=0)

    def __call__(self, f: SuperPolynomial) -> SuperPolynomial:
        if f.sig != self.sig:
            raise ValueError("signature mismatch")
        acc: dict[int, object] = {}
        get = acc.get
        cache: dict[tuple, dict] = {(): f.terms}

        def run(steps):
            # shared suffixes are evaluated once
            hit = cache.get(steps)
            if hit is None:
                hit = _apply_step(self.sig, steps[0], run(steps[1:]))
                cache[steps] = hit
            return hit

        for c, steps in self.words:
            for k, v in run(steps).items():
                acc[k] = get(k, 0) + c * v
        return SuperPolynomial(self.sig, acc)

    def _check(self, other):
        if not isinstance(other, LinearOperator):
            return NotImplemented
        if other.sig != self.sig:
            raise ValueError("signature mismatch")
        return other

    def __add__(self, other):
        other = self._check(other)
        return LinearOperator(self.sig, self.words + other.words,
                              f"{self.label} + {other.label}")

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "LinearOperator":
        return LinearOperator(self.sig, [(w * c, s) for w, s in self.words], self.label)

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction, Scalar)):
            return self.scale(c)
        return NotImplemented

    def __matmul__(self, other):
        """Composition: ``(A @ B)(f) == A(B(f))``."""
        other = self._check(other)
        return LinearOperator(self.sig, [(c1 * c2, s1 + s2) for c1, s1 in self.words
                                         for c2, s2 in other.words],
                              f"{self.label}∘{other.label}")

    def __pow__(self, k: int):
        out = LinearOperator.identity(self.sig)
        for _ in range(k):
            out = out @ self
        return out

    def __repr__(self):
        return f"LinearOperator({self.label or len(self.words)})"


def mul_op(sig, a, t) -> LinearOperator:
    return LinearOperator(sig, [(1, (Step(MUL, a, t),))], f"X{a}_{t}")


def partial_op(sig, a, t) -> LinearOperator:
    _locate(sig, a, t)
    return LinearOperator(sig, [(1, (Step(PARTIAL, a, t),))], f"d({a},{t})")


def partial(a: int, t: int, f: SuperPolynomial) -> SuperPolynomial:
    return SuperPolynomial(f.sig, _apply_step(f.sig, Step(PARTIAL, a, t), f.terms))


def op_J(sig: AlgebraSignature, a: int, b: int) -> LinearOperator:
    """J_ab = sum_t (X_at d_bt - (-1)^{[a][b]} X_bt d_at) with X_at lowered by kappa^-1."""
    g = metric(sig.m, sig.n)
    pa, pb = sig.parity(a), sig.parity(b)
    sign = -1 if pa and pb else 1
    words = []
    for t in range(1, sig.N + 1):
        for c, v in g.kinv_row(a):
            words.append((v, (Step(MUL, c, t), Step(PARTIAL, b, t))))
        for c, v in g.kinv_row(b):
            words.append((-sign * v, (Step(MUL, c, t), Step(PARTIAL, a, t))))
    return LinearOperator(sig, words, f"J({a},{b})")


def op_E(sig: AlgebraSignature, s: int, t: int) -> LinearOperator:
    """E_st = sum_a X^a_s d_at."""
    sig._check_copy(s)
    sig._check_copy(t)
    words = [(1, (Step(MUL, a, s), Step(PARTIAL, a, t))) for a in range(1, sig.dim + 1)]
    return LinearOperator(sig, words, f"E({s},{t})")


def laplacian_op(sig: AlgebraSignature, s: int, t: int, part: str = "all") -> LinearOperator:
    """sum kappa_ab d_bs d_at over all rows, or only the even / odd rows."""
    sig._check_copy(s)
    sig._check_copy(t)
    g = metric(sig.m, sig.n)
    lo, hi = {"all": (1, sig.dim), "even": (1, sig.m), "odd": (sig.m + 1, sig.dim)}[part]
    words = [(v, (Step(PARTIAL, b, s), Step(PARTIAL, a, t)))
             for a, b, v in g.k_pairs(lo, hi)] if hi >= lo else []
    return LinearOperator(sig, words, f"L{'' if part == 'all' else part}({s},{t})")


def laplacian(s: int, t: int, f: SuperPolynomial, part: str = "all") -> SuperPolynomial:
    return laplacian_op(f.sig, s, t, part)(f)


def laplacian_even(s, t, f):
    return laplacian(s, t, f, "even")


def laplacian_odd(s, t, f):
    return laplacian(s, t, f, "odd")


def nabla_lambda(lam, f: SuperPolynomial) -> SuperPolynomial:
    """Apply prod_{k>m} (d^2_kk)^{lambda_k/2}, k descending."""
    sig = f.sig
    parts = list(getattr(lam, "parts", lam))
    if len(parts) > sig.N:
        raise ValueError("partition longer than N")
    parts += [0] * (sig.N - len(parts))
    for k in range(sig.N, sig.m, -1):
        if parts[k - 1] % 2:
            raise ValueError(f"lambda_{k} must be even for k > m")
    for k in range(sig.N, sig.m, -1):
        L = laplacian_op(sig, k, k)
        for _ in range(parts[k - 1] // 2):
            f = L(f)
            if f.is_zero():
                return f
    return f


def super_bracket(A: LinearOperator, B: LinearOperator) -> LinearOperator:
    pa, pb = A.parity, B.parity
    if pa is None or pb is None:
        raise ValueError("super bracket needs parity-homogeneous operators")
    sign = -1 if pa and pb else 1
    out = A @ B - (B @ A).scale(sign)
    out.label = f"[{A.label},{B.label}]"
    return out


def basis_up_to(sig: AlgebraSignature, max_degree: int) -> list[int]:
    keys = []
    for d in range(max_degree + 1):
        keys.extend(monomial_keys(sig, degree=d))
    return keys


def operator_values(A: LinearOperator, keys) -> list[SuperPolynomial]:
    return [A(SuperPolynomial._raw(A.sig, {k: 1})) for k in keys]


def operators_equal(A: LinearOperator, B: LinearOperator, max_degree: int) -> bool:
    """Equality on every monomial of degree <= ``max_degree``."""
    diff = A - B
    for k in basis_up_to(A.sig, max_degree):
        if not diff(SuperPolynomial._raw(A.sig, {k: 1})).is_zero():
            return False
    return True


def is_osp_invariant(f: SuperPolynomial) -> bool:
    sig = f.sig
    for a in range(1, sig.dim + 1):
        for b in range(a, sig.dim + 1):
            if not op_J(sig, a, b)(f).is_zero():
                return False
    return True


def highest_weight(f: SuperPolynomial) -> tuple[int, ...] | None:
    """E_tt eigenvalues of a gl_N highest weight vector, else ``None``."""
    if f.is_zero():
        return None
    sig = f.sig
    for s in range(1, sig.N + 1):
        for t in range(s + 1, sig.N + 1):
            if not op_E(sig, s, t)(f).is_zero():
                return None
    weight = []
    for t in range(1, sig.N + 1):
        g = op_E(sig, t, t)(f)
        k = next(iter(f.terms))
        c = normalize(Scalar.of(g.coefficient(k)) / f.terms[k])
        if g != f.scale(c):
            return None
        weight.append(c)
    return tuple(weight)
