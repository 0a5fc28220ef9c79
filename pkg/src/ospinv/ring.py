"""Sparse supercommutative polynomials over Q(i).

The ring S(N) is the polynomial algebra in the even variables ``x^i_t``
(``1 <= i <= m``) tensored with the Grassmann algebra on the odd variables
``theta^mu_t`` (``1 <= mu <= 2n``), for copies ``t = 1..N``.  Generators are
addressed by a row index ``a`` in ``1..m+2n`` and a copy index ``t``; rows
``a <= m`` are even, the rest odd.

A monomial is packed into a single Python int::

    key = (e_0 | e_1 << B | e_2 << 2B | ...) << n_odd  |  odd_mask

where ``e_s`` is the exponent of even slot ``s = (t-1)*m + (i-1)`` and bit
``j = (t-1)*2n + (mu-1)`` of ``odd_mask`` records ``theta^mu_t``.  The odd
bits follow the global generator index ``(t-1)(m+2n)+a``, so a key always
denotes the odd factors multiplied in increasing index order.  The product
of two keys with disjoint odd masks is ``ka + kb`` up to a Koszul sign.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .scalar import Scalar, format_scalar, normalize

EXP_BITS = 16
EXP_MASK = (1 << EXP_BITS) - 1

_SIGN_CACHE: dict[tuple[int, int], int] = {}


def odd_sign(a: int, b: int) -> int:
    """Sign of ``theta_A * theta_B`` reordered canonically (masks disjoint)."""
    k = (a, b)
    s = _SIGN_CACHE.get(k)
    if s is None:
        count = 0
        bb = b
        while bb:
            low = bb & -bb
            count += (a >> low.bit_length()).bit_count()
            bb ^= low
        s = -1 if count & 1 else 1
        _SIGN_CACHE[k] = s
    return s


def _div(a, b):
    if type(a) is int and type(b) is int:
        q, r = divmod(a, b)
        return q if r == 0 else Fraction(a, b)
    return normalize(a / b)


@dataclass(frozen=True)
class AlgebraSignature:
    """Shape of S(N) for V = C^{m|2n}: ``m`` even rows, ``2n`` odd rows, ``N`` copies."""

    m: int
    n: int
    N: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0 or self.N < 1:
            raise ValueError(f"invalid signature m={self.m}, n={self.n}, N={self.N}")

    @property
    def dim(self) -> int:
        return self.m + 2 * self.n

    @property
    def n_even(self) -> int:
        return self.m * self.N

    @property
    def n_odd(self) -> int:
        return 2 * self.n * self.N

    @cached_property
    def odd_mask(self) -> int:
        return (1 << self.n_odd) - 1

    def parity(self, a: int) -> int:
        self._check_row(a)
        return 0 if a <= self.m else 1

    def _check_row(self, a: int):
        if not 1 <= a <= self.dim:
            raise IndexError(f"row index {a} outside 1..{self.dim}")

    def _check_copy(self, t: int):
        if not 1 <= t <= self.N:
            raise IndexError(f"copy index {t} outside 1..{self.N}")

    def global_index(self, a: int, t: int) -> int:
        return (t - 1) * self.dim + a

    def even_slot(self, i: int, t: int) -> int:
        return (t - 1) * self.m + (i - 1)

    def odd_bit(self, a: int, t: int) -> int:
        return (t - 1) * 2 * self.n + (a - self.m - 1)

    def slot_generator(self, s: int) -> tuple[int, int]:
        t, i = divmod(s, self.m)
        return i + 1, t + 1

    def bit_generator(self, j: int) -> tuple[int, int]:
        t, mu = divmod(j, 2 * self.n)
        return self.m + mu + 1, t + 1

    def generator_key(self, a: int, t: int) -> int:
        self._check_row(a)
        self._check_copy(t)
        if a <= self.m:
            return 1 << (self.n_odd + EXP_BITS * self.even_slot(a, t))
        return 1 << self.odd_bit(a, t)

    def generators(self):
        """All ``(a, t)`` pairs in global index order."""
        return [(a, t) for t in range(1, self.N + 1) for a in range(1, self.dim + 1)]

    # constructors -----------------------------------------------------
    def gen(self, a: int, t: int) -> "SuperPolynomial":
        return SuperPolynomial._raw(self, {self.generator_key(a, t): 1})

    def x(self, i: int, t: int) -> "SuperPolynomial":
        if not 1 <= i <= self.m:
            raise IndexError(f"even index {i} outside 1..{self.m}")
        return self.gen(i, t)

    def theta(self, mu: int, t: int) -> "SuperPolynomial":
        if not 1 <= mu <= 2 * self.n:
            raise IndexError(f"odd index {mu} outside 1..{2 * self.n}")
        return self.gen(self.m + mu, t)

    def const(self, c) -> "SuperPolynomial":
        c = normalize(c)
        return SuperPolynomial._raw(self, {0: c} if c else {})

    def zero(self) -> "SuperPolynomial":
        return SuperPolynomial._raw(self, {})

    def one(self) -> "SuperPolynomial":
        return SuperPolynomial._raw(self, {0: 1})

    # key decoding -----------------------------------------------------
    def even_exponents(self, key: int) -> tuple[int, ...]:
        e = key >> self.n_odd
        out = []
        for _ in range(self.n_even):
            out.append(e & EXP_MASK)
            e >>= EXP_BITS
        return tuple(out)

    def odd_bits(self, key: int) -> tuple[int, ...]:
        o = key & self.odd_mask
        return tuple(j for j in range(self.n_odd) if o >> j & 1)

    def key_degree(self, key: int) -> int:
        return sum(self.even_exponents(key)) + (key & self.odd_mask).bit_count()

    def copy_degrees(self, key: int) -> tuple[int, ...]:
        exps = self.even_exponents(key)
        o = key & self.odd_mask
        w = 2 * self.n
        block = (1 << w) - 1
        out = []
        for t in range(self.N):
            d = sum(exps[t * self.m:(t + 1) * self.m])
            d += ((o >> (t * w)) & block).bit_count()
            out.append(d)
        return tuple(out)

    def encode(self, even: dict, odd) -> int:
        """Key of the monomial with ``even[(i, t)] = e`` and odd factors ``odd``.

        ``odd`` must be listed in strictly increasing global index order.
        """
        key = 0
        for (i, t), e in even.items():
            if not 1 <= i <= self.m:
                raise IndexError(f"even index {i} outside 1..{self.m}")
            self._check_copy(t)
            if not 0 <= e <= EXP_MASK:
                raise ValueError(f"exponent {e} out of range")
            key += e << (self.n_odd + EXP_BITS * self.even_slot(i, t))
        last = -1
        for a, t in odd:
            if a <= self.m:
                raise ValueError(f"row {a} is even")
            g = self.global_index(a, t)
            if g <= last:
                raise ValueError("odd generators must be strictly increasing")
            last = g
            key |= self.generator_key(a, t)
        return key

    def term_sort_key(self, key: int):
        exps = self.even_exponents(key)
        bits = self.odd_bits(key)
        return (-(sum(exps) + len(bits)), tuple(-e for e in exps), bits)

    def name(self, a: int, t: int) -> str:
        if a <= self.m:
            return f"x{a}_{t}"
        return f"θ{a - self.m}_{t}"


@dataclass(frozen=True)
class Monomial:
    """A canonical monomial of S(N): even exponents and an increasing odd list."""

    sig: AlgebraSignature
    key: int

    @classmethod
    def build(cls, sig: AlgebraSignature, even: dict | None = None, odd=()) -> "Monomial":
        return cls(sig, sig.encode(even or {}, odd))

    @property
    def even(self) -> dict[tuple[int, int], int]:
        out = {}
        for s, e in enumerate(self.sig.even_exponents(self.key)):
            if e:
                out[self.sig.slot_generator(s)] = e
        return out

    @property
    def odd(self) -> tuple[tuple[int, int], ...]:
        return tuple(self.sig.bit_generator(j) for j in self.sig.odd_bits(self.key))

    @property
    def parity(self) -> int:
        return (self.key & self.sig.odd_mask).bit_count() & 1

    @property
    def degree(self) -> int:
        return self.sig.key_degree(self.key)

    @property
    def multidegree(self) -> tuple[int, ...]:
        return self.sig.copy_degrees(self.key)

    def as_polynomial(self) -> "SuperPolynomial":
        return SuperPolynomial._raw(self.sig, {self.key: 1})


def mono_mul(a: Monomial, b: Monomial) -> tuple[int, Monomial | None]:
    """Product of two monomials as ``(sign, monomial)``; sign 0 when it vanishes."""
    if a.sig != b.sig:
        raise ValueError("signature mismatch")
    om = a.sig.odd_mask
    oa, ob = a.key & om, b.key & om
    if oa & ob:
        return 0, None
    s = odd_sign(oa, ob) if oa and ob else 1
    return s, Monomial(a.sig, a.key + b.key)


def _mul_terms(ft: dict, gt: dict, om: int) -> dict:
    groups: dict[int, list] = {}
    for kb, cb in gt.items():
        groups.setdefault(kb & om, []).append((kb, cb))
    res: dict[int, object] = {}
    get = res.get
    cache = _SIGN_CACHE
    for ka, ca in ft.items():
        oa = ka & om
        for ob, items in groups.items():
            if oa & ob:
                continue
            if oa and ob:
                s = cache.get((oa, ob))
                if s is None:
                    s = odd_sign(oa, ob)
                c0 = ca if s > 0 else -ca
            else:
                c0 = ca
            for kb, cb in items:
                k = ka + kb
                res[k] = get(k, 0) + c0 * cb
    return {k: v for k, v in res.items() if v}


class SuperPolynomial:
    """Element of S(N) stored as ``{monomial key: coefficient}``.

    Instances are treated as immutable; every operation returns a new object.
    """

    __slots__ = ("sig", "terms")

    def __init__(self, sig: AlgebraSignature, terms: dict | None = None):
        self.sig = sig
        self.terms = {k: normalize(v) for k, v in (terms or {}).items() if v}

    @classmethod
    def _raw(cls, sig, terms):
        obj = cls.__new__(cls)
        obj.sig = sig
        obj.terms = terms
        return obj

    @classmethod
    def from_monomials(cls, sig, items) -> "SuperPolynomial":
        """Build from ``(coeff, even_dict, odd_list)`` triples (odd list canonical)."""
        terms: dict[int, object] = {}
        for c, even, odd in items:
            k = sig.encode(even, odd)
            terms[k] = terms.get(k, 0) + c
        return cls(sig, terms)

    # basic protocol ---------------------------------------------------
    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _coerce(self, other):
        if isinstance(other, SuperPolynomial):
            if other.sig != self.sig:
                raise ValueError("signature mismatch")
            return other
        if isinstance(other, (int, Fraction, Scalar)):
            return self.sig.const(other)
        return None

    def __eq__(self, other):
        if isinstance(other, SuperPolynomial):
            return self.sig == other.sig and self.terms == other.terms
        if isinstance(other, (int, Fraction, Scalar)):
            return self.terms == self.sig.const(other).terms
        return NotImplemented

    __hash__ = None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return SuperPolynomial._raw(self.sig, _add_terms(self.terms, o.terms, 1))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return SuperPolynomial._raw(self.sig, _add_terms(self.terms, o.terms, -1))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return SuperPolynomial._raw(self.sig, {k: -v for k, v in self.terms.items()})

    def scale(self, c) -> "SuperPolynomial":
        c = normalize(c)
        if not c:
            return self.sig.zero()
        return SuperPolynomial._raw(
            self.sig, {k: normalize(v * c) for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SuperPolynomial):
            return poly_mul(self, other)
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(_div(1, other))
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = self.sig.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # inspection -------------------------------------------------------
    def coefficient(self, mono: Monomial | int):
        key = mono.key if isinstance(mono, Monomial) else mono
        return self.terms.get(key, 0)

    def monomials(self) -> list[Monomial]:
        return [Monomial(self.sig, k) for k in self.sorted_keys()]

    def sorted_keys(self) -> list[int]:
        return sorted(self.terms, key=self.sig.term_sort_key)

    def parity(self) -> int | None:
        """0 or 1 for parity-homogeneous elements, ``None`` when mixed (0 -> 0)."""
        om = self.sig.odd_mask
        ps = {(k & om).bit_count() & 1 for k in self.terms}
        if not ps:
            return 0
        return ps.pop() if len(ps) == 1 else None

    def is_even(self) -> bool:
        return self.parity() == 0

    def degree(self) -> int:
        """Maximal total degree (-1 for the zero polynomial)."""
        return max((self.sig.key_degree(k) for k in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({self.sig.key_degree(k) for k in self.terms}) <= 1

    def multidegree(self) -> tuple[int, ...] | None:
        return multidegree(self)

    def leading_term(self) -> "SuperPolynomial":
        return leading_term(self)

    def constant_term(self):
        return self.terms.get(0, 0)

    def map_coefficients(self, fn) -> "SuperPolynomial":
        return SuperPolynomial(self.sig, {k: fn(v) for k, v in self.terms.items()})

    def __repr__(self):
        return f"SuperPolynomial({self.sig.m}|{2 * self.sig.n}, N={self.sig.N}: {self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in self.sorted_keys():
            c = self.terms[k]
            factors = []
            for s, e in enumerate(self.sig.even_exponents(k)):
                if e:
                    name = self.sig.name(*self.sig.slot_generator(s))
                    factors.append(name if e == 1 else f"{name}^{e}")
            for j in self.sig.odd_bits(k):
                factors.append(self.sig.name(*self.sig.bit_generator(j)))
            text = format_scalar(c)
            neg = text.startswith("-")
            if neg:
                text = text[1:]
            if factors:
                body = "*".join(factors) if text == "1" else text + "*" + "*".join(factors)
            else:
                body = text
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)


def _add_terms(a: dict, b: dict, sign: int) -> dict:
    out = dict(a)
    get = out.get
    if sign == 1:
        for k, v in b.items():
            out[k] = get(k, 0) + v
    else:
        for k, v in b.items():
            out[k] = get(k, 0) - v
    return {k: v for k, v in out.items() if v}


def poly_mul(f: SuperPolynomial, g: SuperPolynomial) -> SuperPolynomial:
    """Supercommutative product in S(N)."""
    if f.sig != g.sig:
        raise ValueError("signature mismatch")
    if not f.terms or not g.terms:
        return f.sig.zero()
    return SuperPolynomial._raw(f.sig, _mul_terms(f.terms, g.terms, f.sig.odd_mask))


def poly_sum(polys, sig: AlgebraSignature) -> SuperPolynomial:
    acc: dict[int, object] = {}
    get = acc.get
    for p in polys:
        for k, v in p.terms.items():
            acc[k] = get(k, 0) + v
    return SuperPolynomial._raw(sig, {k: v for k, v in acc.items() if v})


def multidegree(f: SuperPolynomial) -> tuple[int, ...] | None:
    """Common Z_+^N degree of all terms, or ``None`` if not multihomogeneous or zero."""
    degs = {f.sig.copy_degrees(k) for k in f.terms}
    if len(degs) != 1:
        return None
    return degs.pop()


def leading_term(f: SuperPolynomial) -> SuperPolynomial:
    """Image under the map killing every odd generator."""
    om = f.sig.odd_mask
    return SuperPolynomial._raw(f.sig, {k: v for k, v in f.terms.items() if not k & om})


def substitute(f: SuperPolynomial, images: dict, target: AlgebraSignature | None = None
               ) -> SuperPolynomial:
    """Apply the superalgebra homomorphism determined by ``images``.

    ``images`` maps generators ``(a, t)`` to polynomials of the same parity.
    Without ``target`` the result lives in ``f.sig`` and unmapped generators
    are fixed; with ``target`` every generator occurring in ``f`` must be mapped.
    """
    sig = f.sig
    tsig = target or sig
    for (a, t), img in images.items():
        if not isinstance(img, SuperPolynomial) or img.sig != tsig:
            raise ValueError(f"image of {(a, t)} must be a polynomial over the target signature")
        p = img.parity()
        if p is None or (img.terms and p != sig.parity(a)):
            raise ValueError(f"image of {sig.name(a, t)} has the wrong parity")

    def image(gen):
        img = images.get(gen)
        if img is None:
            if target is not None:
                raise KeyError(f"no image for generator {sig.name(*gen)}")
            img = sig.gen(*gen)
        return img

    slot_imgs = [image(sig.slot_generator(s)) for s in range(sig.n_even)]
    bit_imgs = [image(sig.bit_generator(j)) for j in range(sig.n_odd)]
    powers: dict[tuple[int, int], SuperPolynomial] = {}

    def power(s, e):
        p = powers.get((s, e))
        if p is None:
            p = slot_imgs[s] if e == 1 else power(s, e - 1) * slot_imgs[s]
            powers[(s, e)] = p
        return p

    even_cache: dict[int, SuperPolynomial] = {}
    om = sig.odd_mask
    acc: dict[int, object] = {}
    tom = tsig.odd_mask
    for key, c in f.terms.items():
        ekey = key & ~om
        ev = even_cache.get(ekey)
        if ev is None:
            ev = tsig.one()
            for s, e in enumerate(sig.even_exponents(key)):
                if e:
                    ev = ev * power(s, e)
                    if not ev.terms:
                        break
            even_cache[ekey] = ev
        if not ev.terms:
            continue
        term = ev.terms
        for j in sig.odd_bits(key):
            term = _mul_terms(term, bit_imgs[j].terms, tom)
            if not term:
                break
        for k, v in term.items():
            acc[k] = acc.get(k, 0) + c * v
    return SuperPolynomial(tsig, acc)


def specialize_R(f: SuperPolynomial) -> SuperPolynomial:
    """Send copies ``t <= m`` to the unit rows of ``I_m`` and the odd variables of
    copies ``t > m`` to a Grassmann algebra relabelled from copy 1.

    The target is the purely odd signature ``(0, n, N - m)``; when ``N == m``
    the image is a constant, returned in ``(0, n, 1)``.
    """
    sig = f.sig
    m, n, N = sig.m, sig.n, sig.N
    if N < m:
        raise ValueError("specialisation needs N >= m")
    target = AlgebraSignature(0, n, max(N - m, 1))
    images = {}
    for a, t in sig.generators():
        if t <= m:
            images[(a, t)] = target.one() if a == t else target.zero()
        elif a <= m:
            images[(a, t)] = target.zero()
        else:
            images[(a, t)] = target.gen(a - m, t - m)
    return substitute(f, images, target)


def exact_div(f: SuperPolynomial, d: SuperPolynomial) -> SuperPolynomial | None:
    """Quotient ``q`` with ``f == q * d`` or ``None`` when ``d`` does not divide ``f``.

    The divisor must have a nonzero even-only part; nilpotent divisors are zero
    divisors and have no unique quotient.  Terms are eliminated in the order
    (fewest odd factors, then largest even part), under which the leading term
    of ``q * d`` is the product of the leading terms.  The quotient is
    certified by multiplying back.
    """
    if f.sig != d.sig:
        raise ValueError("signature mismatch")
    if not d.terms:
        raise ZeroDivisionError("division by the zero polynomial")
    sig = f.sig
    if not f.terms:
        return sig.zero()
    om = sig.odd_mask
    nodd = sig.n_odd
    even_part = [k for k in d.terms if not k & om]
    if not even_part:
        raise ValueError("divisor has zero leading term (nilpotent)")
    lead = max(even_part)
    lead_c = d.terms[lead]
    lead_fields = []
    e = lead >> nodd
    shift = nodd
    while e:
        if e & EXP_MASK:
            lead_fields.append((shift, e & EXP_MASK))
        e >>= EXP_BITS
        shift += EXP_BITS
    d_items = list(d.terms.items())

    rem = dict(f.terms)
    heap = []
    queued = set()

    def push(k):
        if k not in queued:
            queued.add(k)
            o = k & om
            heapq.heappush(heap, (o.bit_count(), -(k >> nodd), -o, k))

    for k in rem:
        push(k)
    quotient: dict[int, object] = {}
    while heap:
        *_, k = heapq.heappop(heap)
        queued.discard(k)
        c = rem.get(k)
        if not c:
            rem.pop(k, None)
            continue
        for sh, need in lead_fields:
            if (k >> sh) & EXP_MASK < need:
                return None
        qk = k - lead
        qc = _div(c, lead_c)
        quotient[qk] = qc
        oq = qk & om
        for kd, cd in d_items:
            od = kd & om
            if oq & od:
                continue
            s = odd_sign(oq, od) if oq and od else 1
            nk = qk + kd
            nv = rem.get(nk, 0) - s * qc * cd
            if nv:
                rem[nk] = nv
                push(nk)
            else:
                rem.pop(nk, None)
    q = SuperPolynomial(sig, quotient)
    if (q * d).terms != f.terms:
        return None
    return q


def monomial_keys(sig: AlgebraSignature, degree: int | None = None,
                  multideg: tuple[int, ...] | None = None) -> list[int]:
    """Keys of the monomial basis of one graded component, in canonical term order."""
    if (degree is None) == (multideg is None):
        raise ValueError("give exactly one of degree or multideg")
    if multideg is not None:
        if len(multideg) != sig.N:
            raise ValueError("multidegree length must equal N")
        per_copy = [_copy_monomials(sig, t + 1, d) for t, d in enumerate(multideg)]
        keys = [sum(combo) for combo in itertools.product(*per_copy)]
    else:
        keys = []
        for k in range(0, min(degree, sig.n_odd) + 1):
            for bits in itertools.combinations(range(sig.n_odd), k):
                okey = sum(1 << j for j in bits)
                for exps in _compositions(degree - k, sig.n_even):
                    ekey = 0
                    for s, e in enumerate(exps):
                        ekey += e << (EXP_BITS * s)
                    keys.append((ekey << sig.n_odd) | okey)
    return sorted(keys, key=sig.term_sort_key)


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _copy_monomials(sig: AlgebraSignature, t: int, d: int) -> list[int]:
    out = []
    odd_gens = [sig.odd_bit(a, t) for a in range(sig.m + 1, sig.dim + 1)]
    for k in range(0, min(d, len(odd_gens)) + 1):
        for bits in itertools.combinations(odd_gens, k):
            okey = sum(1 << j for j in bits)
            for exps in _compositions(d - k, sig.m):
                ekey = 0
                for i, e in enumerate(exps):
                    ekey += e << (EXP_BITS * sig.even_slot(i + 1, t))
                out.append((ekey << sig.n_odd) | okey)
    return out
