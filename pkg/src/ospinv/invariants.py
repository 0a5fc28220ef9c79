"""Brute-force invariants on graded components of S(N), the space Gamma(N)
spanned by gl_N translates of Omega, and the generation check."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from .diffops import op_E, op_J
from .linalg import ExactMatrix, Subspace, kernel_basis
from .partitions import dim_gamma, formula_dims
from .pfaffian import embed, omega, omega_signature, q_elem
from .report import Check, check
from .ring import AlgebraSignature, SuperPolynomial, monomial_keys

COMPONENT_CAP = 20_000


class CapExceeded(ValueError):
    pass


@dataclass
class GradedInvariants:
    sig: AlgebraSignature
    component: dict
    keys: list
    kernel: list = field(default_factory=list)
    inv: list = field(default_factory=list)
    pseudo: list = field(default_factory=list)
    split: bool = True

    @property
    def dim_kernel(self) -> int:
        return len(self.kernel)

    @property
    def dim_inv(self) -> int | None:
        return len(self.inv) if self.split else None

    @property
    def dim_pseudo(self) -> int | None:
        return len(self.pseudo) if self.split else None


def component_keys(sig: AlgebraSignature, degree=None, multideg=None) -> list[int]:
    keys = monomial_keys(sig, degree=degree, multideg=tuple(multideg) if multideg else None)
    if len(keys) > COMPONENT_CAP:
        raise CapExceeded(f"component has {len(keys)} monomials (cap {COMPONENT_CAP})")
    return keys


def reflection_sign(sig: AlgebraSignature, key: int) -> int:
    """Eigenvalue of diag(-1, 1, ..., 1) on a monomial: parity of the x^1 degree."""
    if sig.m == 0:
        return 1
    exps = sig.even_exponents(key)
    total = sum(exps[sig.even_slot(1, t)] for t in range(1, sig.N + 1))
    return -1 if total % 2 else 1


def osp_kernel(sig: AlgebraSignature, keys: list[int]) -> list[SuperPolynomial]:
    """Basis of the common kernel of all J_ab on span(keys)."""
    ops = [op_J(sig, a, b) for a in range(1, sig.dim + 1) for b in range(a, sig.dim + 1)]
    rows: dict[tuple, dict] = {}
    for col, k in enumerate(keys):
        mono = SuperPolynomial._raw(sig, {k: 1})
        for i, op in enumerate(ops):
            for out, c in op(mono).terms.items():
                rows.setdefault((i, out), {})[col] = c
    M = ExactMatrix.from_sparse_rows([rows[r] for r in sorted(rows)], len(keys))
    return [SuperPolynomial(sig, {keys[c]: v for c, v in vec.items()})
            for vec in kernel_basis(M)]


def brute_graded_invariants(sig: AlgebraSignature, degree: int | None = None,
                            multideg=None, split: bool = True) -> GradedInvariants:
    """Kernel of the stacked J_ab on one graded component.

    The reflection acts diagonally on monomials, so its +1 and -1
    eigenspaces inside the kernel are kernels on the two column blocks.
    """
    keys = component_keys(sig, degree, multideg)
    comp = {"degree": degree} if degree is not None else {"multideg": list(multideg)}
    res = GradedInvariants(sig, comp, keys, split=split)
    if not split:
        res.kernel = osp_kernel(sig, keys)
        return res
    plus = [k for k in keys if reflection_sign(sig, k) == 1]
    minus = [k for k in keys if reflection_sign(sig, k) == -1]
    res.inv = osp_kernel(sig, plus)
    res.pseudo = osp_kernel(sig, minus)
    res.kernel = res.inv + res.pseudo
    return res


def span(polys) -> Subspace:
    return Subspace(f.terms for f in polys)


@dataclass
class GammaSpace:
    sig: AlgebraSignature
    basis: list
    space: Subspace
    expected: int

    @property
    def dim(self) -> int:
        return self.space.dim

    def weight_slice(self, multideg) -> list[SuperPolynomial]:
        multideg = tuple(multideg)
        return [f for f in self.basis if f.multidegree() == multideg]


def gamma_space(sig: AlgebraSignature) -> GammaSpace:
    """Closure of Omega under the lowering operators E_ts, t > s, in S(N)."""
    if sig.N < sig.m or sig.m < 1:
        raise ValueError("Gamma(N) needs 1 <= m <= N")
    expected = dim_gamma(sig.N, sig.m, sig.n)
    start = embed(omega(omega_signature(sig.m, sig.n)), sig)
    lowering = [op_E(sig, t, s) for s in range(1, sig.N + 1) for t in range(s + 1, sig.N + 1)]
    space = Subspace()
    basis: list[SuperPolynomial] = []
    queue = [start]
    space.add(start.terms)
    basis.append(start)
    while queue:
        nxt = []
        for f in queue:
            for op in lowering:
                g = op(f)
                if g.is_zero() or not space.add(g.terms):
                    continue
                if space.dim > expected:
                    raise ArithmeticError(f"Gamma({sig.N}) rank exceeds {expected}")
                basis.append(g)
                nxt.append(g)
        queue = nxt
    return GammaSpace(sig, basis, space, expected)


def q_monomials(sig: AlgebraSignature, count: int) -> list[SuperPolynomial]:
    """All products of ``count`` elementary invariants q_ij, i <= j."""
    pairs = [(i, j) for i in range(1, sig.N + 1) for j in range(i, sig.N + 1)]
    out = []
    for combo in combinations_with_replacement(pairs, count):
        f = sig.one()
        for i, j in combo:
            f = f * q_elem(sig, i, j)
        out.append(f)
    return out


def verify_generation(sig: AlgebraSignature, d_max: int) -> list[Check]:
    """Pseudo invariants of degree d against Gamma(N) times monomials in q."""
    m, n, N = sig.m, sig.n, sig.N
    gamma = gamma_space(sig)
    base = m * (2 * n + 1)
    out = []
    for d in range(d_max + 1):
        brute = span(brute_graded_invariants(sig, degree=d).pseudo)
        gen = Subspace()
        rest = d - base
        if rest >= 0 and rest % 2 == 0:
            qs = q_monomials(sig, rest // 2)
            for g in gamma.basis:
                for s in qs:
                    gen.add((g * s).terms)
        ok = gen.dim == brute.dim and brute.contains_space(gen)
        out.append(check("generation", {"m": m, "n": n, "N": N, "d": d}, ok,
                         f"generated rank {gen.dim}, brute rank {brute.dim}",
                         formula=gen.dim, brute=brute.dim))
    return out


def decomposition_checks(sig: AlgebraSignature, degrees) -> list[Check]:
    """Brute invariant and pseudo-invariant dimensions against the partition sums."""
    out = []
    for d in degrees:
        res = brute_graded_invariants(sig, degree=d)
        f_inv, f_pseudo = formula_dims(d, sig.N, sig.m, sig.n)
        p = {"m": sig.m, "n": sig.n, "N": sig.N, "d": d}
        out.append(check("decomposition-invariant", p, res.dim_inv == f_inv,
                         f"formula {f_inv}, brute {res.dim_inv}", formula=f_inv,
                         brute=res.dim_inv))
        out.append(check("decomposition-pseudo", p, res.dim_pseudo == f_pseudo,
                         f"formula {f_pseudo}, brute {res.dim_pseudo}", formula=f_pseudo,
                         brute=res.dim_pseudo))
    return out
