"""Verification suites behind ``ospinv verify``.

Each suite returns a :class:`SuiteReport`; check names are listed in
``CATALOGUE`` together with the statement they test.
"""

from __future__ import annotations

import time

from .diffops import (highest_weight, is_osp_invariant, laplacian_op, op_E, op_J,
                      operator_values, basis_up_to, super_bracket)
from .group import (group_action, reflection, rotation, symplectic_diagonal, symplectic_lower,
                    symplectic_upper)
from .identities import identity_suite
from .invariants import brute_graded_invariants, decomposition_checks, verify_generation
from .linalg import Subspace
from .parallel import pmap
from .partitions import enumerate_partitions, formula_dims
from .pfaffian import (D_lambda, D_of, delta, embed, ell_of, omega, omega_signature,
                       pfaffian_membership, zeta_and_F)
from .report import SuiteReport, check
from .ring import AlgebraSignature, leading_term
from .tensor import critical_rank, harmonicity_checks, tensor_checks

CATALOGUE = {
    "D-formulae-1": "odd/even partials of D(k) through the adjugate",
    "D-formulae-2": "Laplacian of D(k) in the diagonal slot",
    "Laplace": "Laplacian of powers of D(k)",
    "ED": "gl_N action on D(k)",
    "reduce": "D(k+1) recursion",
    "EQ": "E acting on the adjugate",
    "truncation": "iterated Laplacian of D(k)^ell",
    "truncating-D": "nabla^(lambda) applied to D_lambda",
    "omega-J-annihilates": "J_ab Omega = 0",
    "omega-leading-term": "pi(Omega) = Delta^(2n+1)",
    "omega-square": "Omega^2 = (det Q)^(2n+1)",
    "omega-degree": "Omega homogeneous of degree m(2n+1)",
    "omega-highest-weight": "Omega in S(N) is a gl_N highest weight vector of weight (2n+1)omega_m",
    "reflection": "reflection acts on Omega by -1",
    "even-group": "symplectic and rotation generators fix Omega",
    "membership": "Delta F (det Q)^k is a polynomial exactly when k >= n",
    "nilpotency": "zeta = det Q - Delta^2 is nilpotent within the cap",
    "osp22": "integral construction for osp(2|2) against reference values and Omega",
    "decomposition-invariant": "invariant dimension equals the even-hook partition sum",
    "decomposition-pseudo": "pseudo-invariant dimension equals the pseudo-admissible sum",
    "small-k": "no pseudo invariants for N < m",
    "D-lambda-highest-weight": "D_lambda is a highest weight vector of weight lambda",
    "D-lambda-invariant": "D_lambda is annihilated by osp",
    "generation": "pseudo invariants = Gamma(N) times polynomials in q",
    "tensor-invariant": "tensor invariants counted by even-hook f^mu",
    "tensor-pseudo": "tensor pseudo invariants counted by pseudo-admissible f^lambda",
    "brauer-span": "invariants of even tensor powers spanned by permuted co-evaluations",
    "odd-power": "no invariants in odd tensor powers",
    "gamma0-dimension": "Gamma0 has dimension f of the m x (2n+1) rectangle",
    "gamma0-pseudo": "Gamma0 consists of pseudo invariants",
    "harmonicity": "every contraction kills Gamma0",
    "gl-relations": "[E_st, E_uv] = delta_tu E_sv - delta_vs E_ut",
    "osp-closure": "super brackets of J_ab lie in their span",
    "laplacian-commutes": "[Laplacian_st, J_ab] = 0",
    "gl-osp-commute": "[E_st, J_ab] = 0",
}

SUITES = ("identities", "invariance", "pseudo", "regular-singular", "osp22", "decomposition",
          "tensor", "generation", "structure")


class UsageError(ValueError):
    pass


def _need_m(m):
    if m < 1:
        raise UsageError("this suite needs m >= 1")


# --- Omega suites --------------------------------------------------------

def suite_identities(m, n, bign, max_ell=3, workers=1):
    params = [(m, n, N) for N in range(1, bign + 1)]
    return identity_suite(params, max_ell=max_ell, workers=workers), {}


def suite_invariance(m, n, **_):
    _need_m(m)
    sig = omega_signature(m, n)
    om = omega(sig)
    p = {"m": m, "n": n}
    out = []
    for a in range(1, sig.dim + 1):
        for b in range(a, sig.dim + 1):
            out.append(check("omega-J-annihilates", dict(p, a=a, b=b),
                             op_J(sig, a, b)(om).is_zero(), "nonzero"))
    out.append(check("omega-leading-term", p, leading_term(om) == delta(sig) ** (2 * n + 1),
                     "pi(Omega) differs"))
    out.append(check("omega-square", p, om * om == D_of(sig, m) ** (2 * n + 1), "differs"))
    deg = m * (2 * n + 1)
    out.append(check("omega-degree", p, om.is_homogeneous() and om.degree() == deg,
                     f"degree {om.degree()}", formula=deg, brute=om.degree()))
    for N in (m, m + 1):
        hw = highest_weight(embed(om, AlgebraSignature(m, n, N)))
        want = tuple([2 * n + 1] * m + [0] * (N - m))
        out.append(check("omega-highest-weight", dict(p, N=N), hw == want, f"weight {hw}"))
    return out, {"omega_terms": len(om.terms)}


def _even_group_elements(m, n):
    items = []
    if n:
        S = [[int(i == j) + int(i != j) for j in range(n)] for i in range(n)]
        items.append(("symplectic-upper", symplectic_upper(m, n, S)))
        items.append(("symplectic-lower", symplectic_lower(m, n, S)))
        A = [[int(i <= j) for j in range(n)] for i in range(n)]
        A[0][0] = 2
        items.append(("symplectic-diagonal", symplectic_diagonal(m, n, A)))
    if m >= 2:
        items.append(("rotation", rotation(m, n, 1, 2, "3/5", "4/5")))
    return items


def suite_pseudo(m, n, **_):
    _need_m(m)
    sig = omega_signature(m, n)
    om = omega(sig)
    p = {"m": m, "n": n}
    out = [check("reflection", p, group_action(reflection(m, n), om) == -om, "not -Omega")]
    for name, g in _even_group_elements(m, n):
        out.append(check("even-group", dict(p, g=name), group_action(g, om) == om, "not fixed"))
    return out, {}


def suite_regular_singular(m, n, max_k=None, **_):
    _need_m(m)
    sig = omega_signature(m, n)
    max_k = n + 1 if max_k is None else max_k
    out = []
    for k in range(max_k + 1):
        got = pfaffian_membership(sig, k)
        out.append(check("membership", {"m": m, "n": n, "k": k}, got == (k >= n),
                         f"polynomial={got}", formula=k >= n, brute=got))
    _, K, _ = zeta_and_F(sig)
    out.append(check("nilpotency", {"m": m, "n": n}, 0 <= K <= m * n + 1, f"K={K}", brute=K))
    return out, {"nilpotency_index": K}


def suite_osp22(**_):
    from .osp22 import osp22_report
    res = osp22_report()
    out = [check("osp22", {"item": name}, ok, "mismatch") for name, ok in res.checks.items()]
    extra = {"ratio": str(res.ratio), "sign": res.sign,
             "notes": {k: bool(v) for k, v in res.notes.items()}}
    return out, extra


# --- decomposition suites ------------------------------------------------

def _decomp_cell(args):
    m, n, N, d = args
    sig = AlgebraSignature(m, n, N)
    checks = decomposition_checks(sig, [d])
    res = brute_graded_invariants(sig, degree=d)
    p = {"m": m, "n": n, "N": N, "d": d}
    if N < m:
        checks.append(check("small-k", p, res.dim_pseudo == 0, f"dim {res.dim_pseudo}",
                            formula=0, brute=res.dim_pseudo))
    evens = enumerate_partitions(d, N, "even-hook", m, n)
    for lam in evens:
        D = D_lambda(sig, ell_of(lam))
        q = dict(p, lam=list(lam))
        hw = highest_weight(D)
        checks.append(check("D-lambda-highest-weight", q, hw == lam.padded(N), f"weight {hw}"))
        checks.append(check("D-lambda-invariant", q, is_osp_invariant(D), "not invariant"))
    f_inv, f_pseudo = formula_dims(d, N, m, n)
    row = {"d": d,
           "even_hook": [list(x) for x in evens],
           "pseudo_admissible": [list(x) for x in
                                 enumerate_partitions(d, N, "pseudo-admissible", m, n)],
           "formula_inv": f_inv, "brute_inv": res.dim_inv,
           "formula_pseudo": f_pseudo, "brute_pseudo": res.dim_pseudo,
           "match": f_inv == res.dim_inv and f_pseudo == res.dim_pseudo}
    return checks, row


def suite_decomposition(m, n, bign, degree, workers=1, **_):
    cells = pmap(_decomp_cell, [(m, n, bign, d) for d in range(degree + 1)], workers)
    return [c for cs, _ in cells for c in cs], {"degrees": [row for _, row in cells]}


def suite_generation(m, n, bign, degree, **_):
    _need_m(m)
    if bign < m:
        raise UsageError("generation needs N >= m")
    return verify_generation(AlgebraSignature(m, n, bign), degree), {}


def suite_tensor(m, n, power, **_):
    out = tensor_checks(m, n, power)
    if m >= 1 and power == critical_rank(m, n):
        out += harmonicity_checks(m, n)
    return out, {}


# --- structure -----------------------------------------------------------

def _op_vector(A, keys):
    vec = {}
    for i, val in enumerate(operator_values(A, keys)):
        for k, c in val.terms.items():
            vec[(i, k)] = c
    return vec


def suite_structure(m, n, bign, degree=3, **_):
    sig = AlgebraSignature(m, n, bign)
    p = {"m": m, "n": n, "N": bign}
    out = []
    keys3 = basis_up_to(sig, degree)
    keys4 = basis_up_to(sig, degree + 1)
    Es = {(s, t): op_E(sig, s, t) for s in range(1, bign + 1) for t in range(1, bign + 1)}
    for (s, t), A in Es.items():
        for (u, v), B in Es.items():
            diff = super_bracket(A, B)
            if t == u:
                diff = diff - Es[(s, v)]
            if v == s:
                diff = diff + Es[(u, t)]
            ok = not _op_vector(diff, keys3)
            out.append(check("gl-relations", dict(p, s=s, t=t, u=u, v=v), ok, "relation fails"))
    Js = {(a, b): op_J(sig, a, b) for a in range(1, sig.dim + 1) for b in range(a, sig.dim + 1)}
    span_J = Subspace(_op_vector(J, keys3) for J in Js.values())
    items = sorted(Js)
    for i, ab in enumerate(items):
        for cd in items[i:]:
            br = super_bracket(Js[ab], Js[cd])
            out.append(check("osp-closure", dict(p, a=ab[0], b=ab[1], c=cd[0], d=cd[1]),
                             span_J.contains(_op_vector(br, keys3)), "bracket outside span"))
    for s in range(1, bign + 1):
        for t in range(s, bign + 1):
            L = laplacian_op(sig, s, t)
            for ab, J in Js.items():
                ok = not _op_vector(super_bracket(L, J), keys4)
                out.append(check("laplacian-commutes", dict(p, s=s, t=t, a=ab[0], b=ab[1]), ok,
                                 "nonzero bracket"))
    for (s, t), E in Es.items():
        for ab, J in Js.items():
            ok = not _op_vector(super_bracket(E, J), keys3)
            out.append(check("gl-osp-commute", dict(p, s=s, t=t, a=ab[0], b=ab[1]), ok,
                             "nonzero bracket"))
    return out, {"dim_osp": span_J.dim}


RUNNERS = {
    "identities": suite_identities,
    "invariance": suite_invariance,
    "pseudo": suite_pseudo,
    "regular-singular": suite_regular_singular,
    "osp22": suite_osp22,
    "decomposition": suite_decomposition,
    "tensor": suite_tensor,
    "generation": suite_generation,
    "structure": suite_structure,
}

DEFAULTS = {
    "identities": {"m": 1, "n": 1, "bign": 2, "max_ell": 3},
    "invariance": {"m": 1, "n": 1},
    "pseudo": {"m": 1, "n": 1},
    "regular-singular": {"m": 1, "n": 1, "max_k": None},
    "osp22": {},
    "decomposition": {"m": 1, "n": 1, "bign": 2, "degree": 6},
    "tensor": {"m": 1, "n": 1, "power": 3},
    "generation": {"m": 1, "n": 1, "bign": 2, "degree": 7},
    "structure": {"m": 1, "n": 1, "bign": 2, "degree": 3},
}


def run_suite(name: str, workers: int = 1, **params) -> SuiteReport:
    if name not in RUNNERS:
        raise UsageError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    args = dict(DEFAULTS[name])
    args.update({k: v for k, v in params.items() if k in args and v is not None})
    start = time.perf_counter()
    checks, extra = RUNNERS[name](workers=workers, **args)
    elapsed = int((time.perf_counter() - start) * 1000)
    return SuiteReport(name, args, checks, elapsed, extra)
