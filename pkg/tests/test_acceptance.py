"""One test per acceptance criterion; each prints a single PASS/FAIL line."""

from __future__ import annotations

import time

import pytest

from ospinv.decomp import contraction, gamma0, gamma_space, dim_gamma
from ospinv.identities import identity_suite
from ospinv.invariants import brute_graded_invariants
from ospinv.partitions import formula_dims
from ospinv.ring import AlgebraSignature
from ospinv.suites import run_suite
from ospinv.tensor import tensor_checks

OMEGA_PAIRS = [(1, 0), (1, 1), (2, 1), (1, 2)]


def report(number, title, ok, detail=""):
    line = f"criterion {number:2d} {title}: {'PASS' if ok else 'FAIL'}"
    print(line + (f" ({detail})" if detail else ""))
    assert ok, detail


def failures(checks):
    return [c.as_dict() for c in checks if c.status != "pass"]


def test_01_identity_suite():
    params = [(m, n, N) for m, n in [(1, 1), (2, 1), (1, 2), (2, 2)] for N in range(1, 5)]
    start = time.perf_counter()
    checks = identity_suite(params, max_ell=3)
    elapsed = time.perf_counter() - start
    names = {c.name for c in checks}
    want = {"D-formulae-1", "D-formulae-2", "Laplace", "ED", "reduce", "EQ", "truncation"}
    bad = failures(checks)
    report(1, "identity suite", not bad and want <= names and elapsed < 300,
           f"{len(checks)} checks, {len(bad)} failures, {elapsed:.1f}s")


def test_02_omega_invariance():
    bad = []
    for m, n in OMEGA_PAIRS:
        rep = run_suite("invariance", m=m, n=n)
        bad += failures(rep.checks)
        assert {"omega-J-annihilates", "omega-leading-term", "omega-square",
                "omega-degree"} <= {c.name for c in rep.checks}
    report(2, "super Pfaffian invariance", not bad, f"{len(bad)} failures")


def test_03_pseudo_invariance():
    bad = []
    for m, n in OMEGA_PAIRS:
        rep = run_suite("pseudo", m=m, n=n)
        bad += failures(rep.checks)
        if n:
            assert any(c.params.get("g", "").startswith("symplectic") for c in rep.checks)
    report(3, "pseudo-invariance under the even group", not bad, f"{len(bad)} failures")


def test_04_localization_threshold():
    bad = []
    for m in (1, 2):
        for n in (1, 2):
            bad += failures(run_suite("regular-singular", m=m, n=n, max_k=n + 1).checks)
    report(4, "localization threshold k >= n", not bad, f"{len(bad)} failures")


def test_05_osp22_equivalence():
    start = time.perf_counter()
    rep = run_suite("osp22")
    elapsed = time.perf_counter() - start
    items = {c.params["item"] for c in rep.checks}
    need = {"Omega0 matches", "Omega2' matches", "Omega2'' matches", "Omega4 matches",
            "Omega2 matches", "integral matches", "integral proportional to Omega"}
    ok = rep.ok and need <= items and rep.extra["sign"] in (1, -1) and elapsed < 60
    report(5, "osp(2|2) integral construction", ok,
           f"ratio {rep.extra['ratio']}, sign {rep.extra['sign']}, {elapsed:.1f}s")


def test_06_decomposition():
    rep = run_suite("decomposition", m=1, n=1, bign=2, degree=6)
    inv = [c for c in rep.checks if c.name == "decomposition-invariant"]
    hw = [c for c in rep.checks if c.name.startswith("D-lambda")]
    ok = not failures(inv + hw) and len(inv) == 7 and hw
    report(6, "invariant decomposition d <= 6", ok,
           f"{len(inv)} degrees, {len(hw)} D_lambda checks")


def test_07_pseudo_decomposition():
    sig = AlgebraSignature(1, 1, 2)
    mism = []
    for d in range(8):
        got = brute_graded_invariants(sig, degree=d).dim_pseudo
        want = formula_dims(d, 2, 1, 1)[1]
        if got != want:
            mism.append((d, got, want))
    small = AlgebraSignature(2, 1, 1)
    small_k = [brute_graded_invariants(small, degree=d).dim_pseudo for d in range(5)]
    report(7, "pseudo-invariant decomposition d <= 7 and small k", not mism and
           small_k == [0] * 5, f"mismatches {mism}, small-k dims {small_k}")


def test_08_generation():
    bad = []
    for N in (1, 2):
        bad += failures(run_suite("generation", m=1, n=1, bign=N, degree=7).checks)
    report(8, "generation by Gamma(N) and the q_ij", not bad, f"{len(bad)} failures")


def test_09_tensor_invariants():
    start = time.perf_counter()
    checks = []
    for N in range(1, 6):
        checks += tensor_checks(1, 1, N)
    five = time.perf_counter() - start
    G = gamma0(1, 1)
    harmonic = all(contraction(i, j, v).is_zero() for v in G
                   for i in range(1, 4) for j in range(i + 1, 4))
    brauer = [c for c in checks if c.name == "brauer-span"]
    ok = not failures(checks) and len(brauer) == 2 and len(G) == 1 and harmonic and five < 120
    report(9, "tensor invariants, FFT and harmonicity", ok,
           f"{len(checks)} checks, dim Gamma0 {len(G)}, {five:.1f}s")


def test_10_structure():
    rep = run_suite("structure", m=1, n=1, bign=2, degree=3)
    names = {c.name for c in rep.checks}
    ok = rep.ok and {"gl-relations", "osp-closure", "laplacian-commutes"} <= names
    report(10, "structure sanity", ok, f"{len(rep.checks)} checks")


@pytest.mark.parametrize("N", [2, 3])
def test_11_dimension_formulas(N):
    expected = dim_gamma(N, 1, 1)
    got = gamma_space(AlgebraSignature(1, 1, N)).dim
    report(11, f"dim Gamma({N})", isinstance(expected, int) and expected > 0 and got == expected,
           f"formula {expected}, rank {got}")
