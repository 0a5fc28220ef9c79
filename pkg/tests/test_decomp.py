from __future__ import annotations

from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ospinv.decomp import (CapExceeded, ExactMatrix, Partition, Subspace, TensorVector,
                           brauer_span, brute_graded_invariants, coevaluation, contraction,
                           dim_gamma, dim_glN, dim_glV_hook, enumerate_partitions, f_mu, gamma0,
                           gamma_space, iota, iota_inverse, kernel_basis, permute,
                           tensor_invariants, verify_generation)
from ospinv.diffops import is_osp_invariant
from ospinv.group import group_action, reflection
from ospinv.invariants import COMPONENT_CAP, component_keys, reflection_sign, span
from ospinv.partitions import formula_dims
from ospinv.pfaffian import omega, omega_signature, q_elem
from ospinv.ring import AlgebraSignature, monomial_keys

S112 = AlgebraSignature(1, 1, 2)

partitions = st.lists(st.integers(0, 6), max_size=5).map(
    lambda xs: Partition(sorted(xs, reverse=True)))


# partitions ---------------------------------------------------------------

def test_enumeration_examples():
    assert enumerate_partitions(2, 2, "even-hook", 1, 1) == [Partition((2,))]
    assert enumerate_partitions(3, 3, "pseudo-admissible", 1, 1) == [Partition((3,))]
    assert enumerate_partitions(3, 3, "even-hook", 1, 1) == []
    assert [p.parts for p in enumerate_partitions(3, 3)] == [(1, 1, 1), (2, 1), (3,)]
    with pytest.raises(ValueError):
        enumerate_partitions(-1, 2)


def test_dimension_examples():
    assert dim_glN((3, 0), 2) == 4
    assert dim_gamma(2, 1, 1) == 4 == dim_glN((3,), 2)
    assert f_mu((2, 1)) == 2
    assert dim_gamma(3, 1, 1) == 10
    with pytest.raises(ValueError):
        dim_glN((1, 1, 1), 2)


@given(partitions)
def test_transpose_involution(lam):
    assert lam.transpose().transpose() == lam
    assert lam.transpose().size() == lam.size()


@given(partitions)
def test_pseudo_admissible_shape(lam):
    if lam.pseudo_admissible(1, 1):
        assert lam.part(1) % 2 == 1 and lam.part(1) >= 3 and lam.in_hook(1, 2)
        assert all(p % 2 == 0 for p in lam.parts[1:])


@pytest.mark.parametrize("d", range(1, 7))
def test_sum_of_squares_of_f(d):
    assert sum(f_mu(p) ** 2 for p in enumerate_partitions(d, d)) == factorial(d)


@pytest.mark.parametrize("lam,N", [((2, 1), 3), ((3, 1), 2), ((2, 2), 3), ((1, 1, 1), 3)])
def test_weyl_dimension_counts_tableaux(lam, N):
    # a gl_N module dimension is the (N|0)-hook tableaux count
    assert dim_glN(lam, N) == dim_glV_hook(lam, N, 0)


@pytest.mark.parametrize("mnN", [(1, 1, 2), (1, 1, 1), (2, 1, 1)])
@pytest.mark.parametrize("d", range(5))
def test_howe_graded_dimension(mnN, d):
    m, n, N = mnN
    sig = AlgebraSignature(m, n, N)
    total = sum(dim_glV_hook(p, m, n) * dim_glN(p, N)
                for p in enumerate_partitions(d, N, "hook", m, n))
    assert total == len(monomial_keys(sig, degree=d))


def test_dim_gamma_integrality():
    for m in (1, 2):
        for n in (0, 1, 2):
            for N in range(m, m + 4):
                assert dim_gamma(N, m, n) >= 1
    assert dim_gamma(2, 2, 1) == 1


# linear algebra -----------------------------------------------------------

def test_kernel_trivial_cases():
    ident = ExactMatrix.from_rows([[1, 0], [0, 1]])
    assert kernel_basis(ident) == []
    assert len(kernel_basis(ExactMatrix(2, 2))) == 2


@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=4))
def test_rank_nullity(rows):
    M = ExactMatrix.from_rows(rows, 4)
    K = kernel_basis(M)
    assert M.rank() + len(K) == 4
    for v in K:
        assert M.apply(v) == {}


def test_kernel_over_gaussian_rationals():
    from ospinv.scalar import I
    M = ExactMatrix.from_rows([[1, I], [I, -1]])
    K = kernel_basis(M)
    assert len(K) == 1 and M.apply(K[0]) == {}


def test_subspace_equality():
    a = Subspace([{0: 1, 1: 1}, {0: 1}])
    b = Subspace([{1: Fraction(1, 2)}, {0: 3, 1: 2}])
    assert a == b and a.dim == 2
    assert not a.contains({2: 1})


# brute invariants ---------------------------------------------------------

def test_stacked_J_kernel_on_bidegree_one_one():
    res = brute_graded_invariants(S112, multideg=(1, 1), split=False)
    assert res.dim_kernel == 1
    assert span(res.kernel) == span([q_elem(S112, 1, 2)])


def test_graded_examples():
    r2 = brute_graded_invariants(S112, degree=2)
    assert (r2.dim_inv, r2.dim_pseudo) == (3, 0)
    assert span(r2.inv) == span([q_elem(S112, i, j) for i, j in ((1, 1), (1, 2), (2, 2))])
    assert brute_graded_invariants(S112, degree=3).dim_pseudo == 4
    small = AlgebraSignature(2, 1, 1)
    assert all(brute_graded_invariants(small, degree=d).dim_pseudo == 0 for d in range(5))


@pytest.mark.parametrize("d", range(0, 6))
def test_brute_matches_formula(d):
    res = brute_graded_invariants(S112, degree=d)
    assert (res.dim_inv, res.dim_pseudo) == formula_dims(d, 2, 1, 1)


def test_reflection_sign_agrees_with_group_action():
    g = reflection(1, 1)
    for k in monomial_keys(S112, degree=3):
        f = S112.zero() + S112.one().__class__._raw(S112, {k: 1})
        assert group_action(g, f) == f.scale(reflection_sign(S112, k))


def test_kernel_vectors_are_invariant():
    res = brute_graded_invariants(S112, degree=3)
    assert all(is_osp_invariant(f) for f in res.kernel)
    g = reflection(1, 1)
    assert all(group_action(g, f) == -f for f in res.pseudo)


def test_component_cap():
    with pytest.raises(CapExceeded):
        component_keys(AlgebraSignature(3, 2, 3), degree=8)
    assert COMPONENT_CAP == 20_000


# Gamma and generation -----------------------------------------------------

def test_gamma_space_dimensions():
    for N in (1, 2, 3):
        G = gamma_space(AlgebraSignature(1, 1, N))
        assert G.dim == dim_gamma(N, 1, 1)
        assert all(is_osp_invariant(f) for f in G.basis)
    with pytest.raises(ValueError):
        gamma_space(AlgebraSignature(2, 1, 1))


def test_generation_examples():
    checks = verify_generation(S112, 5)
    assert all(c.status == "pass" for c in checks)
    assert [c.values["brute"] for c in checks] == [0, 0, 0, 4, 0, 8]
    one = verify_generation(AlgebraSignature(1, 1, 1), 3)
    assert one[3].values == {"formula": 1, "brute": 1}
    pseudo = brute_graded_invariants(AlgebraSignature(1, 1, 1), degree=3).pseudo
    assert span(pseudo) == span([omega(omega_signature(1, 1))])


# tensors ------------------------------------------------------------------

def test_coevaluation():
    C = coevaluation(1, 1)
    assert C.coeffs == {(1, 1): 1, (2, 3): -1, (3, 2): 1}
    assert is_osp_invariant(iota(C))
    assert iota(C) == q_elem(S112, 1, 2)


def test_contraction_examples():
    assert contraction(1, 2, coevaluation(1, 1)).scalar() == -1
    assert contraction(1, 2, coevaluation(2, 1)).scalar() == 0
    assert contraction(1, 2, coevaluation(1, 2)).scalar() == -3
    e = TensorVector.basis(1, 1, (1, 1, 1))
    assert contraction(1, 2, e) == TensorVector.basis(1, 1, (1,))
    with pytest.raises(IndexError):
        contraction(2, 2, e)


def test_contraction_uses_signed_permutation():
    v = TensorVector.basis(1, 1, (2, 3, 3))
    # moving copy 3 past copy 2 swaps two odd vectors
    assert contraction(1, 3, v) == TensorVector.basis(1, 1, (3,)).scale(-1)


@given(st.lists(st.sampled_from([1, 2, 3]), min_size=3, max_size=3), st.permutations([1, 2, 3]))
def test_iota_round_trip_and_permutation_action(word, sigma):
    v = TensorVector.basis(1, 1, word)
    assert iota_inverse(iota(v)) == v
    w = permute(sigma, v)
    assert len(w.coeffs) == 1
    inv = [0] * 3
    for t, s in enumerate(sigma, start=1):
        inv[s - 1] = t
    assert permute(inv, w) == v


@pytest.mark.parametrize("N,dims", [(1, (0, 0)), (2, (1, 0)), (3, (0, 1)), (4, (3, 0))])
def test_tensor_dims(N, dims):
    res = tensor_invariants(1, 1, N)
    assert (res.dim_inv, res.dim_pseudo) == dims


def test_tensor_cap():
    with pytest.raises(CapExceeded):
        tensor_invariants(1, 1, 11)


@pytest.mark.parametrize("N", [2, 4])
def test_brauer_span_matches_invariants(N):
    assert brauer_span(1, 1, N) == tensor_invariants(1, 1, N).inv_space()
    with pytest.raises(ValueError):
        brauer_span(1, 1, 3)


@pytest.mark.parametrize("N", [3, 4])
def test_invariant_spaces_stable_under_transpositions(N):
    res = tensor_invariants(1, 1, N)
    inv, pseudo = res.inv_space(), res.pseudo_space()
    for i in range(1, N):
        sigma = list(range(1, N + 1))
        sigma[i - 1], sigma[i] = sigma[i], sigma[i - 1]
        for v in res.inv:
            assert inv.contains(iota(permute(sigma, v)).terms)
        for v in res.pseudo:
            assert pseudo.contains(iota(permute(sigma, v)).terms)


def test_gamma0_harmonic():
    G = gamma0(1, 1)
    assert len(G) == f_mu((3,)) == 1
    for i, j in ((1, 2), (1, 3), (2, 3)):
        assert contraction(i, j, G[0]).is_zero()
    pseudo = tensor_invariants(1, 1, 3).pseudo_space()
    assert pseudo.contains(iota(G[0]).terms)
