from __future__ import annotations

import json
from importlib import resources

import pytest

from ospinv.diffops import is_osp_invariant, highest_weight
from ospinv.group import group_action, reflection, symplectic_upper
from ospinv.localize import specialize_xi
from ospinv.matrices import adjugate, det_laplace, det_permutation, matmul, scalar_identity
from ospinv.pfaffian import (D_of, NilpotencyError, Q_adjugate, Q_matrix, coeff_C, delta,
                             embed, omega, omega_signature, p_elem, pfaffian_membership, phi_elem,
                             q_elem, zeta_and_F)
from ospinv.ring import AlgebraSignature, leading_term
from ospinv.serialize import SCHEMA, dumps, polynomial_document, polynomial_from_document

PAIRS = [(1, 0), (1, 1), (2, 1), (1, 2)]


def test_q_splits_into_p_and_phi():
    sig = AlgebraSignature(1, 1, 2)
    for s in (1, 2):
        for t in (1, 2):
            assert q_elem(sig, s, t) == p_elem(sig, s, t) + phi_elem(sig, s, t)
            assert q_elem(sig, s, t) == q_elem(sig, t, s)
    nu = phi_elem(AlgebraSignature(1, 1, 1), 1, 1)
    s1 = AlgebraSignature(1, 1, 1)
    assert nu == (s1.theta(1, 1) * s1.theta(2, 1)).scale(-2)


@pytest.mark.parametrize("mnN", [(1, 1, 3), (2, 1, 3), (1, 2, 2)])
def test_determinant_algorithms_agree(mnN):
    sig = AlgebraSignature(*mnN)
    Q = Q_matrix(sig, sig.N)
    assert det_laplace(Q, sig) == det_permutation(Q, sig)
    prod = matmul(Q, adjugate(Q, sig), sig)
    D = D_of(sig, sig.N)
    ident = scalar_identity(sig.N, sig)
    assert all(prod[i][j] == ident[i][j] * D for i in range(sig.N) for j in range(sig.N))


def test_adjugate_indexing():
    sig = AlgebraSignature(1, 1, 2)
    Qt = Q_adjugate(sig, 2)
    assert Qt[0][0] == q_elem(sig, 2, 2)
    assert Qt[0][1] == -q_elem(sig, 1, 2)


def test_leading_term_of_D_is_classical():
    sig = AlgebraSignature(2, 1, 2)
    assert leading_term(D_of(sig, 2)) == det_laplace(Q_matrix(sig, 2, "p"), sig)


def test_coeff_C():
    assert coeff_C(1, 1, 2, 1) == 2 * (1 - 2 - 2 + 1)
    assert coeff_C(1, 1, 2, 0) == 1


@pytest.mark.parametrize("mn", PAIRS)
def test_omega_properties(mn):
    m, n = mn
    sig = omega_signature(m, n)
    om = omega(sig)
    assert leading_term(om) == delta(sig) ** (2 * n + 1)
    assert om * om == D_of(sig, m) ** (2 * n + 1)
    assert om.is_homogeneous() and om.degree() == m * (2 * n + 1)
    assert is_osp_invariant(om)
    assert group_action(reflection(m, n), om) == -om
    if n:
        S = [[1] * n for _ in range(n)]
        assert group_action(symplectic_upper(m, n, S), om) == om
    for N in (m, m + 1):
        want = tuple([2 * n + 1] * m + [0] * (N - m))
        assert highest_weight(embed(om, AlgebraSignature(m, n, N))) == want


def test_omega_rank_one_values():
    s = omega_signature(1, 1)
    x, a, b = s.x(1, 1), s.theta(1, 1), s.theta(2, 1)
    assert omega(s) == x ** 3 - (x * a * b).scale(3)
    assert omega(omega_signature(1, 0)) == omega_signature(1, 0).x(1, 1)


@pytest.mark.parametrize("mn", PAIRS)
def test_golden_files(mn):
    m, n = mn
    path = resources.files("ospinv") / "golden" / f"omega_m{m}_n{n}.json"
    text = path.read_text(encoding="utf-8")
    om = omega(omega_signature(m, n))
    assert dumps(polynomial_document(om)) == text
    doc = json.loads(text)
    assert doc["schema"] == SCHEMA
    assert polynomial_from_document(doc) == om


@pytest.mark.parametrize("mn", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_membership_threshold(mn):
    m, n = mn
    sig = omega_signature(m, n)
    assert [pfaffian_membership(sig, k) for k in range(n + 2)] == [k >= n for k in range(n + 2)]


def test_zeta_nilpotent():
    zeta, K, F = zeta_and_F(omega_signature(2, 1))
    assert K >= 1 and (zeta ** (K + 1)).is_zero() and not (zeta ** K).is_zero()


@pytest.mark.parametrize("n", [1, 2])
def test_specialize_xi_reduces_to_rank_one(n):
    rank_one = specialize_xi(omega(omega_signature(1, n)))
    assert specialize_xi(omega(omega_signature(2, n))) == rank_one
    assert max(rank_one) == 2 * n + 1


def test_nilpotency_error_type():
    assert issubclass(NilpotencyError, RuntimeError)
