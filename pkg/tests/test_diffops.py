from __future__ import annotations

import pytest
from hypothesis import given

from ospinv.diffops import (LinearOperator, highest_weight, is_osp_invariant, laplacian,
                            laplacian_op, mul_op, nabla_lambda, op_E, op_J, operators_equal,
                            partial, partial_op, super_bracket)
from ospinv.pfaffian import D_of, q_elem
from ospinv.ring import AlgebraSignature

from conftest import polys

S = AlgebraSignature(1, 1, 2)


def test_odd_partial_is_a_left_derivative():
    a, b = S.theta(1, 1), S.theta(2, 1)
    assert partial(2, 1, a * b) == b
    assert partial(3, 1, a * b) == -a
    assert partial(1, 1, S.x(1, 1) ** 3) == S.x(1, 1).scale(3) ** 1 * S.x(1, 1)


def test_partial_index_errors():
    with pytest.raises(IndexError):
        partial(4, 1, S.one())
    with pytest.raises(IndexError):
        partial(1, 3, S.one())


@given(polys(S, parity=1), polys(S))
def test_graded_leibniz(f, g):
    for a in (2, 3):
        lhs = partial(a, 2, f * g)
        rhs = partial(a, 2, f) * g - f * partial(a, 2, g)
        assert lhs == rhs


@given(polys(S, parity=0), polys(S))
def test_even_leibniz(f, g):
    assert partial(1, 1, f * g) == partial(1, 1, f) * g + f * partial(1, 1, g)


def test_J_kills_every_q():
    sig = AlgebraSignature(1, 1, 2)
    for a in range(1, 4):
        for b in range(1, 4):
            J = op_J(sig, a, b)
            for s in (1, 2):
                for t in (1, 2):
                    assert J(q_elem(sig, s, t)).is_zero()


def test_J_kills_q_for_n2():
    sig = AlgebraSignature(1, 2, 2)
    for a in range(1, sig.dim + 1):
        for b in range(a, sig.dim + 1):
            assert op_J(sig, a, b)(q_elem(sig, 1, 2)).is_zero()


def test_laplacian_values():
    sig = AlgebraSignature(1, 1, 1)
    assert laplacian(1, 1, D_of(sig, 1)) == sig.const(-2)
    assert laplacian(1, 1, sig.x(1, 1) ** 2, "even") == sig.const(2)
    assert laplacian(1, 1, q_elem(sig, 1, 1), "odd") == sig.const(-4)


def test_operator_algebra():
    d = partial_op(S, 1, 1)
    x = mul_op(S, 1, 1)
    comm = super_bracket(d, x)
    assert operators_equal(comm, LinearOperator.identity(S), 3)
    th, dth = mul_op(S, 2, 1), partial_op(S, 2, 1)
    assert operators_equal(super_bracket(dth, th), LinearOperator.identity(S), 3)
    assert (d @ x).order() == 1
    assert (d ** 2).parity == 0 and dth.parity == 1


def test_gl_commutes_with_osp():
    for s in (1, 2):
        for t in (1, 2):
            for a in range(1, 4):
                for b in range(a, 4):
                    br = super_bracket(op_E(S, s, t), op_J(S, a, b))
                    assert operators_equal(br, LinearOperator.zero(S), 3)


def test_laplacian_commutes_with_J():
    for a in range(1, 4):
        for b in range(a, 4):
            br = super_bracket(laplacian_op(S, 1, 2), op_J(S, a, b))
            assert operators_equal(br, LinearOperator.zero(S), 4)


def test_invariance_and_weights():
    assert is_osp_invariant(q_elem(S, 1, 2))
    assert not is_osp_invariant(S.x(1, 1))
    assert highest_weight(D_of(S, 1)) == (2, 0)
    assert highest_weight(D_of(S, 2)) == (2, 2)
    assert highest_weight(q_elem(S, 2, 2)) is None
    assert highest_weight(S.zero()) is None


def test_nabla_lambda_rejects_odd_rows_beyond_m():
    with pytest.raises(ValueError):
        nabla_lambda((2, 1), D_of(S, 2))
    assert nabla_lambda((2, 2), D_of(S, 2)) != S.zero()
