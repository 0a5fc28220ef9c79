from __future__ import annotations

import pytest

from ospinv.identities import IDENTITIES, _even_partitions, identity_checks, identity_suite
from ospinv.ring import AlgebraSignature


@pytest.mark.parametrize("mnN", [(1, 1, 2), (2, 1, 2), (1, 0, 3), (0, 1, 2)])
def test_identity_checks_pass(mnN):
    checks = identity_checks(AlgebraSignature(*mnN), max_ell=2)
    assert checks
    assert [c for c in checks if c.status != "pass"] == []


def test_every_identity_is_exercised():
    names = {c.name for c in identity_checks(AlgebraSignature(1, 1, 2), max_ell=2)}
    assert names == set(IDENTITIES)


def test_suite_order_independent_of_workers():
    params = [(1, 1, 1), (1, 1, 2)]
    one = identity_suite(params, max_ell=1, workers=1)
    two = identity_suite(params, max_ell=1, workers=2)
    assert [c.as_dict() for c in one] == [c.as_dict() for c in two]


def test_even_partitions():
    assert _even_partitions(2, 4) == [(4,), (4, 4), (4, 2), (2,), (2, 2)]
