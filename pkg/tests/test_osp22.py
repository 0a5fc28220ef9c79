from __future__ import annotations

from ospinv.osp22 import (SIG, Delta_z, z, check_dictionary, expected_values, intermediates,
                          omega_osp22_integral, osp22_report)
from ospinv.scalar import Scalar


def test_dictionary_matches_J():
    assert all(check_dictionary(max_degree=2).values())


def test_intermediate_values():
    got = intermediates()
    exp = expected_values()
    for name in ("Omega0", "Omega2'", "Omega2''", "Omega4"):
        assert got[name] == exp[name], name
    assert got["Omega2'"] + got["Omega2''"] == exp["Omega2"]


def test_reference_form_differs_by_one_sign():
    exp = expected_values()
    diff = exp["Omega2'"] - exp["Omega2' reference"]
    th = SIG.theta
    assert diff == (Delta_z() * z(2) * z(1, True) * th(1, 1) * th(2, 2)).scale(8)


def test_integral_and_sign():
    res = osp22_report()
    assert all(res.checks.values())
    assert res.ratio == Scalar(0, 8)
    assert res.sign == 1
    assert omega_osp22_integral() == expected_values()["integral"]
    assert Delta_z().degree() == 2
