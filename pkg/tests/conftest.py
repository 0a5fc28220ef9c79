from __future__ import annotations

from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from ospinv.ring import AlgebraSignature, SuperPolynomial, monomial_keys
from ospinv.scalar import Scalar, normalize

settings.register_profile("ospinv", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("ospinv")

SMALL_SIGS = [AlgebraSignature(1, 1, 1), AlgebraSignature(1, 1, 2), AlgebraSignature(2, 1, 1),
              AlgebraSignature(0, 1, 2), AlgebraSignature(1, 0, 2)]

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)
scalars = st.builds(lambda a, b: normalize(Scalar(a, b)), rationals,
                    st.sampled_from([Fraction(0), Fraction(0), Fraction(1), Fraction(-1, 2)]))


def polys(sig: AlgebraSignature, max_degree: int = 3, max_terms: int = 5, parity=None):
    keys = [k for d in range(max_degree + 1) for k in monomial_keys(sig, degree=d)]
    if parity is not None:
        keys = [k for k in keys if bin(k & sig.odd_mask).count("1") % 2 == parity]
    return st.dictionaries(st.sampled_from(keys), scalars, max_size=max_terms).map(
        lambda d: SuperPolynomial(sig, d))


_ACCEPTANCE: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        _ACCEPTANCE.append((name, "PASS" if report.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, status in _ACCEPTANCE:
        terminalreporter.write_line(f"{status}  {name}")
