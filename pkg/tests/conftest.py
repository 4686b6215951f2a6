import random

import pytest

from truncgroup import ScalarDomain


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture
def QQ():
    return ScalarDomain.rational()


def series_1d(coeffs, order, domain):
    """n=1 series from {degree: coefficient}."""
    from truncgroup import TruncatedSeries
    return TruncatedSeries.univariate(coeffs, order, domain)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for r in sorted(RESULTS, key=lambda r: r.number):
        terminalreporter.write_line(r.line())
