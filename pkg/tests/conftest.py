import os

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from toledo.divisors import VerticalDivisor
from toledo.seifert import validate_signature

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=400, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

SMALL = [(2, 3, 7), (2, 3, 11), (3, 4, 5)]
SIGNATURES = SMALL + [(2, 5, 7), (3, 5, 7), (2, 3, 5, 7), (5, 7, 9, 11)]


@pytest.fixture(scope="session")
def sig2311():
    return validate_signature([2, 3, 11])


def signatures():
    return st.sampled_from(SIGNATURES).map(validate_signature)


@st.composite
def divisor_on(draw, sig, lo=-6, hi=6):
    a = draw(st.integers(lo, hi))
    res = tuple(draw(st.integers(0, mk - 1)) for mk in sig.m)
    return VerticalDivisor(sig, a, res)


@st.composite
def sig_and_divisors(draw, count=2):
    sig = draw(signatures())
    return (sig, *[draw(divisor_on(sig)) for _ in range(count)])


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
