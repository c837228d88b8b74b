from fractions import Fraction

import hypothesis
import pytest
from hypothesis import strategies as st

from confvand.hermite import NodeSystem

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile("default")


def rationals(bound=10):
    return st.builds(
        Fraction,
        st.integers(min_value=-bound, max_value=bound),
        st.integers(min_value=1, max_value=bound),
    )


@st.composite
def node_systems(draw, max_nodes=4, max_mult=4, max_degree=10, nonzero=False):
    pool = rationals().filter(lambda a: a != 0) if nonzero else rationals()
    alphas = draw(st.lists(pool, min_size=1, max_size=max_nodes, unique=True))
    mults = draw(st.lists(st.integers(1, max_mult), min_size=len(alphas), max_size=len(alphas)))
    while sum(mults) > max_degree:
        j = mults.index(max(mults))
        mults[j] -= 1
    return NodeSystem(tuple(alphas), tuple(mults))


@pytest.fixture
def example1():
    return NodeSystem.from_pairs([(0, 3), (1, 1)])


# one summary line per acceptance criterion
_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))
    elif report.when == "setup" and report.outcome != "passed" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
