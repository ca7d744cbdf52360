import pytest
from hypothesis import strategies as st

from qsteen.novikov import NovikovScalar

ACCEPTANCE_LINES = []


def scalars(lo=-6, hi=6, max_size=5):
    return st.lists(st.integers(lo, hi), max_size=max_size).map(NovikovScalar)


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
