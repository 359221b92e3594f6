import numpy as np
import pytest

from pants_spectrum import BoundaryLengths, representation

# filled by test_acceptance.py, printed at the end of the session
ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def rep111():
    return representation(BoundaryLengths(1, 1, 1))


@pytest.fixture(scope="session")
def rep115():
    return representation(BoundaryLengths(1, 1, 5))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
