import pytest

from mindist import complex_from_facets, MonomialIdeal

ACCEPTANCE_LINES = []


@pytest.fixture
def triangle():
    return complex_from_facets(3, [[0, 1], [1, 2], [0, 2]])


@pytest.fixture
def two_edges():
    return complex_from_facets(4, [[0, 1], [2, 3]])


@pytest.fixture
def mixed_ideal():
    return MonomialIdeal.from_supports(3, [[0, 1], [0, 2]])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
