from itertools import combinations

import pytest

from bondcycle import make_graph, petersen


def complete(n):
    return make_graph(n, combinations(range(n), 2))


def cycle_graph(n):
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


@pytest.fixture
def k4():
    return complete(4)


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def pet52():
    return petersen(5, 2)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULT_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
