import itertools

import pytest

from hyperramsey.core import BLUE, RED, ConstantColoring


def brute_red_sets(oracle, t):
    """Every (k+1)-subset of the domain with >= t red edges, by plain enumeration."""
    k = oracle.k
    out = []
    for S in itertools.combinations(oracle.domain, k + 1):
        if sum(oracle.color(e) == RED for e in itertools.combinations(S, k)) >= t:
            out.append(S)
    return out


def brute_blue_cliques(oracle, n):
    k = oracle.k
    return [X for X in itertools.combinations(oracle.domain, n)
            if all(oracle.color(e) == BLUE for e in itertools.combinations(X, k))]


@pytest.fixture
def all_red():
    return lambda k, N: ConstantColoring(k, range(1, N + 1), RED)


@pytest.fixture
def all_blue():
    return lambda k, N: ConstantColoring(k, range(1, N + 1), BLUE)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
