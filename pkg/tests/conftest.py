"""Shared fixtures: concrete presentations whose structure is known exactly.

Expected values in the test modules were frozen from an independent
flat rewriter (tools/oracle.py); coefficient tables here mirror its
fixtures, so the two implementations stay comparable line by line.
"""

import re
from pathlib import Path

import pytest

from diffalg.engine import Poly
from diffalg.presentation import AlgebraPresentation
from diffalg.scalars import rational

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"


def build(n, g, x):
    """Presentation from sparse integer tables; absent coefficients are 0."""
    gg = {(i, j): rational(0)
          for i in range(1, n + 1) for j in range(1, n + 1) if i != j}
    gg.update({k: rational(v) for k, v in g.items()})
    xx = {i: rational(0) for i in range(1, n + 1)}
    xx.update({k: rational(v) for k, v in x.items()})
    return AlgebraPresentation(n, gg, xx)


def poly_of(n, words):
    """Poly from a ``{word: coefficient}`` table of normal (decreasing) words."""
    out = Poly.zero(n)
    for w, c in words.items():
        expts = [0] * n
        for a in w:
            expts[a - 1] += 1
        out = out + Poly.monomial(n, tuple(expts), rational(c))
    return out


# -- four generators ---------------------------------------------------------

@pytest.fixture(scope="session")
def p1():
    """Uniform interacting triple {1,2,3} with the two-sided bystander 4."""
    return build(4, {(1, 2): 1, (2, 1): 1, (1, 3): 1, (3, 1): 1,
                     (2, 3): 1, (3, 2): 1, (1, 4): 2, (4, 1): 2,
                     (2, 4): 2, (4, 2): 2, (3, 4): 2, (4, 3): 2},
                 {1: 1, 2: 1, 3: 1})


@pytest.fixture(scope="session")
def p1m():
    """The non-confluent mutation of p1: interior pair bumped to 2."""
    return build(4, {(1, 2): 1, (2, 1): 1, (1, 3): 1, (3, 1): 1,
                     (2, 3): 2, (3, 2): 2, (1, 4): 2, (4, 1): 2,
                     (2, 4): 2, (4, 2): 2, (3, 4): 2, (4, 3): 2},
                 {1: 1, 2: 1, 3: 1})


@pytest.fixture(scope="session")
def p2():
    """Staircase coefficients on {1,2,3}, one-sided links to 4."""
    return build(4, {(1, 2): -1, (1, 3): -2, (2, 3): -1,
                     (1, 4): 6, (2, 4): 7, (3, 4): 8},
                 {1: 1, 2: 1, 3: 1})


@pytest.fixture(scope="session")
def c4():
    """Single interacting generator, one three-element component, n = 4."""
    return build(4, {(1, 2): 3, (2, 1): 2, (1, 3): 3, (3, 1): 2,
                     (1, 4): 3, (4, 1): 2, (2, 3): 1, (3, 2): 2,
                     (2, 4): 2, (4, 2): 1, (3, 4): 1, (4, 3): 3},
                 {1: 1})


@pytest.fixture(scope="session")
def b4x():
    """Interacting pair {1,2} with two bystanders sharing one coupling."""
    return build(4, {(1, 2): 3, (2, 1): 2,
                     (1, 3): 5, (3, 1): 4, (2, 3): 4, (3, 2): 5,
                     (1, 4): 5, (4, 1): 4, (2, 4): 4, (4, 2): 5,
                     (3, 4): 2, (4, 3): 3},
                 {1: 1, 2: 7})


@pytest.fixture(scope="session")
def d4():
    """Pure ratio table on four generators."""
    return build(4, {(1, 2): 1, (2, 1): 2, (1, 3): 1, (3, 1): 3,
                     (2, 3): 1, (3, 2): 5, (1, 4): 1, (4, 1): 2,
                     (2, 4): 1, (4, 2): 7, (3, 4): 1, (4, 3): 1},
                 {})


# -- three generators ---------------------------------------------------------

@pytest.fixture(scope="session")
def p3():
    """Single interacting generator in the middle."""
    return build(3, {(1, 2): 1, (2, 1): 2, (2, 3): 2, (3, 2): 1,
                     (1, 3): 1, (3, 1): 1}, {2: 1})


@pytest.fixture(scope="session")
def p4():
    """Pure ratio table on three generators."""
    return build(3, {(1, 2): 1, (2, 1): 2, (1, 3): 1, (3, 1): 1,
                     (2, 3): 1, (3, 2): 1}, {})


@pytest.fixture(scope="session")
def b1():
    """Interacting pair 1 < 3 with the bystander 2 in the middle."""
    return build(3, {(1, 3): 3, (3, 1): 2, (1, 2): 5, (2, 1): 4,
                     (2, 3): 5, (3, 2): 4}, {1: 1, 3: 7})


@pytest.fixture(scope="session")
def sym3():
    """Everything interacting, one shared coefficient."""
    return build(3, {(1, 2): 2, (2, 1): 2, (1, 3): 2, (3, 1): 2,
                     (2, 3): 2, (3, 2): 2}, {1: 1, 2: 1, 3: 1})


@pytest.fixture(scope="session")
def lin3():
    """Staircase coefficients, every interacting pair one-sided."""
    return build(3, {(1, 2): -1, (1, 3): -2, (2, 3): -1}, {1: 1, 2: 1, 3: 1})


@pytest.fixture(scope="session")
def c_nonuniform():
    """Single interacting generator, bystander couplings with two leads."""
    return build(3, {(1, 2): 5, (2, 1): 4, (1, 3): 7, (3, 1): 6,
                     (2, 3): 3, (3, 2): 2}, {1: 1})


# -- acceptance reporting -----------------------------------------------------

_ACCEPTANCE = re.compile(r"test_acceptance\.py::test_c(\d+)_(\w+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = {}
    for status, passed in (("passed", True), ("failed", False), ("error", False)):
        for rep in terminalreporter.stats.get(status, []):
            m = _ACCEPTANCE.search(getattr(rep, "nodeid", ""))
            if m:
                k = int(m.group(1))
                slug = m.group(2).replace("_", " ")
                prev = results.get(k, (slug, True))[1]
                results[k] = (slug, prev and passed)
    if not results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for k in sorted(results):
        slug, ok = results[k]
        terminalreporter.write_line(
            f"criterion {k} ({slug}): {'PASS' if ok else 'FAIL'}")
