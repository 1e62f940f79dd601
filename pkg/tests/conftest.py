from itertools import combinations_with_replacement, product
from math import gcd

import pytest
from hypothesis import strategies as st

from alexcircle.invariants import InvariantTuple


def family(max_pairs=2, max_alpha=5, max_b=3, max_genus=1, max_fts=1, max_ri=4):
    """Brute-force listing of the bounded test family, independent of the census code."""
    pool = [(a, b) for a in range(2, max_alpha + 1) for b in range(1, a) if gcd(a, b) == 1]
    pair_sets = [c for n in range(max_pairs + 1) for c in combinations_with_replacement(pool, n)]
    singulars = [()] + [(r,) for r in range(2, max_ri + 1, 2)]
    out = []
    for eps, g in product("on", range(max_genus + 1)):
        if eps == "n" and g == 0:
            continue
        for f, t, sing in product(range(max_fts + 1), range(max_fts + 1), singulars):
            bs = range(-max_b, max_b + 1) if f + t + len(sing) == 0 else [0]
            for pairs, b in product(pair_sets, bs):
                out.append(InvariantTuple(b, eps, g, f, t, pairs, sing))
    return out


@pytest.fixture(scope="session")
def bounded_family():
    return family()


@st.composite
def seifert_pairs(draw, max_alpha=12):
    alpha = draw(st.integers(2, max_alpha))
    beta = draw(st.integers(1, alpha - 1).filter(lambda b: gcd(alpha, b) == 1))
    return (alpha, beta)


@st.composite
def valid_tuples(draw, max_pairs=3):
    eps = draw(st.sampled_from("on"))
    g = draw(st.integers(1 if eps == "n" else 0, 3))
    f = draw(st.integers(0, 2))
    t = draw(st.integers(0, 2))
    singular = draw(st.lists(st.integers(1, 3).map(lambda k: 2 * k), max_size=3))
    pairs = draw(st.lists(seifert_pairs(), max_size=max_pairs))
    b = 0 if f + t + len(singular) else draw(st.integers(-5, 5))
    return InvariantTuple(b, eps, g, f, t, pairs, singular)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is not None and module.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in module.RESULTS:
            terminalreporter.write_line(line)
