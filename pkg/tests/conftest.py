import os
import sys

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

# first kernel call pays for numba compilation
settings.register_profile("default", deadline=None)
settings.load_profile("default")

from mixdom.generators import gnp, make_rng  # noqa: E402
from mixdom.graph import build  # noqa: E402


def atlas_graphs():
    """Every graph on at most 7 vertices, one per isomorphism class."""
    import networkx as nx

    return [build(G.number_of_nodes(), G.edges()) for G in nx.graph_atlas_g()]


def random_suite(count=500, seed=20240601):
    combos = [(n, p) for n in (8, 9, 10) for p in (0.2, 0.5, 0.8)]
    out = []
    for k in range(count):
        n, p = combos[k % len(combos)]
        out.append(gnp(n, p, make_rng(seed + k)))
    return out


@st.composite
def graphs(draw, max_n=8, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build(n, chosen)


@pytest.fixture(scope="session")
def atlas():
    return atlas_graphs()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
