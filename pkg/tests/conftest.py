import random

import pytest
from hypothesis import strategies as st

from rainbowsigma.graph import Graph, is_connected


@st.composite
def small_graphs(draw, min_n=1, max_n=7, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = Graph(n, [p for p, keep in zip(pairs, mask) if keep])
    if connected and not is_connected(g):
        # chain the vertices so the draw stays usable
        g = Graph(n, set(g.edges()) | {(i, i + 1) for i in range(n - 1)})
    return g


def relabel(g: Graph, perm: list[int]) -> Graph:
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


@pytest.fixture
def rng():
    return random.Random(12345)


_CORPORA = {}


def corpus(count=60, seed=2024, **kw):
    """Cached seeded random corpus shared between test modules."""
    key = (count, seed, tuple(sorted(kw.items())))
    if key not in _CORPORA:
        from rainbowsigma.families import random_corpus
        _CORPORA[key] = random_corpus(count, seed, **kw)
    return _CORPORA[key]
