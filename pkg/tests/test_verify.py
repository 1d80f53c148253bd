import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import small_graphs
from rainbowsigma.errors import LimitExceeded, PreconditionError
from rainbowsigma.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    diameter,
    path_graph,
    petersen_graph,
    wheel_graph,
)
from rainbowsigma.verify import (
    OracleLimits,
    exact_rc,
    exact_rvc,
    is_rainbow_connected,
    is_rainbow_vertex_connected,
    naive_rainbow_connected,
    naive_rainbow_vertex_connected,
    simple_paths,
)


def test_edge_examples():
    p3 = path_graph(3)
    v = is_rainbow_connected(p3, {(0, 1): 1, (1, 2): 1})
    assert not v and v.witness == (0, 2)
    assert is_rainbow_connected(p3, {(0, 1): 1, (1, 2): 2})
    g = petersen_graph()
    assert is_rainbow_connected(g, {e: i for i, e in enumerate(g.edges())})


def test_edge_missing_colour():
    with pytest.raises(PreconditionError):
        is_rainbow_connected(path_graph(3), {(0, 1): 1})


def test_vertex_examples():
    assert is_rainbow_vertex_connected(complete_graph(5), {})
    assert is_rainbow_vertex_connected(path_graph(3), {1: 1})
    v = is_rainbow_vertex_connected(path_graph(4), {1: 1, 2: 1})
    assert not v and v.witness == (0, 3)
    assert not is_rainbow_vertex_connected(path_graph(3), {})


def test_disconnected_fails():
    g = Graph(4, [(0, 1), (2, 3)])
    assert not is_rainbow_connected(g, {(0, 1): 1, (2, 3): 2})
    assert not is_rainbow_vertex_connected(g, {0: 1, 1: 2, 2: 3, 3: 4})


def test_simple_paths_cycle():
    paths = list(simple_paths(cycle_graph(5), 0, 2))
    assert sorted(paths) == [[0, 1, 2], [0, 4, 3, 2]]


@st.composite
def edge_coloured(draw):
    g = draw(small_graphs(min_n=2, max_n=7))
    k = draw(st.integers(1, 5))
    cols = {e: draw(st.integers(1, k)) for e in g.edges()}
    return g, cols


@st.composite
def vertex_coloured(draw):
    g = draw(small_graphs(min_n=2, max_n=7))
    k = draw(st.integers(1, 4))
    cols = {}
    for v in range(g.n):
        c = draw(st.integers(0, k))
        if c:
            cols[v] = c
    return g, cols


@settings(max_examples=300)
@given(edge_coloured())
def test_edge_checker_matches_enumeration(case):
    g, cols = case
    assert bool(is_rainbow_connected(g, cols)) == naive_rainbow_connected(g, cols)


@settings(max_examples=300)
@given(vertex_coloured())
def test_vertex_checker_matches_enumeration(case):
    g, cols = case
    assert bool(is_rainbow_vertex_connected(g, cols)) == naive_rainbow_vertex_connected(g, cols)


def test_label_cap_path_matches_enumeration(monkeypatch):
    # force every pair through the per-pair exact search
    import rainbowsigma.verify as ver
    monkeypatch.setattr(ver, "_LABEL_CAP", 0)
    r = random.Random(3)
    for _ in range(300):
        n = r.randint(2, 7)
        pairs = [p for p in itertools.combinations(range(n), 2) if r.random() < 0.5]
        g = Graph(n, pairs)
        ecol = {e: r.randint(1, 4) for e in g.edges()}
        vcol = {v: r.randint(1, 3) for v in range(n) if r.random() < 0.8}
        assert bool(is_rainbow_connected(g, ecol)) == naive_rainbow_connected(g, ecol)
        assert bool(is_rainbow_vertex_connected(g, vcol)) == naive_rainbow_vertex_connected(g, vcol)


def test_exact_rc_known_values():
    for n in range(2, 7):
        assert exact_rc(complete_graph(n)) == 1
        assert exact_rc(path_graph(n)) == n - 1
    assert exact_rc(cycle_graph(6)) == 3
    assert exact_rc(cycle_graph(5)) == 3
    assert exact_rc(cycle_graph(7)) == 4
    assert exact_rc(petersen_graph(), OracleLimits(max_edges=15)) == 3
    assert exact_rc(wheel_graph(5)) == 2


def test_exact_rvc_known_values():
    assert exact_rvc(complete_graph(4)) == 0
    assert exact_rvc(path_graph(5)) == 3
    assert exact_rvc(petersen_graph()) == 1


def test_oracle_limits():
    with pytest.raises(LimitExceeded):
        exact_rc(complete_graph(7))
    with pytest.raises(LimitExceeded):
        exact_rvc(path_graph(12))


@settings(max_examples=40, deadline=None)
@given(small_graphs(min_n=2, max_n=6, connected=True))
def test_oracle_sandwich(g):
    d = diameter(g)
    if g.m <= 10:
        assert d <= exact_rc(g) <= g.n - 1
    if g.n >= 3:
        assert max(d - 1, 0) <= exact_rvc(g) <= g.n - 2
