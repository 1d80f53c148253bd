import pytest
from hypothesis import given, settings

from conftest import corpus, small_graphs
from rainbowsigma import families
from rainbowsigma.domsets import stage1, stage2
from rainbowsigma.errors import PreconditionError
from rainbowsigma.graph import (
    Graph,
    bfs_layers,
    complete_graph,
    cycle_graph,
    diameter,
    edge_key,
    path_graph,
    sigma2,
    wheel_graph,
)
from rainbowsigma.rc import FRESH, EdgeColoring, color_rc, extend_rc_coloring, rc_bound
from rainbowsigma.verify import is_rainbow_connected


def test_rc_bound_values():
    assert rc_bound(14, 6) == 16
    assert rc_bound(10, 2) == 19
    assert rc_bound(2, 9) == 7


def test_extend_whole_vertex_set_returns_base():
    g = cycle_graph(5)
    d = stage2(g, stage1(g))
    base = EdgeColoring({e: i for i, e in enumerate(g.edges())})
    full = d.__class__(frozenset(range(5)), d.stage, d.k1, d.k2, d.bound_value, d.layers, d.sigma2)
    out = extend_rc_coloring(g, full, base)
    assert out == base and out.palette_size == 5


def test_extend_wheel_hub():
    g = wheel_graph(5)
    d = stage2(g, stage1(g))
    hub = d.__class__(frozenset({0}), d.stage, 0, 0, d.bound_value, bfs_layers(g, {0}), d.sigma2)
    col = extend_rc_coloring(g, hub, EdgeColoring({}))
    assert col.palette_size <= FRESH
    assert is_rainbow_connected(g, col)


def test_extend_wheel_stage2_set():
    g = wheel_graph(5)
    d = stage2(g, stage1(g))
    col = extend_rc_coloring(g, d, EdgeColoring({}))
    assert col.palette_size <= FRESH
    assert is_rainbow_connected(g, col)


def test_extend_c9():
    g = cycle_graph(9)
    d = stage2(g, stage1(g))
    assert d.size == 7
    tree = {edge_key(i, i + 1): i + 1 for i in range(6)}
    col = extend_rc_coloring(g, d, EdgeColoring(tree))
    assert col.palette_size <= 12
    assert is_rainbow_connected(g, col)


def test_complete():
    col, rep = color_rc(complete_graph(5))
    assert col.palette_size == 1 and rep.branch == "complete" and rep.ok


def test_path_uses_tree_branch():
    col, rep = color_rc(path_graph(6))
    assert rep.branch == "pendants"
    assert col.palette_size == 5 and rep.ok


def test_c9():
    col, rep = color_rc(cycle_graph(9))
    assert rep.branch == "domset" and rep.ok
    assert col.palette_size <= rc_bound(9, 4) == 14
    assert is_rainbow_connected(cycle_graph(9), col)


def test_example2_small():
    g = families.example2(3, 1).graph
    assert g.n == 14
    col, rep = color_rc(g)
    assert rep.ok
    assert diameter(g) <= col.palette_size <= rc_bound(14, 6)


def test_disconnected_rejected():
    with pytest.raises(PreconditionError):
        color_rc(Graph(4, [(0, 1), (2, 3)]))


@pytest.mark.parametrize("entry", corpus(), ids=lambda e: e.name)
def test_corpus(entry):
    col, rep = color_rc(entry.graph)
    assert rep.ok, rep.to_text()
    assert is_rainbow_connected(entry.graph, col)


@settings(max_examples=60, deadline=None)
@given(small_graphs(min_n=2, max_n=8, connected=True))
def test_small_graphs(g):
    col, rep = color_rc(g)
    assert rep.ok
    assert is_rainbow_connected(g, col)
    assert col.palette_size >= diameter(g)
    assert set(col.colors) == set(g.edges())


def test_deterministic():
    g = families.random_with_sigma2(60, 10, 3)
    assert color_rc(g)[0] == color_rc(g)[0]
