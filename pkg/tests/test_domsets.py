from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import corpus, small_graphs
from rainbowsigma.domsets import (
    audit_domset,
    build,
    ceil_div,
    stage1_bound,
    stage1,
    stage2,
    stage3,
    stage4,
    stage4_bound,
    strength,
    two_way_bound,
)
from rainbowsigma.errors import PreconditionError
from rainbowsigma.graph import (
    Graph,
    cocktail_party,
    complete_graph,
    cycle_graph,
    is_connected,
    is_connected_subset,
    pendant_vertices,
    path_graph,
    sigma2,
)


def test_bounds_are_exact():
    assert stage1_bound(9, 4, 0) == 8
    assert two_way_bound(9, 4) == 9
    assert stage4_bound(14, 12) == Fraction(8 * 12, 14) + 2
    assert strength("stage3", 13) == 3
    assert strength("stage4", 13) == 4
    assert ceil_div(7, 2) == 4


def test_stage1_c5_trivial():
    d = stage1(cycle_graph(5))
    assert d.vertices == {0}
    assert d.k1 == 0
    assert d.bound_value == 2


def test_stage1_c9_trace():
    d = stage1(cycle_graph(9))
    assert d.vertices == frozenset(range(7))
    assert d.k1 == 1
    assert d.tail == (6, 5, 4)
    assert d.bound_value == 8


def test_stage2_c9_unchanged():
    g = cycle_graph(9)
    d = stage2(g, stage1(g))
    assert d.vertices == frozenset(range(7))
    assert d.k2 == 0
    assert d.bound_value == 9


def test_strong_stages_on_cocktail_party():
    g = cocktail_party(4)
    assert sigma2(g) == 12
    base = stage1(g)
    assert base.vertices == {0}
    assert stage3(g, base).vertices == {0}
    assert stage4(g, base).vertices == {0}
    assert audit_domset(g, {0}, "stage3").ok


def test_audit_c9():
    g = cycle_graph(9)
    assert audit_domset(g, stage1(g).vertices, "stage1").ok
    bad = audit_domset(g, {0}, 1)
    assert bad.failures() == ["two_step"]


def test_preconditions():
    with pytest.raises(PreconditionError):
        stage1(complete_graph(5))
    with pytest.raises(PreconditionError):
        stage1(path_graph(5))  # two pendants
    with pytest.raises(PreconditionError):
        stage1(Graph(4, [(0, 1), (2, 3)]))
    g = cycle_graph(9)
    with pytest.raises(PreconditionError):
        stage3(g, stage1(g))
    with pytest.raises(PreconditionError):
        stage4(g, stage1(g))


def test_stage2_rejects_foreign_set():
    g = cycle_graph(9)
    d = stage1(cycle_graph(7))
    with pytest.raises(PreconditionError):
        stage2(g, d)


@pytest.mark.parametrize("entry", corpus(), ids=lambda e: e.name)
def test_stages_pass_audit_on_corpus(entry):
    g = entry.graph
    s2 = sigma2(g)
    stages = [1, 2] + ([4] if s2 >= 9 else []) + ([3] if s2 >= 12 else [])
    for k in stages:
        d = build(g, k)
        audit = audit_domset(g, d.vertices, k)
        assert audit.ok, (k, audit.failures())
        assert d.size <= d.bound_value
    assert stage1(g).growth_ok


@settings(max_examples=80, deadline=None)
@given(small_graphs(min_n=3, max_n=9, connected=True))
def test_stages_on_small_graphs(g):
    if g.is_complete() or len(pendant_vertices(g)) > 1:
        return
    for k in (1, 2):
        d = build(g, k)
        assert is_connected_subset(g, d.vertices)
        assert audit_domset(g, d.vertices, k).ok


@given(small_graphs(min_n=4, max_n=9, connected=True))
def test_build_deterministic(g):
    if g.is_complete() or len(pendant_vertices(g)) > 1:
        return
    assert build(g, 2) == build(g, 2)
