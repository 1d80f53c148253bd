import pytest
from hypothesis import given

from conftest import small_graphs
from rainbowsigma.errors import GraphError
from rainbowsigma.formats import (
    emit_edge_coloring,
    emit_graph,
    emit_vertex_coloring,
    parse_edge_coloring,
    parse_graph,
    parse_vertex_coloring,
)
from rainbowsigma.graph import path_graph


def test_parse_path():
    assert parse_graph("3 2\n0 1\n1 2\n") == path_graph(3)


def test_comments_and_blank_lines():
    text = "# a path\n3 2  # header\n\n1 2\n0 1 # first\n"
    assert parse_graph(text) == path_graph(3)


@pytest.mark.parametrize("text,msg", [
    ("2 1\n0 0\n", "self-loop"),
    ("", "empty"),
    ("3\n", "expected 2"),
    ("x 1\n0 1\n", "non-integer"),
    ("3 2\n0 1\n", "announces 2"),
    ("3 2\n0 1\n1 0\n", "duplicate"),
    ("3 1\n0 3\n", "out of range"),
    ("0 0\n", "bad header"),
    ("3 1\n0 1 2\n", "expected 2"),
])
def test_malformed(text, msg):
    with pytest.raises(GraphError, match=msg):
        parse_graph(text)


def test_canonical_form():
    assert emit_graph(parse_graph("3 2\n2 1\n1 0\n")) == "3 2\n0 1\n1 2\n"


@given(small_graphs())
def test_round_trip(g):
    text = emit_graph(g)
    assert parse_graph(text) == g
    assert emit_graph(parse_graph(text)) == text


def test_colouring_round_trip():
    ecol = {(0, 1): 3, (1, 2): 1}
    assert parse_edge_coloring(emit_edge_coloring(ecol)) == ecol
    assert parse_edge_coloring("1 0 5\n") == {(0, 1): 5}
    vcol = {2: 1, 0: 4}
    assert parse_vertex_coloring(emit_vertex_coloring(vcol)) == vcol
    with pytest.raises(GraphError):
        parse_vertex_coloring("1 2 3\n")
