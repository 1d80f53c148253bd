"""Plain-text formats.

Graph: first non-comment line ``n m``, then ``m`` lines ``u v`` with 0-based
ids.  Edge colouring: lines ``u v c``.  Vertex colouring: lines ``v c``
(absent vertices are uncoloured).  ``#`` starts a comment anywhere.
"""

from __future__ import annotations

from .errors import GraphError
from .graph import Edge, Graph, edge_key


def _rows(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line.split()))
    return out


def _ints(lineno: int, fields: list[str], count: int) -> list[int]:
    if len(fields) != count:
        raise GraphError(f"line {lineno}: expected {count} integers, got {len(fields)}")
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise GraphError(f"line {lineno}: non-integer field in {' '.join(fields)!r}") from None


def parse_graph(text: str) -> Graph:
    rows = _rows(text)
    if not rows:
        raise GraphError("empty graph file")
    lineno, fields = rows[0]
    n, m = _ints(lineno, fields, 2)
    if n < 1 or m < 0:
        raise GraphError(f"line {lineno}: bad header n={n} m={m}")
    body = rows[1:]
    if len(body) != m:
        raise GraphError(f"header announces {m} edges, file has {len(body)}")
    edges = []
    seen = set()
    for lineno, fields in body:
        u, v = _ints(lineno, fields, 2)
        if u == v:
            raise GraphError(f"line {lineno}: self-loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"line {lineno}: vertex id out of range for n={n}")
        e = edge_key(u, v)
        if e in seen:
            raise GraphError(f"line {lineno}: duplicate edge {e}")
        seen.add(e)
        edges.append(e)
    return Graph(n, edges)


def emit_graph(g: Graph) -> str:
    return f"{g.n} {g.m}\n" + "".join(f"{u} {v}\n" for u, v in g.edges())


def parse_edge_coloring(text: str) -> dict[Edge, int]:
    out = {}
    for lineno, fields in _rows(text):
        u, v, c = _ints(lineno, fields, 3)
        out[edge_key(u, v)] = c
    return out


def emit_edge_coloring(colors) -> str:
    colors = getattr(colors, "colors", colors)
    return "".join(f"{u} {v} {colors[(u, v)]}\n" for u, v in sorted(colors))


def parse_vertex_coloring(text: str) -> dict[int, int]:
    out = {}
    for lineno, fields in _rows(text):
        v, c = _ints(lineno, fields, 2)
        out[v] = c
    return out


def emit_vertex_coloring(colors) -> str:
    colors = getattr(colors, "colors", colors)
    return "".join(f"{v} {colors[v]}\n" for v in sorted(colors))
