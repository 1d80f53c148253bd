"""Simple undirected graphs on vertices ``0..n-1`` and the distance machinery
built on top of them.

Everything here is deterministic: BFS explores neighbours in ascending id
order and every tie is broken towards the smallest id.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import GraphError

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph given by a vertex count and adjacency sets."""

    __slots__ = ("n", "adj", "_m")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if n < 1:
            raise GraphError(f"graph needs at least one vertex, got n={n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if v in adj[u]:
                raise GraphError(f"parallel edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
            m += 1
        self.n = n
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(a) for a in adj)
        self._m = m

    @property
    def m(self) -> int:
        return self._m

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[Edge]:
        """All edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def is_complete(self) -> bool:
        return self._m == self.n * (self.n - 1) // 2

    def check_vertices(self, vs: Iterable[int]) -> None:
        for v in vs:
            if not (isinstance(v, int) and 0 <= v < self.n):
                raise GraphError(f"vertex id {v!r} out of range for n={self.n}")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._m})"


# --- small constructors used throughout the tests and the CLI -------------

def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def wheel_graph(rim: int) -> Graph:
    """Hub 0 joined to a cycle on ``1..rim``."""
    edges = [(0, i) for i in range(1, rim + 1)]
    edges += [(i, i % rim + 1) for i in range(1, rim + 1)]
    return Graph(rim + 1, edges)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def cocktail_party(k: int) -> Graph:
    """K_{2k} minus the perfect matching {2i, 2i+1}."""
    n = 2 * k
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if v != u + 1 or u % 2])


# --- sigma_2 ----------------------------------------------------------------

def sigma2(g: Graph) -> Optional[int]:
    """Minimum degree sum over nonadjacent pairs; ``None`` when ``g`` is complete."""
    by_degree = sorted(range(g.n), key=lambda v: (g.degree(v), v))
    best: Optional[int] = None
    for u in range(g.n):
        du = g.degree(u)
        if best is not None and du + g.degree(by_degree[0]) >= best:
            continue
        for v in by_degree:
            if v != u and v not in g.adj[u]:
                s = du + g.degree(v)
                if best is None or s < best:
                    best = s
                break
    return best


# --- distances and layers ---------------------------------------------------

def bfs_distances(g: Graph, sources: Iterable[int]) -> list[int]:
    """Multi-source BFS distances; ``-1`` marks unreachable vertices."""
    dist = [-1] * g.n
    queue: deque[int] = deque()
    for s in sorted(set(sources)):
        dist[s] = 0
        queue.append(s)
    while queue:
        v = queue.popleft()
        dv = dist[v] + 1
        for w in sorted(g.adj[v]):
            if dist[w] < 0:
                dist[w] = dv
                queue.append(w)
    return dist


@dataclass(frozen=True)
class LayerDecomposition:
    """``layers[k]`` holds the vertices at distance exactly ``k`` from ``base``."""

    base: frozenset[int]
    layers: tuple[frozenset[int], ...]
    dist: tuple[int, ...]

    def layer(self, k: int) -> frozenset[int]:
        return self.layers[k] if 0 <= k < len(self.layers) else frozenset()

    def beyond(self, k: int) -> frozenset[int]:
        """Vertices at distance ``k`` or more."""
        return frozenset(v for v, d in enumerate(self.dist) if d >= k)

    @property
    def depth(self) -> int:
        return len(self.layers) - 1

    @property
    def unreached(self) -> frozenset[int]:
        return frozenset(v for v, d in enumerate(self.dist) if d < 0)


def bfs_layers(g: Graph, d: Iterable[int]) -> LayerDecomposition:
    base = frozenset(d)
    if not base:
        raise GraphError("layer decomposition needs a nonempty base set")
    g.check_vertices(base)
    dist = bfs_distances(g, base)
    depth = max(dist)
    buckets: list[set[int]] = [set() for _ in range(depth + 1)]
    for v, dv in enumerate(dist):
        if dv >= 0:
            buckets[dv].add(v)
    return LayerDecomposition(base, tuple(frozenset(b) for b in buckets), tuple(dist))


def is_connected(g: Graph) -> bool:
    return min(bfs_distances(g, [0])) >= 0


def is_connected_subset(g: Graph, s: Iterable[int]) -> bool:
    """Whether ``g[s]`` is connected (the empty set is not)."""
    s = set(s)
    if not s:
        return False
    start = min(s)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in g.adj[v]:
            if w in s and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(s)


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    s = set(s)
    k = len(s) - 1
    return all(len(g.adj[v] & s) == k for v in s)


def components(g: Graph) -> list[list[int]]:
    dist = [-1] * g.n
    comps = []
    for r in range(g.n):
        if dist[r] >= 0:
            continue
        comp = [v for v, d in enumerate(bfs_distances(g, [r])) if d >= 0]
        for v in comp:
            dist[v] = 0
        comps.append(comp)
    return comps


@dataclass(frozen=True)
class GraphMetrics:
    connected: bool
    diameter: Optional[int]
    eccentricities: Optional[tuple[int, ...]]
    pendants: frozenset[int]


def graph_metrics(g: Graph) -> GraphMetrics:
    pendants = frozenset(v for v in range(g.n) if g.degree(v) == 1)
    ecc = []
    for v in range(g.n):
        dist = bfs_distances(g, [v])
        if min(dist) < 0:
            return GraphMetrics(False, None, None, pendants)
        ecc.append(max(dist))
    return GraphMetrics(True, max(ecc), tuple(ecc), pendants)


def diameter(g: Graph) -> int:
    met = graph_metrics(g)
    if not met.connected:
        raise GraphError("diameter is undefined on a disconnected graph")
    return met.diameter


def pendant_vertices(g: Graph) -> frozenset[int]:
    return frozenset(v for v in range(g.n) if g.degree(v) == 1)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Return ``g[s]`` relabelled to ``0..|s|-1`` and the table new id -> old id."""
    order = tuple(sorted(set(s)))
    if not order:
        raise GraphError("induced subgraph of the empty set")
    g.check_vertices(order)
    index = {v: i for i, v in enumerate(order)}
    edges = [(index[u], index[v]) for u in order for v in g.adj[u] if v in index and u < v]
    return Graph(len(order), edges), order


def spanning_tree(g: Graph) -> list[Edge]:
    """BFS tree from vertex 0 with ascending-id exploration."""
    parent = [-1] * g.n
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    tree = []
    while queue:
        v = queue.popleft()
        for w in sorted(g.adj[v]):
            if not seen[w]:
                seen[w] = True
                parent[w] = v
                tree.append(edge_key(v, w))
                queue.append(w)
    if len(tree) != g.n - 1:
        raise GraphError("spanning tree requested for a disconnected graph")
    return sorted(tree)
