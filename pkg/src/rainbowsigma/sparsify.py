"""Connected spanning subgraphs with the same sigma_2 and few edges."""

from __future__ import annotations

from fractions import Fraction

from .errors import PreconditionError, SparsifyError
from .graph import Edge, Graph, components, is_connected, sigma2


def edge_bound(n: int, s2: int) -> Fraction:
    return Fraction(n * s2, 2) + Fraction(2 * n, s2 + 4)


def _min_nonneighbour_degree(adj: list[set[int]], deg: list[int], x: int, skip: int) -> int:
    best = None
    for z in range(len(adj)):
        if z != x and z != skip and z not in adj[x] and (best is None or deg[z] < best):
            best = deg[z]
    return best


def _deletable(adj, deg, x: int, y: int, floor: int) -> bool:
    """Would every nonadjacent pair still sum to >= floor after dropping xy?"""
    if deg[x] + deg[y] - 2 < floor:
        return False
    for a, b in ((x, y), (y, x)):
        low = _min_nonneighbour_degree(adj, deg, a, b)
        if low is not None and deg[a] - 1 + low < floor:
            return False
    return True


def sparsify(g: Graph) -> Graph:
    s2 = sigma2(g)
    if s2 is None:
        raise PreconditionError("complete graph: sigma_2 undefined")
    if not is_connected(g):
        raise PreconditionError("sparsify needs a connected graph")
    adj = [set(a) for a in g.adj]
    deg = [len(a) for a in adj]

    # deletability only ever goes from true to false, so one ascending sweep
    # removes exactly what "repeatedly drop the lowest deletable edge" would
    removed: list[Edge] = []
    for x, y in g.edges():
        if _deletable(adj, deg, x, y, s2):
            adj[x].discard(y)
            adj[y].discard(x)
            deg[x] -= 1
            deg[y] -= 1
            removed.append((x, y))

    def current() -> Graph:
        return Graph(g.n, [(u, v) for u in range(g.n) for v in adj[u] if u < v])

    h = current()
    comps = components(h)
    while len(comps) > 1:
        label = {v: i for i, comp in enumerate(comps) for v in comp}
        joining = [e for e in removed if label[e[0]] != label[e[1]]]
        pick = None
        for x, y in joining:
            trial = Graph(g.n, h.edges() + [(x, y)])
            if sigma2(trial) == s2:
                pick = (x, y)
                break
        if pick is None:
            pick = joining[0]
        x, y = pick
        adj[x].add(y)
        adj[y].add(x)
        removed.remove(pick)
        h = current()
        comps = components(h)

    if not is_connected(h):
        raise SparsifyError("sparsified graph is disconnected")
    if sigma2(h) != s2:
        raise SparsifyError(f"sigma_2 changed from {s2} to {sigma2(h)}")
    if not set(h.edges()) <= set(g.edges()):
        raise SparsifyError("sparsified graph is not a subgraph")
    if not h.m < edge_bound(g.n, s2):
        raise SparsifyError(f"{h.m} edges is not below {edge_bound(g.n, s2)}")
    return h
