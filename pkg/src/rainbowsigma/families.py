"""Graph families: the two tightness constructions and a seeded random corpus
with a lower (or exact) target on sigma_2."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import PreconditionError
from .graph import Edge, Graph, components, edge_key, is_connected, sigma2


@dataclass(frozen=True)
class Construction:
    graph: Graph
    # (x_{0,1}, x_{m+1,2})
    terminals: tuple[int, int]
    # (x_{i,1}, x_{i,2}) for every block i = 0..m+1
    hubs: tuple[tuple[int, int], ...]


def _chain(blocks: list[tuple[list[int], list[Edge], int, int]], n: int) -> Construction:
    edges: list[Edge] = []
    hubs = []
    for _, block_edges, x1, x2 in blocks:
        edges.extend(block_edges)
        hubs.append((x1, x2))
    for (_, x2), (y1, _) in zip(hubs, hubs[1:]):
        edges.append(edge_key(x2, y1))
    return Construction(Graph(n, edges), (hubs[0][0], hubs[-1][1]), tuple(hubs))


def example1(sigma2_value: int, m: int) -> Construction:
    """Chain of ``m`` blocks K_{2,k-1} (k = sigma2/2, clique side completed)
    between two end blocks K_{2,k}, joined hub-to-hub."""
    if sigma2_value < 4 or sigma2_value % 2:
        raise PreconditionError("example1 needs an even sigma_2 >= 4")
    if m < 0:
        raise PreconditionError("example1 needs m >= 0")
    half = sigma2_value // 2
    blocks = []
    nxt = 0
    for i in range(m + 2):
        size = half if i in (0, m + 1) else half - 1
        x1, x2 = nxt, nxt + 1
        clique = list(range(nxt + 2, nxt + 2 + size))
        nxt += 2 + size
        be = [(x, c) for x in (x1, x2) for c in clique]
        be += [(a, b) for j, a in enumerate(clique) for b in clique[j + 1:]]
        blocks.append(([x1, x2] + clique, be, x1, x2))
    return _chain(blocks, nxt)


def example2(delta: int, m: int) -> Construction:
    """Chain of ``m`` cliques K_{delta+1} between two K_{delta+2}; in every
    block the edge x_{i,1} x_{i,2} is removed."""
    if delta < 2:
        raise PreconditionError("example2 needs delta >= 2")
    if m < 0:
        raise PreconditionError("example2 needs m >= 0")
    blocks = []
    nxt = 0
    for i in range(m + 2):
        size = delta + 2 if i in (0, m + 1) else delta + 1
        vs = list(range(nxt, nxt + size))
        nxt += size
        be = [(a, b) for j, a in enumerate(vs) for b in vs[j + 1:] if (a, b) != (vs[0], vs[1])]
        blocks.append((vs, be, vs[0], vs[1]))
    return _chain(blocks, nxt)


# --- random corpus ----------------------------------------------------------

def _grow_min_degree(n: int, k: int, rng: random.Random, model: str) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(n)]
    window = k + rng.randint(0, k + 2)
    order = list(range(n))
    rng.shuffle(order)
    for v in order:
        tries = 0
        while len(adj[v]) < k and tries < 50 * n:
            tries += 1
            if model == "ring":
                w = (v + rng.choice([-1, 1]) * rng.randint(1, window)) % n
            else:
                w = rng.randrange(n)
            if w != v and w not in adj[v]:
                adj[v].add(w)
                adj[w].add(v)
    extra = rng.choice([0, 0, n // 10, n // 4])
    for _ in range(extra):
        u = rng.randrange(n)
        if model == "ring":
            w = (u + rng.randint(1, window)) % n
        else:
            w = rng.randrange(n)
        if u != w:
            adj[u].add(w)
            adj[w].add(u)
    # low degree draws are often disconnected; chain the components
    comps = components(Graph(n, [(u, v) for u in range(n) for v in adj[u] if u < v]))
    for a, b in zip(comps, comps[1:]):
        u, w = rng.choice(a), rng.choice(b)
        adj[u].add(w)
        adj[w].add(u)
    return adj


def _nonneighbour_min(adj: list[set[int]], deg: list[int], x: int, skip: int) -> int:
    best = None
    for z in range(len(adj)):
        if z != x and z != skip and z not in adj[x]:
            if best is None or deg[z] < best:
                best = deg[z]
    return best if best is not None else 10 ** 9


def _lower_to(adj: list[set[int]], target: int, rng: random.Random) -> None:
    """Delete random edges (never breaking the sum floor) until sigma_2 == target."""
    n = len(adj)
    deg = [len(a) for a in adj]
    edges = [(u, v) for u in range(n) for v in adj[u] if u < v]
    rng.shuffle(edges)
    for x, y in edges:
        g = Graph(n, [(u, v) for u in range(n) for v in adj[u] if u < v])
        cur = sigma2(g)
        if cur is not None and cur <= target:
            return
        if deg[x] + deg[y] - 2 < target:
            continue
        if deg[x] - 1 + _nonneighbour_min(adj, deg, x, y) < target:
            continue
        if deg[y] - 1 + _nonneighbour_min(adj, deg, y, x) < target:
            continue
        adj[x].discard(y)
        adj[y].discard(x)
        deg[x] -= 1
        deg[y] -= 1
        if not is_connected(Graph(n, [(u, v) for u in range(n) for v in adj[u] if u < v])):
            adj[x].add(y)
            adj[y].add(x)
            deg[x] += 1
            deg[y] += 1


def random_with_sigma2(n: int, target: int, seed: int, *, exact: bool = False,
                       budget: int = 200) -> Graph:
    """Seeded connected graph with ``sigma2 >= target`` (``== target`` when ``exact``).

    Mixes a uniform model with a ring-local one; the latter has large
    diameter and exercises the stage loops.
    """
    if n < 3 or target < 0 or target > 2 * (n - 2):
        raise PreconditionError(f"no connected noncomplete graph on n={n} with sigma_2 >= {target}")
    rng = random.Random(seed)
    k = max(1, -(-target // 2))
    for _ in range(budget):
        model = rng.choice(["uniform", "ring"])
        adj = _grow_min_degree(n, k, rng, model)
        if exact:
            _lower_to(adj, target, rng)
        g = Graph(n, [(u, v) for u in range(n) for v in adj[u] if u < v])
        s2 = sigma2(g)
        if s2 is None or not is_connected(g):
            continue
        if s2 < target or (exact and s2 != target):
            continue
        return g
    raise PreconditionError(f"sampling budget exhausted for n={n}, target={target}")


def with_pendant(g: Graph, attach: int) -> Graph:
    """Append one new vertex hanging off ``attach``."""
    return Graph(g.n + 1, g.edges() + [(attach, g.n)])


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    graph: Graph
    seed: int


def random_corpus(count: int, seed: int, *, n_range=(20, 200), sigma2_range=(4, 40),
                  pendant_every: int = 10) -> list[CorpusEntry]:
    """Deterministic corpus; every ``pendant_every``-th graph carries one pendant."""
    rng = random.Random(seed)
    out = []
    lo_n, hi_n = n_range
    lo_s, hi_s = sigma2_range
    for i in range(count):
        target = lo_s + (i * 7919) % (hi_s - lo_s + 1)
        n = rng.randint(max(lo_n, target // 2 + 3), hi_n)
        gseed = rng.getrandbits(32)
        g = random_with_sigma2(n, target, gseed)
        if pendant_every and i % pendant_every == pendant_every - 1 and g.n < hi_n:
            g = with_pendant(g, rng.randrange(g.n))
        out.append(CorpusEntry(f"random[{i}] n={g.n} target={target}", g, gseed))
    return out
