"""Rainbow (vertex-)connectivity checkers and exact small-instance oracles.

The checkers search rainbow *walks*: state is (vertex, bitmask of colours
used).  A walk whose edge colours (resp. internal vertex colours) are
pairwise distinct never repeats an edge (resp. internal vertex), so cutting
its cycles leaves a rainbow path between the same endpoints.  Labels are
expanded in order of length and a label is dropped when the same vertex
already carries a subset of its colours, which keeps the search exact.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterator, Mapping, Optional

from .errors import LimitExceeded, PreconditionError
from .graph import Edge, Graph, diameter, edge_key, is_connected


@dataclass(frozen=True)
class Verdict:
    ok: bool
    witness: Optional[tuple[int, int]] = None

    def __bool__(self) -> bool:
        return self.ok


def _colour_bits(values) -> dict[int, int]:
    return {c: 1 << i for i, c in enumerate(sorted(set(values)))}


def _edge_colours(g: Graph, col) -> Mapping[Edge, int]:
    colours = getattr(col, "colors", col)
    for e in g.edges():
        if e not in colours:
            raise PreconditionError(f"edge {e} has no colour")
    return colours


_SUBSET_SCAN = 24
# labels per source before the breadth-first sweep hands over to per-pair search
_LABEL_CAP = 20000
_INF = float("inf")


def _dominated(seen: dict, w: int, nm: int) -> bool:
    """Record label ``nm`` at ``w`` unless an equal or smaller colour set is there.

    The subset scan is an optimisation only; skipping it for long label lists
    never loses a walk.
    """
    labels = seen.get(w)
    if labels is None:
        seen[w] = {nm}
        return False
    if nm in labels:
        return True
    if len(labels) <= _SUBSET_SCAN and any(m & nm == m for m in labels):
        return True
    labels.add(nm)
    return False


def _sweep(nbrs, s: int, targets: set[int], vertex_mode: bool) -> tuple[set[int], bool]:
    """Breadth-first label sweep from ``s``.

    Returns the targets not reached and whether the sweep ran to exhaustion
    (only then is "not reached" a proof of absence).
    """
    remaining = set(targets)
    remaining.discard(s)
    seen: dict[int, set[int]] = {}
    frontier = []
    if vertex_mode:
        for w, bit in nbrs[s]:
            remaining.discard(w)
            if bit is not None and not _dominated(seen, w, bit):
                frontier.append((w, bit))
    else:
        seen[s] = {0}
        frontier.append((s, 0))
    budget = _LABEL_CAP
    while frontier and remaining:
        nxt = []
        for v, mask in frontier:
            for w, bit in nbrs[v]:
                if vertex_mode:
                    remaining.discard(w)
                    if w == s or bit is None or mask & bit:
                        continue
                else:
                    if mask & bit:
                        continue
                    remaining.discard(w)
                nm = mask | bit
                if not _dominated(seen, w, nm):
                    nxt.append((w, nm))
        budget -= len(nxt)
        frontier = nxt
        if budget < 0 and frontier and remaining:
            return remaining, False
    return remaining, True


def _guide(nbrs, t: int, vbits) -> list[float]:
    """Hop distance to ``t``; in vertex mode only coloured vertices relay."""
    dist = [_INF] * len(nbrs)
    dist[t] = 0
    queue = [t]
    for v in queue:
        if vbits is not None and v != t and vbits[v] is None:
            continue
        for w, _ in nbrs[v]:
            if dist[w] == _INF:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def _pair_search(nbrs, s: int, t: int, vbits=None) -> bool:
    """Exact depth-first search for one pair, steered towards ``t``.

    ``vbits`` is given in vertex mode; the mask then holds the colours of the
    internal vertices visited so far.
    """
    vertex_mode = vbits is not None
    dist = _guide(nbrs, t, vbits)
    if dist[s] == _INF:
        return False
    order = [sorted(nb, key=lambda wb: (dist[wb[0]], wb[0])) for nb in nbrs]
    failed: set[tuple[int, int]] = set()
    stack = [(s, 0, iter(order[s]))]
    while stack:
        v, mask, it = stack[-1]
        for w, bit in it:
            if w == t:
                if vertex_mode or not mask & bit:
                    return True
                continue
            if dist[w] == _INF or mask & (bit or 0):
                continue
            if vertex_mode and (w == s or bit is None):
                continue
            nm = mask | bit
            if (w, nm) not in failed:
                stack.append((w, nm, iter(order[w])))
                break
        else:
            stack.pop()
            failed.add((v, mask))
    return False


def _check_all(nbrs, n: int, vbits=None) -> Verdict:
    for s in range(n):
        missing, exhausted = _sweep(nbrs, s, set(range(s + 1, n)), vbits is not None)
        for t in sorted(missing):
            if exhausted or not _pair_search(nbrs, s, t, vbits):
                return Verdict(False, (s, t))
    return Verdict(True)


def is_rainbow_connected(g: Graph, col) -> Verdict:
    colours = _edge_colours(g, col)
    bits = _colour_bits(colours[e] for e in g.edges())
    nbrs = [[(w, bits[colours[edge_key(v, w)]]) for w in sorted(g.adj[v])] for v in range(g.n)]
    return _check_all(nbrs, g.n)


def is_rainbow_vertex_connected(g: Graph, col) -> Verdict:
    """Uncoloured vertices may only be endpoints of a certifying path."""
    colours = getattr(col, "colors", col)
    bits = _colour_bits(c for c in colours.values() if c is not None)
    vbit = [bits[colours[v]] if colours.get(v) is not None else None for v in range(g.n)]
    nbrs = [[(w, vbit[w]) for w in sorted(g.adj[v])] for v in range(g.n)]
    return _check_all(nbrs, g.n, vbit)


# --- naive enumeration (independent cross-check and oracle backbone) --------

def simple_paths(g: Graph, s: int, t: int) -> Iterator[list[int]]:
    stack = [(s, [s])]
    while stack:
        v, path = stack.pop()
        if v == t:
            yield path
            continue
        for w in sorted(g.adj[v], reverse=True):
            if w not in path:
                stack.append((w, path + [w]))


def naive_rainbow_connected(g: Graph, colours: Mapping[Edge, int]) -> bool:
    for s in range(g.n):
        for t in range(s + 1, g.n):
            if not any(
                len({colours[edge_key(a, b)] for a, b in zip(p, p[1:])}) == len(p) - 1
                for p in simple_paths(g, s, t)
            ):
                return False
    return True


def naive_rainbow_vertex_connected(g: Graph, colours: Mapping[int, Optional[int]]) -> bool:
    for s in range(g.n):
        for t in range(s + 1, g.n):
            ok = False
            for p in simple_paths(g, s, t):
                inner = [colours.get(v) for v in p[1:-1]]
                if None not in inner and len(set(inner)) == len(inner):
                    ok = True
                    break
            if not ok:
                return False
    return True


# --- exact oracles -----------------------------------------------------------

@dataclass(frozen=True)
class OracleLimits:
    max_edges: int = 16
    max_vertices: int = 10
    # seconds; None means unbounded
    time_budget: Optional[float] = None


class _Clock:
    def __init__(self, budget: Optional[float]):
        self.deadline = None if budget is None else time.monotonic() + budget
        self.ticks = 0

    def tick(self) -> None:
        self.ticks += 1
        if self.deadline is not None and self.ticks % 1024 == 0 and time.monotonic() > self.deadline:
            raise LimitExceeded("oracle time budget exhausted")


def _search(items: int, k: int, pair_paths: list[list[tuple[int, ...]]], clock: _Clock) -> bool:
    """Canonical colourings of ``items`` slots with at most ``k`` colours such
    that every pair keeps one path whose slots are pairwise distinct."""
    # for each slot, the (pair, path) entries containing it
    touching: list[list[int]] = [[] for _ in range(items)]
    for pi, paths in enumerate(pair_paths):
        for path in paths:
            for slot in path:
                if pi not in touching[slot]:
                    touching[slot].append(pi)
    colour = [-1] * items

    def alive(path) -> bool:
        used = set()
        for slot in path:
            c = colour[slot]
            if c < 0:
                continue
            if c in used:
                return False
            used.add(c)
        return True

    def rec(i: int, used: int) -> bool:
        clock.tick()
        if i == items:
            return True
        for c in range(min(used + 1, k)):
            colour[i] = c
            if all(any(alive(p) for p in pair_paths[pi]) for pi in touching[i]):
                if rec(i + 1, max(used, c + 1)):
                    return True
        colour[i] = -1
        return False

    if any(not paths for paths in pair_paths):
        return False
    return rec(0, 0)


def exact_rc(g: Graph, limits: OracleLimits = OracleLimits()) -> int:
    if not is_connected(g):
        raise PreconditionError("rc is undefined on disconnected graphs")
    if g.m > limits.max_edges:
        raise LimitExceeded(f"{g.m} edges exceeds max_edges={limits.max_edges}")
    if g.n == 1:
        return 0
    edges = g.edges()
    index = {e: i for i, e in enumerate(edges)}
    clock = _Clock(limits.time_budget)
    pair_paths = []
    for s in range(g.n):
        for t in range(s + 1, g.n):
            if not g.has_edge(s, t):
                pair_paths.append([
                    tuple(index[edge_key(a, b)] for a, b in zip(p, p[1:]))
                    for p in simple_paths(g, s, t)
                ])
    for k in range(max(diameter(g), 1), g.m + 1):
        if _search(len(edges), k, pair_paths, clock):
            return k
    raise AssertionError("a colouring with all edges distinct always works")


def exact_rvc(g: Graph, limits: OracleLimits = OracleLimits()) -> int:
    if not is_connected(g):
        raise PreconditionError("rvc is undefined on disconnected graphs")
    if g.n > limits.max_vertices:
        raise LimitExceeded(f"{g.n} vertices exceeds max_vertices={limits.max_vertices}")
    clock = _Clock(limits.time_budget)
    pair_paths = []
    for s in range(g.n):
        for t in range(s + 1, g.n):
            if not g.has_edge(s, t):
                pair_paths.append([tuple(p[1:-1]) for p in simple_paths(g, s, t)])
    if not pair_paths:
        return 0
    for k in range(max(diameter(g) - 1, 1), g.n + 1):
        if _search(g.n, k, pair_paths, clock):
            return k
    raise AssertionError("distinct colours on every vertex always work")
