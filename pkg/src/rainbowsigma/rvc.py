"""Rainbow vertex colourings dispatched on sigma_2.

For sigma_2 >= 9 the graph is first sparsified, a strong two-step
dominating set D is grown on the sparse graph, D and the heavy part D1 of
N1(D) receive distinct colours, and the light part D2 is coloured from a
small palette by local-lemma resampling so that every vertex of N2(D)
without a D1 neighbour sees two distinct colours in D2.  N2(D) itself stays
uncoloured.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from .domsets import DomSetAudit, ceil_div, stage1, stage3, stage4
from .errors import PreconditionError, ResampleLimitError
from .graph import Graph, bfs_layers, is_connected, sigma2, spanning_tree
from .report import BoundReport
from .sparsify import sparsify
from .verify import is_rainbow_vertex_connected

# sigma_2 = 9..16 -> palette on D2
_SMALL_PALETTES = {9: 63, 10: 41, 11: 27, 12: 20, 13: 16, 14: 13, 15: 11, 16: 10}
# additive constants of the headline statement for sigma_2 = 9..15
_STATEMENT_A = {9: 63, 10: 41, 11: 27, 12: 20, 13: 16, 14: 13, 15: 11}
DEFAULT_RESAMPLE_CAP = 10 ** 6


@dataclass(frozen=True)
class VertexColoring:
    # vertices absent from the map are uncoloured
    colors: Mapping[int, int] = field(default_factory=dict)

    @property
    def palette_size(self) -> int:
        return len(set(self.colors.values()))


@dataclass(frozen=True)
class FrontierPartition:
    d1: frozenset[int]
    d2: frozenset[int]
    l1: frozenset[int]
    l2: frozenset[int]
    threshold: int


@dataclass
class ResampleTrace:
    iterations: int = 0
    events: list[tuple[int, tuple[int, ...]]] = field(default_factory=list)


def palette_for_sigma2(s2: int) -> int:
    if s2 < 9:
        raise PreconditionError("no D2 palette below sigma_2 = 9")
    return _SMALL_PALETTES.get(s2, 9)


def rvc_bound(n: int, s2: int) -> Fraction:
    """Bound certified by the pipeline: |D| + |D1| + palette accounting."""
    if s2 <= 8:
        return Fraction(n - 2)
    if s2 <= 16:
        return Fraction(10 * n - 16, s2 + 2) + 1 + palette_for_sigma2(s2)
    if s2 <= 27:
        return Fraction(10 * n - 16, s2 + 2) + 10
    return Fraction(8 * (n - 2), s2 + 2) + 10


def statement_rvc_bound(n: int, s2: int) -> Fraction:
    """The headline bound exactly as stated, range by range."""
    if 9 <= s2 <= 15:
        return Fraction(10 * n - 16, s2 + 2) + _STATEMENT_A[s2]
    if s2 in (7, 8) or 16 <= s2 <= 27:
        return Fraction(10 * n - 16, s2 + 2) + 10
    return Fraction(8 * (n - 2), s2 + 2) + 10


def heavy_threshold(s2: int) -> int:
    """Integer form of 'at least (s2+2)^2/4 - 1 neighbours in N2'."""
    return ceil_div((s2 + 2) ** 2, 4) - 1


def partition_frontier(g: Graph, d: DomSetAudit) -> FrontierPartition:
    lay = bfs_layers(g, d.vertices)
    if lay.unreached or lay.depth > 2:
        raise PreconditionError("not a two-step dominating set")
    n1, n2 = lay.layer(1), lay.layer(2)
    thr = heavy_threshold(d.sigma2)
    d1 = frozenset(u for u in n1 if len(g.adj[u] & n2) >= thr)
    l1 = frozenset(x for x in n2 if g.adj[x] & d1)
    return FrontierPartition(d1, n1 - d1, l1, n2 - l1, thr)


# --- local lemma admission check -------------------------------------------

def _e_bounds(terms: int) -> tuple[Fraction, Fraction]:
    """Rational lo < e < hi from the first ``terms`` Taylor terms."""
    s = Fraction(0)
    f = 1
    for k in range(terms):
        if k:
            f *= k
        s += Fraction(1, f)
    # tail sum_{k>=terms} 1/k! < 2/terms!
    return s, s + Fraction(2, f * terms)


def lll_value(s2: int, s: int, c: int) -> float:
    """e * c^(1-s) * (dependency degree + 1), for reporting."""
    dep = (Fraction((s2 + 2) ** 2, 4) - 2) * s
    return math.e * float(dep + 1) / c ** (s - 1)


def lll_condition(s2: int, s: int, c: int) -> bool:
    """Exact decision of e * c^(1-s) * ((s2+2)^2/4 - 2) s + 1) < 1."""
    if s < 1 or c < 2:
        raise PreconditionError("need s >= 1 and c >= 2")
    q = (Fraction((s2 + 2) ** 2, 4) - 2) * s + 1
    rhs = Fraction(c) ** (s - 1)
    terms = 12
    while True:
        lo, hi = _e_bounds(terms)
        if hi * q < rhs:
            return True
        if lo * q >= rhs:
            return False
        terms *= 2


# --- resampler ------------------------------------------------------------

def lll_resample(g: Graph, d2: Iterable[int], l2: Iterable[int], s: int, c: int, seed: int, *,
                 cap: int = DEFAULT_RESAMPLE_CAP) -> tuple[dict[int, int], ResampleTrace]:
    """Colour ``d2`` from ``range(c)`` until every ``l2`` vertex sees two colours.

    On the first violated vertex (ascending id) its fixed s-subset of D2
    neighbours is redrawn.
    """
    d2 = frozenset(d2)
    order = sorted(l2)
    rng = random.Random(seed)
    colours = {v: rng.randrange(c) for v in sorted(d2)}
    down = {}
    for u in order:
        nb = sorted(g.adj[u] & d2)
        if len(nb) < s:
            raise PreconditionError(f"vertex {u} has {len(nb)} < {s} neighbours in D2")
        down[u] = nb
    subset = {u: tuple(down[u][:s]) for u in order}
    trace = ResampleTrace()
    while True:
        bad = next((u for u in order if len({colours[w] for w in down[u]}) < 2), None)
        if bad is None:
            return colours, trace
        if trace.iterations >= cap:
            raise ResampleLimitError(f"more than {cap} resamples")
        for w in subset[bad]:
            colours[w] = rng.randrange(c)
        trace.iterations += 1
        trace.events.append((bad, subset[bad]))


# --- pipeline -------------------------------------------------------------

def _tree_interior(g: Graph) -> dict[int, int]:
    deg = [0] * g.n
    for u, v in spanning_tree(g):
        deg[u] += 1
        deg[v] += 1
    inner = [v for v in range(g.n) if deg[v] >= 2]
    return {v: i + 1 for i, v in enumerate(inner)}


def color_rvc(g: Graph, seed: int = 0, *,
              cap: int = DEFAULT_RESAMPLE_CAP) -> tuple[VertexColoring, BoundReport]:
    start = time.perf_counter()
    if g.n < 3:
        raise PreconditionError("rainbow vertex colouring needs n >= 3")
    if not is_connected(g):
        raise PreconditionError("rvc is undefined on disconnected graphs")
    s2 = sigma2(g)
    rep = BoundReport(kind="rvc", n=g.n, m=g.m, sigma2=s2, seed=seed)

    if s2 is None:
        col = VertexColoring({})
        rep.branch = "complete"
        rep.implemented_bound = Fraction(0)
    elif s2 <= 8:
        col = VertexColoring(_tree_interior(g))
        rep.branch = "tree"
        rep.implemented_bound = rvc_bound(g.n, s2)
        rep.statement_bound = statement_rvc_bound(g.n, s2)
    else:
        h = sparsify(g)
        base = stage1(h)
        if s2 >= 28:
            d, palette, s = stage3(h, base), 9, ceil_div(s2, 6)
            rep.branch = "stage3"
        else:
            d, palette, s = stage4(h, base), palette_for_sigma2(s2), ceil_div(s2, 4)
            rep.branch = "stage4"
        fp = partition_frontier(h, d)
        colours = {v: i + 1 for i, v in enumerate(sorted(d.vertices | fp.d1))}
        offset = len(colours) + 1
        d2_colours, trace = lll_resample(h, fp.d2, fp.l2, s, palette, seed, cap=cap)
        for v, c in d2_colours.items():
            colours[v] = offset + c
        col = VertexColoring(colours)
        rep.implemented_bound = rvc_bound(g.n, s2)
        rep.statement_bound = statement_rvc_bound(g.n, s2)
        rep.sizes = {"sparse_edges": h.m, "stage1": base.size, "domset": d.size,
                     "d1": len(fp.d1), "d2": len(fp.d2), "l1": len(fp.l1), "l2": len(fp.l2)}
        rep.k1, rep.k2 = d.k1, d.k2
        rep.extra = {"strength": s, "d2_palette": palette, "resamples": trace.iterations,
                     "lll_condition": lll_condition(s2, s, palette)}

    rep.palette_size = col.palette_size
    rep.verified = bool(is_rainbow_vertex_connected(g, col))
    rep.runtime_ms = (time.perf_counter() - start) * 1000
    return col, rep
