"""Connected two-step dominating sets grown in stages.

Stage 1 grows a seed vertex by shortest paths until everything is within
distance two.  Stages 2, 3 and 4 then absorb weakly attached vertices of the
second layer until the set is two-way (every second-layer vertex sees at
least two first-layer vertices and every pendant is inside), or
``ceil(s2/6)``-strong, or ``ceil(s2/4)``-strong respectively.

"Number of neighbours in N1(D)" is what the stage guards count.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .errors import PreconditionError
from .graph import (
    Graph,
    LayerDecomposition,
    bfs_layers,
    is_clique,
    is_connected,
    is_connected_subset,
    pendant_vertices,
    sigma2,
)

STAGES = ("stage1", "stage2", "stage3", "stage4")


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def stage1_bound(n: int, s2: int, n2_size: int) -> Fraction:
    return Fraction(6 * (n - n2_size - 2), s2 + 2) + 1


def two_way_bound(n: int, s2: int) -> Fraction:
    """Size bound shared by stages 2 and 3."""
    return Fraction(6 * (n - 2), s2 + 2) + 2


def stage4_bound(n: int, s2: int) -> Fraction:
    return Fraction(8 * (n - 2), s2 + 2) + 2


def strength(stage: str, s2: int) -> int:
    """Minimum number of N1-neighbours each N2 vertex must end with."""
    if stage == "stage2":
        return 2
    if stage == "stage3":
        return ceil_div(s2, 6)
    if stage == "stage4":
        return ceil_div(s2, 4)
    raise ValueError(f"no strength requirement for {stage}")


@dataclass(frozen=True)
class DomSetAudit:
    vertices: frozenset[int]
    stage: str
    k1: int
    k2: int
    bound_value: Fraction
    layers: LayerDecomposition
    sigma2: int
    # vertices appended by the post-loop step(s), in order
    tail: tuple[int, ...] = ()
    # stage 1 only: (k1+1)(s2/2+1) <= |D u N1(D)| when the loop exited
    growth_ok: Optional[bool] = None

    @property
    def size(self) -> int:
        return len(self.vertices)


def _normalise_stage(kind) -> str:
    if isinstance(kind, int) or (isinstance(kind, str) and kind.isdigit()):
        kind = f"stage{int(kind)}"
    kind = str(kind).lower()
    if kind not in STAGES:
        raise ValueError(f"unknown stage {kind!r}")
    return kind


def _path_into(g: Graph, v: int, dist: tuple[int, ...]) -> list[int]:
    """Shortest path from ``v`` down to the base, lowest-id predecessor at each step."""
    path = [v]
    while dist[path[-1]] > 0:
        cur = path[-1]
        path.append(min(w for w in g.adj[cur] if dist[w] == dist[cur] - 1))
    return path


def _pick(g: Graph, cands: Iterable[int]) -> int:
    return max(cands, key=lambda v: (g.degree(v), -v))


def _check_common(g: Graph) -> int:
    if not is_connected(g):
        raise PreconditionError("graph must be connected")
    s2 = sigma2(g)
    if s2 is None:
        raise PreconditionError("complete graph: sigma_2 undefined, nothing to dominate")
    return s2


def stage1(g: Graph, *, audit: bool = False) -> DomSetAudit:
    s2 = _check_common(g)
    if len(pendant_vertices(g)) > 1:
        raise PreconditionError("stage 1 requires at most one pendant vertex")

    has_partner = [v for v in range(g.n) if g.degree(v) < g.n - 1]
    dom = {_pick(g, has_partner)}
    k1 = 0
    while True:
        lay = bfs_layers(g, dom)
        far = lay.beyond(3)
        if is_clique(g, far):
            break
        n3 = lay.layer(3)
        eligible = [
            v for v in n3
            if any(w != v and w not in g.adj[v] and g.degree(v) >= g.degree(w) for w in far)
        ]
        v = _pick(g, eligible or n3)
        dom.update(_path_into(g, v, lay.dist)[:-1])
        k1 += 1
        if audit:
            assert is_connected_subset(g, dom), "stage 1 lost connectivity"

    covered = lay.layer(0) | lay.layer(1)
    growth_ok = (k1 + 1) * Fraction(s2 + 2, 2) <= len(covered)

    tail: tuple[int, ...] = ()
    n3 = lay.layer(3)
    if n3:
        t = min(n3)
        added = _path_into(g, t, lay.dist)[:-1]
        dom.update(added)
        tail = tuple(added)
        lay = bfs_layers(g, dom)

    bound = stage1_bound(g.n, s2, len(lay.layer(2)))
    return DomSetAudit(frozenset(dom), "stage1", k1, 0, bound, lay, s2, tail, growth_ok)


def _require_two_step(g: Graph, d: DomSetAudit) -> LayerDecomposition:
    lay = bfs_layers(g, d.vertices)
    if not is_connected_subset(g, d.vertices) or lay.unreached or lay.depth > 2:
        raise PreconditionError("input is not a connected two-step dominating set of g")
    return lay


def _absorb_weak(g: Graph, d: DomSetAudit, need: int, stage: str, *, audit: bool,
                 prefer_pendants: bool = False) -> DomSetAudit:
    """Shared loop of stages 2-4: absorb nonadjacent weak N2 pairs, then one tail."""
    lay = _require_two_step(g, d)
    s2 = d.sigma2
    dom = set(d.vertices)
    k2 = 0
    while True:
        n1, n2 = lay.layer(1), lay.layer(2)
        weak = [x for x in n2 if len(g.adj[x] & n1) < need]
        weak_set = set(weak)
        cands = [x for x in weak if any(y != x and y not in g.adj[x] for y in weak_set)]
        if not cands:
            break
        before = len(n2)
        u = _pick(g, cands)
        dom.update((u, min(g.adj[u] & n1)))
        k2 += 1
        lay = bfs_layers(g, dom)
        if audit:
            assert is_connected_subset(g, dom), f"{stage} lost connectivity"
            assert len(lay.layer(2)) < before, f"{stage} did not shrink N2"

    # the weak vertices now form a clique; absorbing one of them covers the rest
    tail: list[int] = []
    if weak:
        pend = pendant_vertices(g) & weak_set if prefer_pendants else set()
        w = min(pend) if pend else min(weak)
        tail = [w, min(g.adj[w] & lay.layer(1))]
        dom.update(tail)
        lay = bfs_layers(g, dom)

    if prefer_pendants:
        # a pendant left in N1 has its only neighbour in D already
        for p in sorted(pendant_vertices(g) - dom):
            if lay.dist[p] == 1:
                dom.add(p)
                tail.append(p)
        lay = bfs_layers(g, dom)

    bound = stage4_bound(g.n, s2) if stage == "stage4" else two_way_bound(g.n, s2)
    return DomSetAudit(frozenset(dom), stage, d.k1, k2, bound, lay, s2, tuple(tail), None)


def stage2(g: Graph, d: DomSetAudit, *, audit: bool = False) -> DomSetAudit:
    if len(pendant_vertices(g)) > 1:
        raise PreconditionError("stage 2 requires at most one pendant vertex")
    return _absorb_weak(g, d, 2, "stage2", audit=audit, prefer_pendants=True)


def stage3(g: Graph, d: DomSetAudit, *, audit: bool = False) -> DomSetAudit:
    if d.sigma2 < 12:
        raise PreconditionError(f"stage 3 needs sigma_2 >= 12, got {d.sigma2}")
    return _absorb_weak(g, d, strength("stage3", d.sigma2), "stage3", audit=audit)


def stage4(g: Graph, d: DomSetAudit, *, audit: bool = False) -> DomSetAudit:
    if d.sigma2 < 9:
        raise PreconditionError(f"stage 4 needs sigma_2 >= 9, got {d.sigma2}")
    return _absorb_weak(g, d, strength("stage4", d.sigma2), "stage4", audit=audit)


def build(g: Graph, stage) -> DomSetAudit:
    """Run stage 1 and, if asked for, the requested refinement stage on top."""
    stage = _normalise_stage(stage)
    base = stage1(g)
    if stage == "stage1":
        return base
    return {"stage2": stage2, "stage3": stage3, "stage4": stage4}[stage](g, base)


@dataclass
class AuditReport:
    kind: str
    size: int
    bound: Optional[Fraction]
    checks: dict[str, bool] = field(default_factory=dict)
    notes: dict[str, object] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]


def audit_domset(g: Graph, d: Iterable[int], kind) -> AuditReport:
    """Recompute everything about ``d`` from scratch and check the stage's claims."""
    kind = _normalise_stage(kind)
    dom = frozenset(d)
    rep = AuditReport(kind, len(dom), None)
    g.check_vertices(dom)
    s2 = sigma2(g)
    rep.checks["sigma2_defined"] = s2 is not None
    rep.checks["connected"] = is_connected_subset(g, dom)
    if not dom:
        rep.checks["two_step"] = False
        return rep
    lay = bfs_layers(g, dom)
    rep.checks["two_step"] = not lay.unreached and lay.depth <= 2
    n1, n2 = lay.layer(1), lay.layer(2)
    counts = {x: len(g.adj[x] & n1) for x in n2}
    rep.notes["n1"] = len(n1)
    rep.notes["n2"] = len(n2)

    if kind == "stage2":
        rep.checks["pendants_in_set"] = pendant_vertices(g) <= dom
        rep.checks["n2_two_neighbours"] = all(c >= 2 for c in counts.values())
    if kind in ("stage3", "stage4") and s2 is not None:
        k = strength(kind, s2)
        rep.notes["strength_required"] = k
        rep.checks["strength"] = all(c >= k for c in counts.values())
        rep.checks["sigma2_in_range"] = s2 >= (12 if kind == "stage3" else 9)

    if s2 is not None:
        if kind == "stage1":
            rep.bound = stage1_bound(g.n, s2, len(n2))
        elif kind == "stage4":
            rep.bound = stage4_bound(g.n, s2)
        else:
            rep.bound = two_way_bound(g.n, s2)
        rep.checks["size_bound"] = len(dom) <= rep.bound
    return rep
