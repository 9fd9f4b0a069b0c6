"""Rigidity and flow-index consequences of spanning tree packing."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .graph import Edge, Graph, components, is_connected
from .packing import has_k_trees, is_spanning_tree, tau

EXACT_SURFACE_MAX_N = 9


class Decision(enum.Enum):
    RIGID = "RIGID"
    NOT_RIGID = "NOT_RIGID"
    UNKNOWN = "UNKNOWN"


class Surface(enum.Enum):
    CYLINDER = "cylinder"
    SPHERE = "sphere"
    OTHER_REVOLUTION = "other"


@dataclass(frozen=True)
class RigidityReport:
    mode: str  # "BODY_BAR" or "SURFACE"
    decision: Decision
    dimension: int | None = None
    surface: Surface | None = None
    required_trees: int | None = None
    reason: str = ""
    trees: tuple[tuple[Edge, ...], ...] = ()
    unicyclic: tuple[Edge, ...] = ()
    blocks: tuple[tuple[int, ...], ...] = field(default=())

    def as_record(self) -> dict[str, object]:
        rec: dict[str, object] = {"mode": self.mode, "decision": self.decision.value, "reason": self.reason}
        if self.dimension is not None:
            rec["dimension"] = self.dimension
            rec["required_trees"] = self.required_trees
        if self.surface is not None:
            rec["surface"] = self.surface.value
        if self.trees:
            rec["trees"] = [[list(e) for e in t] for t in self.trees]
        if self.unicyclic:
            rec["unicyclic"] = [list(e) for e in self.unicyclic]
        if self.blocks:
            rec["partition"] = [list(b) for b in self.blocks]
        return rec


def body_bar_rigid(g: Graph, d: int) -> RigidityReport:
    """Body-bar rigidity in dimension d: d(d+1)/2 edge-disjoint spanning trees."""
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    need = d * (d + 1) // 2
    res = has_k_trees(g, need)
    if res.holds:
        return RigidityReport("BODY_BAR", Decision.RIGID, dimension=d, required_trees=need,
                              reason=f"{need} edge-disjoint spanning trees", trees=res.trees)
    why = "disconnected" if not is_connected(g) else f"fewer than {need} edge-disjoint spanning trees"
    blocks = tuple(tuple(sorted(b)) for b in res.partition.blocks)
    return RigidityReport("BODY_BAR", Decision.NOT_RIGID, dimension=d, required_trees=need,
                          reason=why, blocks=blocks)


def _spanning_trees(n: int, edges: Sequence[Edge]) -> Iterator[tuple[int, ...]]:
    """Spanning trees as sorted edge-index tuples, by include/exclude backtracking."""
    m = len(edges)
    chosen: list[int] = []

    def rec(idx: int, comp: list[int], ncomp: int) -> Iterator[tuple[int, ...]]:
        if ncomp == 1:
            yield tuple(chosen)
            return
        if m - idx < ncomp - 1:
            return
        u, v = edges[idx]
        cu, cv = comp[u], comp[v]
        if cu != cv:
            merged = [cu if c == cv else c for c in comp]
            chosen.append(idx)
            yield from rec(idx + 1, merged, ncomp - 1)
            chosen.pop()
        yield from rec(idx + 1, comp, ncomp)

    yield from rec(0, list(range(n)), n)


def _unicyclic_cover(n: int, rest: Sequence[Edge]) -> list[Edge] | None:
    """Spanning subgraph of ``rest`` whose every component has exactly one cycle, if one exists.

    Exists iff every component of (V, rest) has at least as many edges as vertices.
    """
    out: list[Edge] = []
    for comp in components(Graph(n, ()), rest):
        cset = set(comp)
        inside = [e for e in rest if e[0] in cset]
        if len(inside) < len(comp):
            return None
        parent = {v: v for v in comp}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        extra = None
        for u, v in inside:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                out.append((u, v))
            elif extra is None:
                extra = (u, v)
        out.append(extra)
    return sorted(out)


def _is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def surface_rigid(g: Graph, kind: Surface | str) -> RigidityReport:
    """Rigidity of ``g`` on an irreducible surface of revolution.

    Complete graphs are rigid. On a cylinder, two edge-disjoint spanning trees
    decide. Otherwise (not a sphere) a spanning tree plus an edge-disjoint
    spanning subgraph with one cycle per component is needed: exact search for
    n <= 9, above that only the sufficient test tau >= 2 and m >= 2n - 1.
    """
    kind = Surface(kind)
    if _is_complete(g):
        return RigidityReport("SURFACE", Decision.RIGID, surface=kind, reason="complete graph")
    if kind is Surface.SPHERE:
        return RigidityReport("SURFACE", Decision.UNKNOWN, surface=kind,
                              reason="sphere case not decided")
    if kind is Surface.CYLINDER:
        res = has_k_trees(g, 2)
        if res.holds:
            return RigidityReport("SURFACE", Decision.RIGID, surface=kind,
                                  reason="two edge-disjoint spanning trees", trees=res.trees)
        return RigidityReport("SURFACE", Decision.NOT_RIGID, surface=kind, reason="tau < 2",
                              blocks=tuple(tuple(sorted(b)) for b in res.partition.blocks))
    if g.n <= EXACT_SURFACE_MAX_N:
        cert = tree_unicyclic_split(g)
        if cert is None:
            return RigidityReport("SURFACE", Decision.NOT_RIGID, surface=kind,
                                  reason="no spanning tree leaves a unicyclic cover")
        tree, cover = cert
        return RigidityReport("SURFACE", Decision.RIGID, surface=kind,
                              reason="tree + unicyclic split", trees=(tree,), unicyclic=cover)
    res = has_k_trees(g, 2)
    if res.holds and g.m >= 2 * g.n - 1:
        t1, t2 = res.trees
        used = set(t1) | set(t2)
        extra = next(e for e in g.edges if e not in used)
        return RigidityReport("SURFACE", Decision.RIGID, surface=kind,
                              reason="tau >= 2 with a spare edge", trees=(t1,),
                              unicyclic=tuple(sorted(t2 + (extra,))))
    return RigidityReport("SURFACE", Decision.UNKNOWN, surface=kind,
                          reason=f"n > {EXACT_SURFACE_MAX_N} and the sufficient test fails")


def tree_unicyclic_split(g: Graph) -> tuple[tuple[Edge, ...], tuple[Edge, ...]] | None:
    """Search spanning trees T for which G - E(T) has a spanning unicyclic cover."""
    if not is_connected(g) or g.m < 2 * g.n - 1:
        return None
    if min(len(a) for a in g.adjacency) < 2:
        # every vertex needs an edge in T and another in the cover
        return None
    edges = g.edges
    for idx in _spanning_trees(g.n, edges):
        picked = set(idx)
        rest = [e for j, e in enumerate(edges) if j not in picked]
        cover = _unicyclic_cover(g.n, rest)
        if cover is not None:
            return tuple(edges[j] for j in idx), tuple(cover)
    return None


def validate_split(g: Graph, tree: Sequence[Edge], cover: Sequence[Edge]) -> bool:
    """Independent check of a (spanning tree, unicyclic cover) certificate."""
    if not set(tree) <= g.edge_set or not set(cover) <= g.edge_set or set(tree) & set(cover):
        return False
    if not is_spanning_tree(g.n, list(tree)):
        return False
    for comp in components(g, cover):
        cset = set(comp)
        if sum(u in cset for u, _ in cover) != len(comp):
            return False
    return True


@dataclass(frozen=True)
class FlowReport:
    tau: int
    phi_upper: Fraction | None
    strict: bool
    basis: str

    def describe(self) -> str:
        if self.phi_upper is None:
            return "no bound"
        return f"phi {'<' if self.strict else '<='} {self.phi_upper}"


def flow_implications(g: Graph) -> FlowReport:
    t = tau(g)
    if t >= 4:
        return FlowReport(t, Fraction(3), False, "tau >= 4 implies phi <= 3")
    if t == 3:
        return FlowReport(t, Fraction(4), True, "tau >= 3 implies phi < 4")
    return FlowReport(t, None, False, "tau < 3: no bound")
