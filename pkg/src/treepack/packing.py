"""Edge-disjoint spanning trees and forest covers.

The exact engine is matroid union over the graphic matroid: ``k`` forests are
grown one edge at a time, and an edge that fits in no forest directly is
pushed in along a shortest chain of exchanges. When an edge cannot be placed,
the edges reached by the exchange search form a set whose components give the
Nash-Williams/Tutte violating partition (or, for covers, a too-dense subgraph).

``partition_oracle`` and ``density_witness`` are brute-force checks kept
independent of the engine.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .graph import Edge, Graph, GraphError, VertexPartition, components, is_connected, partition_cross_edges


class ForestUnion:
    """``k`` edge-disjoint forests of ``g`` maintained under augmenting-path insertion."""

    def __init__(self, g: Graph, k: int):
        self.g = g
        self.edges: Sequence[Edge] = g.edges
        self.owner = [-1] * g.m
        self.forests: list[list[dict[int, int]]] = []
        self.sizes: list[int] = []
        for _ in range(k):
            self.add_forest()

    @property
    def k(self) -> int:
        return len(self.forests)

    def add_forest(self) -> None:
        self.forests.append([{} for _ in range(self.g.n)])
        self.sizes.append(0)

    def _link(self, f: int, i: int) -> None:
        u, v = self.edges[f]
        self.forests[i][u][v] = f
        self.forests[i][v][u] = f
        self.owner[f] = i
        self.sizes[i] += 1

    def _unlink(self, f: int) -> None:
        i = self.owner[f]
        u, v = self.edges[f]
        del self.forests[i][u][v]
        del self.forests[i][v][u]
        self.owner[f] = -1
        self.sizes[i] -= 1

    def _tree_path(self, i: int, s: int, t: int) -> list[int] | None:
        """Edge ids on the s-t path of forest i, or None when s and t are in different trees."""
        adj = self.forests[i]
        parent = {s: (-1, -1)}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            if x == t:
                path = []
                while x != s:
                    x, e = parent[x]
                    path.append(e)
                return path
            for y, e in adj[x].items():
                if y not in parent:
                    parent[y] = (x, e)
                    queue.append(y)
        return None

    def _search(self, sources: list[int]) -> tuple[int, int, dict[int, int]] | dict[int, int]:
        """Breadth-first exchange search.

        Returns (edge, forest, labels) for the first edge that fits a forest
        outright, else the label map of every edge reached.
        """
        label = {e: -1 for e in sources}
        queue = deque(sources)
        while queue:
            f = queue.popleft()
            u, v = self.edges[f]
            for i in range(self.k):
                if self.owner[f] == i:
                    continue
                path = self._tree_path(i, u, v)
                if path is None:
                    return f, i, label
                for h in sorted(path):
                    if h not in label:
                        label[h] = f
                        queue.append(h)
        return label

    def insert(self, e: int) -> bool:
        found = self._search([e])
        if isinstance(found, dict):
            return False
        f, i, label = found
        while f != -1:
            j = self.owner[f]
            if j >= 0:
                self._unlink(f)
            self._link(f, i)
            f, i = label[f], j
        return True

    def fill(self, target: int | None = None) -> None:
        """Try every uncovered edge in index order; stop early once ``target`` edges are placed."""
        for e in range(self.g.m):
            if target is not None and sum(self.sizes) >= target:
                return
            if self.owner[e] < 0:
                self.insert(e)

    def uncovered(self) -> list[int]:
        return [e for e in range(self.g.m) if self.owner[e] < 0]

    def blocked_set(self) -> list[int]:
        """Edges reachable from the uncovered edges; requires a maximal state."""
        src = self.uncovered()
        if not src:
            return []
        found = self._search(src)
        if not isinstance(found, dict):
            raise RuntimeError("forests are not maximal; an augmenting path exists")
        return sorted(found)

    def forest_edges(self) -> list[list[Edge]]:
        out: list[list[Edge]] = [[] for _ in range(self.k)]
        for e, i in enumerate(self.owner):
            if i >= 0:
                out[i].append(self.edges[e])
        return out


def is_spanning_tree(n: int, edges: Sequence[Edge]) -> bool:
    if len(edges) != n - 1:
        return False
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def is_forest(n: int, edges: Sequence[Edge]) -> bool:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


# --- spanning tree packing --------------------------------------------------------

@dataclass(frozen=True)
class PackingDecision:
    k: int
    holds: bool
    trees: tuple[tuple[Edge, ...], ...] = ()
    partition: VertexPartition | None = None
    cross_edges: int | None = None

    @property
    def slack(self) -> int | None:
        if self.partition is None:
            return None
        return self.cross_edges - self.k * (self.partition.t - 1)


@dataclass(frozen=True)
class PackingCertificate:
    tau: int
    trees: tuple[tuple[Edge, ...], ...]
    violating_partition: VertexPartition | None = None
    query_k: int | None = None

    def to_text(self) -> str:
        lines = [f"tau={self.tau}"]
        lines += ["tree " + " ".join(f"{u}-{v}" for u, v in t) for t in self.trees]
        if self.violating_partition is not None:
            lines.append(f"partition k={self.query_k} {self.violating_partition}")
        return "\n".join(lines) + "\n"


def _partition_from_blocked(g: Graph, engine: ForestUnion) -> VertexPartition:
    blocked = [engine.edges[e] for e in engine.blocked_set()]
    comps = components(g, blocked)
    return VertexPartition(tuple(frozenset(c) for c in comps), g.n)


def _component_partition(g: Graph) -> VertexPartition:
    return VertexPartition(tuple(frozenset(c) for c in components(g)), g.n)


def _trees(engine: ForestUnion) -> tuple[tuple[Edge, ...], ...]:
    return tuple(tuple(sorted(f)) for f in engine.forest_edges())


def has_k_trees(g: Graph, k: int) -> PackingDecision:
    """Decide whether ``g`` holds ``k`` edge-disjoint spanning trees.

    A yes carries the trees; a no carries a partition with e(pi) < k(t-1).
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if g.n == 1:
        return PackingDecision(k, True, tuple(() for _ in range(k)))
    if not is_connected(g):
        part = _component_partition(g)
        return PackingDecision(k, False, partition=part, cross_edges=0)
    engine = ForestUnion(g, k)
    target = k * (g.n - 1)
    engine.fill(target)
    if sum(engine.sizes) == target:
        return PackingDecision(k, True, _trees(engine))
    part = _partition_from_blocked(g, engine)
    return PackingDecision(k, False, partition=part, cross_edges=partition_cross_edges(g, part))


def stp_number(g: Graph, witness: bool = False) -> PackingCertificate:
    """Spanning tree packing number with explicit trees.

    Forests are added one at a time on a single engine, so the run that fails
    at ``tau + 1`` directly yields the violating partition (``witness=True``).
    """
    if g.n < 2:
        raise GraphError("spanning tree packing needs n >= 2")
    if not is_connected(g):
        part = _component_partition(g) if witness else None
        return PackingCertificate(0, (), part, 1 if witness else None)
    engine = ForestUnion(g, 0)
    trees: tuple[tuple[Edge, ...], ...] = ()
    while True:
        engine.add_forest()
        target = engine.k * (g.n - 1)
        engine.fill(target)
        if sum(engine.sizes) < target:
            break
        trees = _trees(engine)
    tau = engine.k - 1
    part = _partition_from_blocked(g, engine) if witness else None
    return PackingCertificate(tau, trees, part, tau + 1 if witness else None)


def tau(g: Graph) -> int:
    return stp_number(g).tau


# --- partition oracle ----------------------------------------------------------------

def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """All set partitions of range(n) as restricted growth strings, lexicographic."""
    if n < 1:
        return
    a = [0] * n
    while True:
        yield tuple(a)
        j = n - 1
        while j > 0 and a[j] > max(a[:j]):
            j -= 1
        if j == 0:
            return
        a[j] += 1
        a[j + 1:] = [0] * (n - j - 1)


@lru_cache(maxsize=4)
def _rgs_array(n: int) -> np.ndarray:
    """Every restricted growth string of length n as rows, lexicographic order."""
    arr = np.zeros((1, 1), dtype=np.int8)
    top = np.zeros(1, dtype=np.int8)
    for _ in range(1, n):
        counts = top.astype(np.int64) + 2
        rows = np.repeat(arr, counts, axis=0)
        starts = np.repeat(np.cumsum(counts) - counts, counts)
        labels = (np.arange(counts.sum()) - starts).astype(np.int8)
        arr = np.concatenate([rows, labels[:, None]], axis=1)
        top = np.maximum(np.repeat(top, counts), labels)
    arr.setflags(write=False)
    return arr


def bell_number(n: int) -> int:
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


@dataclass(frozen=True)
class OracleResult:
    k: int
    holds: bool
    partition: VertexPartition
    cross_edges: int
    slack: int  # e(pi) - k(t-1) at the returned partition


def partition_oracle(g: Graph, k: int, n_limit: int = 12) -> OracleResult:
    """Scan every set partition of V and report the one minimising e(pi) - k(t-1).

    Ties go to the partition with more blocks, then to the lexicographically
    first restricted growth string. Verdict: tau >= k iff the minimum is >= 0.
    """
    if g.n > n_limit:
        raise GraphError(f"partition oracle limited to n <= {n_limit} (got n={g.n}); use stp_number")
    labels = _rgs_array(g.n)
    t = labels.max(axis=1).astype(np.int64) + 1
    cross = np.zeros(labels.shape[0], dtype=np.int64)
    for u, v in g.edges:
        cross += labels[:, u] != labels[:, v]
    slack = cross - k * (t - 1)
    best = int(slack.min())
    cand = np.flatnonzero(slack == best)
    pick = int(cand[np.argmax(t[cand])])  # argmax returns first occurrence: lexicographic
    part = VertexPartition.from_labels(labels[pick].tolist())
    return OracleResult(k, best >= 0, part, int(cross[pick]), best)


# --- forest covers ------------------------------------------------------------------

@dataclass(frozen=True)
class DensityWitness:
    vertex_set: frozenset[int]
    edge_count: int
    k: int

    def __post_init__(self):
        if self.edge_count <= self.k * (len(self.vertex_set) - 1):
            raise ValueError("not a density violation")


@dataclass(frozen=True)
class ForestCover:
    arboricity: int
    forests: tuple[tuple[Edge, ...], ...]
    witness: DensityWitness | None = None


def _covers(g: Graph, k: int) -> ForestUnion:
    engine = ForestUnion(g, k)
    engine.fill()
    return engine


def arboricity(g: Graph) -> ForestCover:
    """Minimum forest cover, found by binary search on the number of forests."""
    if g.m == 0:
        return ForestCover(0, ())
    lo = max(1, -(-g.m // (g.n - 1)))
    hi = max(lo, -(-g.n // 2))
    best = None
    while lo < hi:
        mid = (lo + hi) // 2
        engine = _covers(g, mid)
        if not engine.uncovered():
            hi, best = mid, engine
        else:
            lo = mid + 1
    if best is None or best.k != lo:
        best = _covers(g, lo)
    witness = None
    if lo >= 2:
        witness = _dense_part(g, _covers(g, lo - 1))
    return ForestCover(lo, _trees(best), witness)


def _dense_part(g: Graph, engine: ForestUnion) -> DensityWitness:
    blocked = engine.blocked_set()
    comps = components(g, [engine.edges[e] for e in blocked])
    loose = engine.edges[engine.uncovered()[0]]
    comp = next(c for c in comps if loose[0] in c)
    side = frozenset(comp)
    count = sum(u in side and v in side for u, v in g.edges)
    return DensityWitness(side, count, engine.k)


def density_witness(g: Graph, k: int, n_limit: int = 16) -> DensityWitness | None:
    """Exhaustive scan of induced subgraphs for |E(H)| > k(|V(H)| - 1).

    Returns the subset with the largest excess (ties: more vertices, then the
    smallest bitmask), or None when every subgraph is sparse enough.
    """
    if g.n > n_limit:
        raise GraphError(f"density scan limited to n <= {n_limit} (got n={g.n})")
    n = g.n
    nbr = [sum(1 << w for w in g.adjacency[v]) for v in range(n)]
    ecount = [0] * (1 << n)
    best, best_key = None, None
    for s in range(1, 1 << n):
        low = (s & -s).bit_length() - 1
        rest = s & (s - 1)
        ecount[s] = ecount[rest] + bin(nbr[low] & rest).count("1")
        size = bin(s).count("1")
        if size < 2:
            continue
        excess = ecount[s] - k * (size - 1)
        if excess > 0:
            key = (excess, size)
            if best_key is None or key > best_key:
                best, best_key = s, key
    if best is None:
        return None
    verts = frozenset(v for v in range(n) if best >> v & 1)
    return DensityWitness(verts, ecount[best], k)
