"""Simple undirected graphs on vertices 0..n-1, plus the cut and partition
bookkeeping every other module leans on."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised when an input cannot describe a simple graph."""


class Graph6Error(GraphError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph. ``edges`` is sorted, each pair stored as (u, v) with u < v."""

    n: int
    edges: tuple[Edge, ...]

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_set

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.float64)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1.0
        return a

    def laplacian_matrix(self) -> np.ndarray:
        a = self.adjacency_matrix()
        return np.diag(a.sum(axis=1)) - a

    def add_edges(self, extra: Iterable[Edge]) -> "Graph":
        return build_graph(self.n, list(self.edges) + list(extra))

    def remove_edges(self, gone: Iterable[Edge]) -> "Graph":
        drop = {(min(u, v), max(u, v)) for u, v in gone}
        return Graph(self.n, tuple(e for e in self.edges if e not in drop))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Build a graph, collapsing duplicate pairs. Loops and out-of-range endpoints are rejected."""
    if n < 1:
        raise GraphError(f"vertex count must be >= 1, got {n}")
    seen: set[Edge] = set()
    for pair in edge_list:
        u, v = int(pair[0]), int(pair[1])
        if u == v:
            raise GraphError(f"loop at vertex {u}: pair ({u}, {v})")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"pair ({u}, {v}) out of range for n={n}")
        seen.add((min(u, v), max(u, v)))
    return Graph(n, tuple(sorted(seen)))


# --- graph6 -----------------------------------------------------------------

def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise GraphError(f"graph6 supports n <= 258047, got {n}")


def write_graph6(g: Graph) -> str:
    bits = [0] * (g.n * (g.n - 1) // 2)
    for u, v in g.edges:
        # column-major upper triangle: (i, j) with i < j lands at j(j-1)/2 + i
        bits[v * (v - 1) // 2 + u] = 1
    bits += [0] * (-len(bits) % 6)
    chars = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return _encode_n(g.n) + "".join(chars)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"invalid character {ch!r}", i)
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 4 and vals[1] < 63:
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    else:
        raise Graph6Error("unsupported or truncated vertex-count header", 0)
    if n < 1:
        raise Graph6Error("graph6 encodes zero vertices; n >= 1 required", 0)
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(vals) - pos != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, found {len(vals) - pos}",
                          min(len(s), pos + need))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = vals[pos + k // 6]
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    if nbits % 6:
        pad = 6 - nbits % 6
        if vals[-1] & ((1 << pad) - 1):
            raise Graph6Error("nonzero padding bits", len(s) - 1)
    return build_graph(n, edges)


def iter_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        if line.strip():
            yield parse_graph6(line)


# --- edge-list text ---------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse "n m" followed by m lines "u v" (0-based)."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 2:
        raise GraphError("edge list must start with a header line 'n m'")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        pairs = [(int(r[0]), int(r[1])) for r in rows[1:]]
    except (ValueError, IndexError) as exc:
        raise GraphError(f"malformed edge list: {exc}") from None
    if len(pairs) != m:
        raise GraphError(f"header declares {m} edges, found {len(pairs)}")
    return build_graph(n, pairs)


def write_edge_list(g: Graph) -> str:
    return "\n".join([f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]) + "\n"


# --- degrees and connectivity ----------------------------------------------

@dataclass(frozen=True)
class DegreeProfile:
    delta: int
    max_degree: int
    sequence: tuple[int, ...]


def degree_profile(g: Graph) -> DegreeProfile:
    seq = tuple(sorted(len(a) for a in g.adjacency))
    return DegreeProfile(delta=seq[0], max_degree=seq[-1], sequence=seq)


def min_degree(g: Graph) -> int:
    return min(len(a) for a in g.adjacency)


def components(g: Graph, edges: Iterable[Edge] | None = None) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex.

    With ``edges`` given, components of the spanning subgraph (V, edges).
    """
    if edges is None:
        adj = g.adjacency
    else:
        nb: list[list[int]] = [[] for _ in range(g.n)]
        for u, v in edges:
            nb[u].append(v)
            nb[v].append(u)
        adj = nb
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


@dataclass(frozen=True)
class CutWitness:
    side: frozenset[int]
    boundary_size: int


def boundary_size(g: Graph, U: Iterable[int]) -> int:
    side = set(U)
    if not side or len(side) >= g.n or not side <= set(range(g.n)):
        raise GraphError("boundary requires a nonempty proper vertex subset")
    return sum((u in side) != (v in side) for u, v in g.edges)


def induced_edge_count(g: Graph, U: Iterable[int]) -> int:
    side = set(U)
    return sum(u in side and v in side for u, v in g.edges)


def edge_connectivity(g: Graph) -> tuple[int, CutWitness]:
    """Global minimum edge cut by Stoer-Wagner with unit weights.

    Maximum-adjacency ties go to the lowest vertex index. The witness side is
    normalised to the side containing vertex 0.
    """
    if g.n < 2:
        raise GraphError("edge connectivity needs n >= 2")
    comps = components(g)
    if len(comps) > 1:
        side = frozenset(comps[0])
        return 0, CutWitness(side, 0)

    w: dict[int, dict[int, int]] = {v: {u: 1 for u in g.adjacency[v]} for v in range(g.n)}
    members: dict[int, list[int]] = {v: [v] for v in range(g.n)}
    best, best_side = None, None
    while len(w) > 1:
        active = sorted(w)
        start = active[0]
        conn = {v: 0 for v in active if v != start}
        for u, c in w[start].items():
            conn[u] += c
        prev, last, cut = start, start, 0
        while conn:
            v = min(conn, key=lambda x: (-conn[x], x))
            cut = conn.pop(v)
            prev, last = last, v
            for u, c in w[v].items():
                if u in conn:
                    conn[u] += c
        if best is None or cut < best:
            best, best_side = cut, list(members[last])
        # merge last into prev
        for u, c in w.pop(last).items():
            del w[u][last]
            if u != prev:
                w[prev][u] = w[prev].get(u, 0) + c
                w[u][prev] = w[u].get(prev, 0) + c
        members[prev].extend(members.pop(last))
    side = set(best_side)
    if 0 not in side:
        side = set(range(g.n)) - side
    return best, CutWitness(frozenset(side), best)


# --- partitions -------------------------------------------------------------

@dataclass(frozen=True)
class VertexPartition:
    blocks: tuple[frozenset[int], ...]
    n: int = field(default=0)

    def __post_init__(self):
        blocks = [frozenset(b) for b in self.blocks]
        if not all(blocks):
            raise GraphError("partition blocks must be nonempty")
        ordered = tuple(sorted(blocks, key=min))
        object.__setattr__(self, "blocks", ordered)
        seen: set[int] = set()
        for b in ordered:
            if seen & b:
                raise GraphError("partition blocks overlap")
            seen |= b
        size = self.n or len(seen)
        if seen != set(range(size)):
            raise GraphError(f"blocks do not cover vertices 0..{size - 1}")
        object.__setattr__(self, "n", size)

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "VertexPartition":
        groups: dict[int, set[int]] = {}
        for v, lab in enumerate(labels):
            groups.setdefault(int(lab), set()).add(v)
        return cls(tuple(frozenset(b) for b in groups.values()), len(labels))

    @property
    def t(self) -> int:
        return len(self.blocks)

    @property
    def t1(self) -> int:
        return sum(len(b) == 1 for b in self.blocks)

    @property
    def t2(self) -> int:
        return self.t - self.t1

    def labels(self) -> list[int]:
        lab = [0] * self.n
        for i, b in enumerate(self.blocks):
            for v in b:
                lab[v] = i
        return lab

    def __str__(self) -> str:
        return " | ".join(" ".join(map(str, sorted(b))) for b in self.blocks)


def partition_cross_edges(g: Graph, p: VertexPartition) -> int:
    if p.n != g.n:
        raise GraphError(f"partition covers {p.n} vertices, graph has {g.n}")
    lab = p.labels()
    return sum(lab[u] != lab[v] for u, v in g.edges)
