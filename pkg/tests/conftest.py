import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import strategies as st

from treepack.graph import Graph, build_graph, is_connected


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    pairs = list(itertools.combinations(range(n), 2))
    keep = rng.random(len(pairs)) < p
    return Graph(n, tuple(e for e, k in zip(pairs, keep) if k))


def from_nx(h: nx.Graph) -> Graph:
    h = nx.convert_node_labels_to_integers(h)
    return build_graph(max(h.number_of_nodes(), 1), h.edges())


def connected_atlas(max_n: int = 7) -> list[Graph]:
    """Every connected graph on 2..max_n vertices, one per isomorphism class (max_n <= 7)."""
    out = []
    for h in nx.graph_atlas_g():
        if 2 <= h.number_of_nodes() <= max_n and nx.is_connected(h):
            out.append(from_nx(h))
    return out


def all_labeled_graphs(n: int):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, tuple(p for b, p in enumerate(pairs) if mask >> b & 1))


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 10, connected: bool = False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = Graph(n, tuple(p for p, b in zip(pairs, bits) if b))
    if connected and not is_connected(g):
        # chain the components through their smallest vertices
        from treepack.graph import components
        comps = components(g)
        g = g.add_edges((comps[i][0], comps[i + 1][0]) for i in range(len(comps) - 1))
    return g


@pytest.fixture(scope="session")
def atlas7() -> list[Graph]:
    return connected_atlas(7)


def petersen() -> Graph:
    return from_nx(nx.petersen_graph())


def _uf_find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def brute_force_split(g: Graph) -> bool:
    """Does G hold a spanning tree T and, edge-disjoint from it, a spanning subgraph whose
    every component has exactly one cycle?  Scans every n-edge set F first."""
    n = g.n
    for F in itertools.combinations(g.edges, n):
        parent = list(range(n))
        for u, v in F:
            parent[_uf_find(parent, u)] = _uf_find(parent, v)
        verts: dict[int, int] = {}
        edges: dict[int, int] = {}
        for v in range(n):
            r = _uf_find(parent, v)
            verts[r] = verts.get(r, 0) + 1
        for u, _ in F:
            r = _uf_find(parent, u)
            edges[r] = edges.get(r, 0) + 1
        if any(edges.get(r, 0) != c for r, c in verts.items()):
            continue
        used = set(F)
        parent = list(range(n))
        joins = 0
        for u, v in g.edges:
            if (u, v) in used:
                continue
            ru, rv = _uf_find(parent, u), _uf_find(parent, v)
            if ru != rv:
                parent[ru] = rv
                joins += 1
        if joins == n - 1:
            return True
    return False
