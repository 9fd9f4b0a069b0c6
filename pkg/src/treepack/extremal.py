"""Constructors for the two-clique graph families and the join candidate."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator

from .graph import Graph, GraphError, build_graph, min_degree

FAMILY_MAX_N = 18
FAMILY_MAX_LINKS = 4


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"n must be >= 1, got {n}")
    return Graph(n, tuple(itertools.combinations(range(n), 2)))


@dataclass(frozen=True)
class CrossPattern:
    """``i`` links (a, b): vertex a of the left clique joined to vertex b of the right clique."""

    left_size: int
    right_size: int
    links: tuple[tuple[int, int], ...]

    def __post_init__(self):
        links = tuple(sorted((int(a), int(b)) for a, b in self.links))
        if len(set(links)) != len(links):
            raise GraphError("cross links must be distinct")
        for a, b in links:
            if not (0 <= a < self.left_size and 0 <= b < self.right_size):
                raise GraphError(f"link ({a}, {b}) outside parts {self.left_size} x {self.right_size}")
        object.__setattr__(self, "links", links)

    @property
    def i(self) -> int:
        return len(self.links)


@dataclass(frozen=True)
class FamilyGraph:
    graph: Graph
    n: int
    n1: int
    pattern: CrossPattern

    @property
    def min_degree(self) -> int:
        return min_degree(self.graph)


def family_graph(n: int, n1: int, pattern: CrossPattern) -> FamilyGraph:
    """K_{n1} on 0..n1-1, K_{n-n1} on n1..n-1, plus the pattern's cross edges."""
    if not 1 <= n1 <= n - 1:
        raise GraphError(f"split n1={n1} must satisfy 1 <= n1 <= n-1 for n={n}")
    if (pattern.left_size, pattern.right_size) != (n1, n - n1):
        raise GraphError("pattern part sizes do not match the split")
    edges = list(itertools.combinations(range(n1), 2))
    edges += itertools.combinations(range(n1, n), 2)
    edges += [(a, n1 + b) for a, b in pattern.links]
    return FamilyGraph(build_graph(n, edges), n, n1, pattern)


def family_edge_count(n: int, n1: int, i: int) -> int:
    return comb(n1, 2) + comb(n - n1, 2) + i


def book_graph(n: int, delta: int, i: int) -> Graph:
    """K_{delta+1} and K_{n-delta-1} with hub 0 joined to the first ``i`` right-clique vertices."""
    if delta < 1 or n < delta + 2:
        raise GraphError(f"book graph needs delta >= 1 and n >= delta+2 (n={n}, delta={delta})")
    if not 0 <= i <= n - delta - 1:
        raise GraphError(f"i={i} outside 0..{n - delta - 1}")
    pattern = CrossPattern(delta + 1, n - delta - 1, tuple((0, b) for b in range(i)))
    return family_graph(n, delta + 1, pattern).graph


def join_candidate(n: int, k: int) -> Graph:
    """K_k joined to (K_k plus n-2k isolated vertices); the first k vertices are the join side."""
    if k < 1 or n <= 2 * k:
        raise GraphError(f"join candidate needs k >= 1 and n >= 2k+1 (n={n}, k={k})")
    edges = list(itertools.combinations(range(2 * k), 2))
    edges += [(a, b) for a in range(k) for b in range(2 * k, n)]
    return build_graph(n, edges)


@lru_cache(maxsize=None)
def _pattern_orbits(left: int, right: int, i: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Canonical i-edge bipartite patterns on parts of the given (truncated) sizes.

    A pattern is canonical when it is the lexicographic minimum of its sorted
    link list over all relabelings within each part.
    """
    cells = [(a, b) for a in range(left) for b in range(right)]
    lperms = list(itertools.permutations(range(left)))
    rperms = list(itertools.permutations(range(right)))
    seen = set()
    reps = []
    for links in itertools.combinations(cells, i):
        if links in seen:
            continue
        orbit = {tuple(sorted((sl[a], sr[b]) for a, b in links)) for sl in lperms for sr in rperms}
        seen |= orbit
        reps.append(min(orbit))
    return tuple(sorted(reps))


def enumerate_family(n: int, n1: int, i: int) -> Iterator[FamilyGraph]:
    """One member of the family per orbit of cross patterns under part-preserving relabeling."""
    if not 1 <= n1 <= n - 1:
        raise GraphError(f"split n1={n1} must satisfy 1 <= n1 <= n-1 for n={n}")
    if i < 0 or i > n1 * (n - n1):
        raise GraphError(f"i={i} cross edges do not fit between parts {n1} and {n - n1}")
    if n > FAMILY_MAX_N or i > FAMILY_MAX_LINKS:
        raise GraphError(f"exhaustive enumeration limited to n <= {FAMILY_MAX_N}, i <= {FAMILY_MAX_LINKS}")
    # a pattern with i links touches at most i vertices per side
    for links in _pattern_orbits(min(i, n1), min(i, n - n1), i):
        yield family_graph(n, n1, CrossPattern(n1, n - n1, links))
