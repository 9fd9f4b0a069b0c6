"""Exact isomorphism testing for desk-scale graphs."""

from __future__ import annotations

import numpy as np

from .graph import Graph, degree_profile
from .spectral import symmetric_eigen


def _refine(g: Graph, colors: list[int]) -> list[int]:
    """One round of colour refinement; colours become (old colour, sorted neighbour colours)."""
    return [hash((colors[v], tuple(sorted(colors[w] for w in g.adjacency[v])))) for v in range(g.n)]


def _stable_colors(g: Graph, h: Graph) -> tuple[list[int], list[int]]:
    cg = [len(a) for a in g.adjacency]
    ch = [len(a) for a in h.adjacency]
    for _ in range(g.n):
        ng, nh = _refine(g, cg), _refine(h, ch)
        # relabel jointly so both graphs share one palette
        palette = {c: idx for idx, c in enumerate(sorted(set(ng) | set(nh)))}
        ng = [palette[c] for c in ng]
        nh = [palette[c] for c in nh]
        stable = len(set(ng)) == len(set(cg)) and len(set(nh)) == len(set(ch))
        cg, ch = ng, nh
        if stable:
            break
    return cg, ch


def isomorphism(g: Graph, h: Graph) -> dict[int, int] | None:
    """A vertex map g -> h preserving adjacency, or None.

    Degree sequences and spectra are compared first; the backtracking search
    only pairs vertices of equal stable colour.
    """
    if g.n != h.n or g.m != h.m:
        return None
    if degree_profile(g).sequence != degree_profile(h).sequence:
        return None
    if g.n > 1:
        sg, _ = symmetric_eigen(g.adjacency_matrix())
        sh, _ = symmetric_eigen(h.adjacency_matrix())
        if np.max(np.abs(sg - sh)) > 1e-6:
            return None
    cg, ch = _stable_colors(g, h)
    if sorted(cg) != sorted(ch):
        return None
    by_color: dict[int, list[int]] = {}
    for v in range(h.n):
        by_color.setdefault(ch[v], []).append(v)
    order = sorted(range(g.n), key=lambda v: (len(by_color[cg[v]]), cg[v], v))
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(pos: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        for w in by_color[cg[v]]:
            if w in used:
                continue
            if all((x in g.adjacency[v]) == (mapping[x] in h.adjacency[w]) for x in mapping):
                mapping[v] = w
                used.add(w)
                if extend(pos + 1):
                    return True
                del mapping[v]
                used.discard(w)
        return False

    return dict(mapping) if extend(0) else None


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return isomorphism(g, h) is not None
