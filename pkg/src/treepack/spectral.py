"""Adjacency and Laplacian spectra plus exact spanning-tree counts."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np
from numba import njit

from .graph import Graph, GraphError, is_connected, min_degree

OFF_DIAGONAL_RTOL = 1e-12
MAX_SWEEPS = 100
COMPARE_MARGIN = 1e-8


@njit(cache=True)
def _jacobi_kernel(a, rtol, max_sweeps):
    n = a.shape[0]
    v = np.eye(n)
    total = 0.0
    for i in range(n):
        for j in range(n):
            total += a[i, j] * a[i, j]
    norm = math.sqrt(total)
    sweeps = 0
    while sweeps < max_sweeps:
        off = 0.0
        for i in range(n):
            for j in range(n):
                if i != j:
                    off += a[i, j] * a[i, j]
        if norm == 0.0 or math.sqrt(off) < rtol * norm:
            break
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[k, q] = s * akp + c * akq
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * aqk
                    a[q, k] = s * apk + c * aqk
                for k in range(n):
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = c * vkp - s * vkq
                    v[k, q] = s * vkp + c * vkq
    return np.diag(a).copy(), v, sweeps


def symmetric_eigen(matrix: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi eigendecomposition, eigenvalues descending.

    Sweeps visit the upper triangle row by row and stop once the off-diagonal
    Frobenius norm drops below ``1e-12 * ||A||_F``.
    """
    a = np.array(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("square matrix required")
    if not np.allclose(a, a.T):
        raise ValueError("matrix is not symmetric")
    vals, vecs, sweeps = _jacobi_kernel(a, OFF_DIAGONAL_RTOL, MAX_SWEEPS)
    if sweeps >= MAX_SWEEPS:
        raise RuntimeError("Jacobi iteration did not converge")
    # stable sort keeps the deterministic column order on ties
    order = np.argsort(-vals, kind="stable")
    return vals[order], vecs[:, order]


def _max_residual(matrix: np.ndarray, vals: np.ndarray, vecs: np.ndarray) -> float:
    if vals.size == 0:
        return 0.0
    return float(np.max(np.linalg.norm(matrix @ vecs - vecs * vals, axis=0)))


@dataclass(frozen=True)
class SpectralReport:
    n: int
    m: int
    adjacency_eigs: tuple[float, ...]
    laplacian_eigs: tuple[float, ...]
    perron: tuple[float, ...] | None
    residual: float

    @property
    def rho(self) -> float:
        return self.adjacency_eigs[0]

    @property
    def lambda2(self) -> float | None:
        return self.adjacency_eigs[1] if self.n >= 2 else None

    @property
    def mu1(self) -> float:
        return self.laplacian_eigs[0]

    def as_record(self) -> dict[str, object]:
        return {"n": self.n, "m": self.m, "rho": self.rho, "lambda2": self.lambda2,
                "mu1": self.mu1, "residual": self.residual}


def spectral_report(g: Graph) -> SpectralReport:
    a = g.adjacency_matrix()
    lap = g.laplacian_matrix()
    avals, avecs = symmetric_eigen(a)
    lvals, lvecs = symmetric_eigen(lap)
    residual = max(_max_residual(a, avals, avecs), _max_residual(lap, lvals, lvecs))
    perron = None
    if is_connected(g):
        _, x = perron_pair(g, _eig=(avals, avecs))
        perron = tuple(float(t) for t in x)
    return SpectralReport(
        n=g.n,
        m=g.m,
        adjacency_eigs=tuple(float(t) for t in avals),
        laplacian_eigs=tuple(float(t) for t in lvals),
        perron=perron,
        residual=residual,
    )


def spectral_radius(g: Graph) -> float:
    if g.m == 0:
        return 0.0
    vals, _ = symmetric_eigen(g.adjacency_matrix())
    return float(vals[0])


def _power_iteration(a: np.ndarray, tol: float = 1e-13, max_iter: int = 200_000) -> tuple[float, np.ndarray]:
    # shift by I so -rho (bipartite case) cannot tie in modulus with rho
    b = a + np.eye(a.shape[0])
    x = np.ones(a.shape[0]) / math.sqrt(a.shape[0])
    rho = 0.0
    for _ in range(max_iter):
        y = b @ x
        y /= np.linalg.norm(y)
        rho = float(y @ a @ y)
        if np.linalg.norm(a @ y - rho * y) < tol:
            return rho, y
        x = y
    return rho, x


def perron_pair(g: Graph, _eig: tuple[np.ndarray, np.ndarray] | None = None) -> tuple[float, np.ndarray]:
    """Spectral radius and the positive unit Perron vector of a connected graph."""
    if not is_connected(g):
        raise GraphError("Perron vector requires a connected graph")
    a = g.adjacency_matrix()
    if g.n == 1:
        return 0.0, np.ones(1)
    vals, vecs = _eig if _eig is not None else symmetric_eigen(a)
    rho = float(vals[0])
    x = vecs[:, 0].copy()
    lead = np.flatnonzero(np.abs(x) > 1e-14)[0]
    if x[lead] < 0:
        x = -x
    if np.any(x <= 0):
        rho, x = _power_iteration(a)
    return rho, x / np.linalg.norm(x)


class Comparison(enum.Enum):
    GREATER = "GREATER"
    LESS = "LESS"
    INDETERMINATE = "INDETERMINATE"


def compare(value: float, reference: float, margin: float = COMPARE_MARGIN) -> Comparison:
    """Three-way comparison that never reports floating-point equality."""
    diff = value - reference
    if diff > margin:
        return Comparison.GREATER
    if diff < -margin:
        return Comparison.LESS
    return Comparison.INDETERMINATE


# --- exact tree count ---------------------------------------------------------

def bareiss_determinant(matrix: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination over Python integers."""
    m = [list(map(int, row)) for row in matrix]
    size = len(m)
    if size == 0:
        return 1
    sign, prev = 1, 1
    for k in range(size - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, size):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, size):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[-1][-1]


@dataclass(frozen=True)
class TreeCount:
    count: int


def spanning_tree_count(g: Graph) -> TreeCount:
    """Kirchhoff count via the determinant of the Laplacian with row/column 0 removed."""
    deg = [len(a) for a in g.adjacency]
    minor = [[0] * (g.n - 1) for _ in range(g.n - 1)]
    for i in range(1, g.n):
        minor[i - 1][i - 1] = deg[i]
    for u, v in g.edges:
        if u and v:
            minor[u - 1][v - 1] = minor[v - 1][u - 1] = -1
    return TreeCount(bareiss_determinant(minor))


# --- bounds and transforms ------------------------------------------------------

def hong_upper_bound(n: int, m: int, delta: int) -> float:
    """Upper bound (delta-1)/2 + sqrt(2m - n*delta + (delta+1)^2/4) on the spectral radius."""
    if n < 1 or delta < 1:
        raise ValueError(f"need n >= 1 and delta >= 1, got n={n}, delta={delta}")
    radicand = 2 * m - n * delta + (delta + 1) ** 2 / 4
    if radicand < 0:
        raise ValueError(f"negative radicand {radicand} for n={n}, m={m}, delta={delta}")
    return (delta - 1) / 2 + math.sqrt(radicand)


def hong_bound_for(g: Graph) -> float:
    return hong_upper_bound(g.n, g.m, min_degree(g))


def rotate_edges(g: Graph, u: int, v: int, S: Iterable[int]) -> Graph:
    """Move the edges v-s (s in S) so they hang off u instead."""
    moved = set(S)
    if u == v:
        raise GraphError("rotation needs two distinct vertices")
    if not moved:
        raise GraphError("rotation set must be nonempty")
    if u in moved:
        raise GraphError(f"vertex {u} cannot be rotated onto itself")
    bad = moved - (g.adjacency[v] - g.adjacency[u])
    if bad:
        raise GraphError(f"vertices {sorted(bad)} are not in N(v) minus N(u)")
    return g.remove_edges((v, s) for s in moved).add_edges((u, s) for s in moved)

