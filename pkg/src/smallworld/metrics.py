"""Degree statistics, clustering and degree assortativity."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from enum import Enum

import numpy as np
from numba import njit, prange

from .errors import UndefinedAssortativityError, UndefinedStatisticError, UsageError
from .graph import DirectedGraph, UndirectedGraph, undirected_view

__all__ = [
    "SummaryStats",
    "DegreeHistogram",
    "DegreeMode",
    "summary_stats",
    "local_clustering",
    "average_clustering",
    "clustering_values",
    "degree_assortativity",
    "directed_assortativity",
    "pearson",
    "degree_histogram",
]


class DegreeMode(str, Enum):
    DEGREE = "degree"
    IN = "in"
    OUT = "out"

    @classmethod
    def parse(cls, value: DegreeMode | str) -> DegreeMode:
        try:
            return cls(value)
        except ValueError:
            raise UsageError(f"unknown degree mode {value!r}") from None


@dataclass(frozen=True)
class SummaryStats:
    node_count: int
    edge_count: int
    edges_per_node: float
    mean_degree: float
    median_degree: int
    average_clustering: float
    assortativity: float | None
    # directed graphs only
    assortativity_in: float | None = None
    assortativity_out: float | None = None

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class DegreeHistogram:
    mode: DegreeMode
    bins: dict[int, int]

    def rows(self) -> list[tuple[int, int]]:
        return sorted(self.bins.items())

    @property
    def total(self) -> int:
        return sum(self.bins.values())


@njit(parallel=True, cache=True)
def _common_neighbor_sums(indptr, indices):
    # out[v] = sum over neighbours u of |N(v) & N(u)| = 2 * triangles(v)
    n = len(indptr) - 1
    out = np.zeros(n, np.int64)
    for v in prange(n):
        vs, ve = indptr[v], indptr[v + 1]
        if ve - vs < 2:
            continue
        total = 0
        for p in range(vs, ve):
            u = indices[p]
            i, ie = vs, ve
            j, je = indptr[u], indptr[u + 1]
            while i < ie and j < je:
                a = indices[i]
                b = indices[j]
                if a == b:
                    total += 1
                    i += 1
                    j += 1
                elif a < b:
                    i += 1
                else:
                    j += 1
        out[v] = total
    return out


def clustering_values(graph: UndirectedGraph) -> np.ndarray:
    """Local clustering coefficient of every node (0 where degree < 2)."""
    if graph.directed:
        raise UsageError("clustering needs an undirected graph; use undirected_view()")
    twice_tri = _common_neighbor_sums(graph.indptr, graph.indices)
    deg = graph.degrees.astype(np.float64)
    pairs = deg * (deg - 1.0)
    out = np.zeros(graph.node_count, dtype=np.float64)
    np.divide(twice_tri, pairs, out=out, where=pairs > 0)
    return out


def local_clustering(graph: UndirectedGraph, v: int) -> float:
    d = graph.degree(v)
    if d < 2:
        return 0.0
    nb = graph.neighbors(v)
    links = 0
    for u in nb:
        links += len(np.intersect1d(nb, graph.neighbors(int(u)), assume_unique=True))
    return links / (d * (d - 1))


def average_clustering(graph: UndirectedGraph) -> float:
    """Unweighted mean of local clustering; degree<2 nodes count as 0."""
    if graph.node_count == 0:
        raise UndefinedStatisticError("average clustering of an empty graph")
    return float(np.sum(clustering_values(graph)) / graph.node_count)


def pearson(x: np.ndarray, y: np.ndarray) -> float:
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if len(x) == 0:
        raise UndefinedAssortativityError("no edges")
    if np.all(x == x[0]) or np.all(y == y[0]):
        raise UndefinedAssortativityError("endpoint degrees have zero variance")
    dx = x - x.mean()
    dy = y - y.mean()
    r = float(np.dot(dx, dy) / np.sqrt(np.dot(dx, dx) * np.dot(dy, dy)))
    return min(1.0, max(-1.0, r))


def degree_assortativity(graph: UndirectedGraph) -> float:
    """Pearson correlation of endpoint degrees over both orientations of every edge."""
    if graph.directed:
        raise UsageError("degree_assortativity needs an undirected graph")
    deg = graph.degrees
    x = np.repeat(deg, deg)
    y = deg[graph.indices]
    # both orientations per edge: the coordinate sequences are permutations
    assert x.sum() == y.sum()
    return pearson(x, y)


def directed_assortativity(graph: DirectedGraph, mode: DegreeMode | str) -> float:
    """Correlate (d(u), d(v)) over directed edges u->v, d being in- or out-degree."""
    mode = DegreeMode.parse(mode)
    if not graph.directed:
        raise UsageError("directed_assortativity needs a directed graph")
    if mode is DegreeMode.IN:
        d = graph.in_degrees
    elif mode is DegreeMode.OUT:
        d = graph.out_degrees
    else:
        raise UsageError("mode must be 'in' or 'out'")
    x = np.repeat(d, graph.out_degrees)
    y = d[graph.out_indices]
    return pearson(x, y)


def _maybe(fn, *args) -> float | None:
    try:
        return fn(*args)
    except UndefinedAssortativityError:
        return None


def summary_stats(graph: UndirectedGraph | DirectedGraph) -> SummaryStats:
    n, m = graph.node_count, graph.edge_count
    if n == 0:
        raise UndefinedStatisticError("summary statistics of an empty graph")
    if graph.directed:
        degrees = graph.in_degrees + graph.out_degrees
        mean_degree = m / n
        clustering = average_clustering(undirected_view(graph))
        assort = None
        assort_in = _maybe(directed_assortativity, graph, DegreeMode.IN)
        assort_out = _maybe(directed_assortativity, graph, DegreeMode.OUT)
    else:
        degrees = graph.degrees
        mean_degree = 2 * m / n
        clustering = average_clustering(graph)
        assort = _maybe(degree_assortativity, graph)
        assort_in = assort_out = None
    lower_median = int(np.partition(degrees, (n - 1) // 2)[(n - 1) // 2])
    return SummaryStats(
        node_count=n,
        edge_count=m,
        edges_per_node=m / n,
        mean_degree=mean_degree,
        median_degree=lower_median,
        average_clustering=clustering,
        assortativity=assort,
        assortativity_in=assort_in,
        assortativity_out=assort_out,
    )


def degree_values(graph: UndirectedGraph | DirectedGraph, mode: DegreeMode | str) -> np.ndarray:
    mode = DegreeMode.parse(mode)
    if mode is DegreeMode.DEGREE:
        if graph.directed:
            raise UsageError("mode 'degree' needs an undirected graph")
        return graph.degrees
    if not graph.directed:
        raise UsageError(f"mode {mode.value!r} needs a directed graph")
    return graph.in_degrees if mode is DegreeMode.IN else graph.out_degrees


def degree_histogram(graph: UndirectedGraph | DirectedGraph, mode: DegreeMode | str = DegreeMode.DEGREE) -> DegreeHistogram:
    mode = DegreeMode.parse(mode)
    counts = np.bincount(degree_values(graph, mode))
    bins = {int(d): int(c) for d, c in enumerate(counts) if c}
    return DegreeHistogram(mode, bins)
