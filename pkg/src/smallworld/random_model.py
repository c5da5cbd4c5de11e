"""Erdos-Renyi G(n, p) generation and the density-matched baseline."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import UsageError
from .graph import DirectedGraph, EdgeList, UndirectedGraph, build_undirected, undirected_view
from .metrics import average_clustering

__all__ = ["ErParams", "ErBaseline", "er_generate", "matched_er_baseline", "pair_index_to_edge"]

_MAX_BATCH = 1 << 22


@dataclass(frozen=True)
class ErParams:
    n: int
    p: float
    seed: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise UsageError(f"n must be >= 0, got {self.n}")
        if not 0.0 <= self.p <= 1.0:
            raise UsageError(f"p must lie in [0, 1], got {self.p}")
        if not 0 <= self.seed < 2**64:
            raise UsageError("seed must be an unsigned 64-bit integer")


def pair_index_to_edge(k: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Map linear indices over unordered pairs to (w, v) with ``w < v``.

    Pairs are enumerated row by row: (0,1), (0,2), (1,2), (0,3), ...
    so that ``k = v*(v-1)/2 + w``.
    """
    k = np.asarray(k, dtype=np.int64)
    v = ((1.0 + np.sqrt(1.0 + 8.0 * k.astype(np.float64))) // 2).astype(np.int64)
    # float sqrt can be off by one for k ~ 1e11
    v -= (v * (v - 1) // 2) > k
    v += ((v + 1) * v // 2) <= k
    w = k - v * (v - 1) // 2
    return w, v


def _skip_sample(total: int, p: float, rng: np.random.Generator) -> np.ndarray:
    # positions of successes in `total` Bernoulli(p) trials, via geometric gaps
    expected = total * p
    batch = int(min(_MAX_BATCH, expected + 6 * math.sqrt(expected) + 64))
    chunks = []
    last = -1
    while True:
        pos = last + np.cumsum(rng.geometric(p, size=batch))
        if pos[-1] >= total:
            chunks.append(pos[pos < total])
            break
        chunks.append(pos)
        last = int(pos[-1])
    return np.concatenate(chunks)


def er_generate(params: ErParams) -> UndirectedGraph:
    """Sample G(n, p); identical params give an identical edge set."""
    n, p = params.n, params.p
    total = n * (n - 1) // 2
    if p == 0.0 or total == 0:
        k = np.zeros(0, dtype=np.int64)
    elif p == 1.0:
        k = np.arange(total, dtype=np.int64)
    else:
        k = _skip_sample(total, p, np.random.default_rng(params.seed))
    w, v = pair_index_to_edge(k)
    return build_undirected(EdgeList.from_arrays(w, v, n, directed=False))


@dataclass(frozen=True, eq=False)
class ErBaseline:
    params: ErParams
    graph: UndirectedGraph
    clustering: float
    input_clustering: float

    @property
    def ratio(self) -> float | None:
        return self.input_clustering / self.clustering if self.clustering > 0 else None

    def to_dict(self) -> dict:
        return {
            "n": self.params.n,
            "p": self.params.p,
            "seed": self.params.seed,
            "generated_edges": self.graph.edge_count,
            "baseline_clustering": self.clustering,
            "input_clustering": self.input_clustering,
            "ratio": self.ratio,
        }


def matched_er_baseline(graph: UndirectedGraph | DirectedGraph, seed: int = 0) -> ErBaseline:
    """Generate G(N, p) with p = 2M / (N(N-1)) and measure its clustering.

    Directed inputs are compared through their undirected view.
    """
    if graph.directed:
        graph = undirected_view(graph)
    n, m = graph.node_count, graph.edge_count
    if n < 2:
        raise UsageError("baseline needs at least two nodes")
    params = ErParams(n, min(1.0, 2 * m / (n * (n - 1))), seed)
    er = er_generate(params)
    return ErBaseline(params, er, average_clustering(er), average_clustering(graph))
