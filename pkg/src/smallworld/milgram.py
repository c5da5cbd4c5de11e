"""Repeated-sampling Milgram experiment.

Nodes are split at random into two halves A and B. Each trial draws a source
uniformly from A and a target uniformly from B (with replacement across
trials) and records the geodesic distance between them, or a failed chain
when no path exists.

Geodesics are found with a level-synchronous bidirectional BFS that always
grows the smaller frontier. It returns exactly the BFS hop count but touches
far fewer nodes on large sparse graphs than a one-sided search.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numba
import numpy as np
from numba import njit, prange

from .errors import UsageError
from .graph import DirectedGraph, UndirectedGraph, undirected_view

__all__ = [
    "MilgramMode",
    "MilgramConfig",
    "MilgramResult",
    "ExactPathLengths",
    "partition_nodes",
    "sample_pairs",
    "pair_lengths",
    "shortest_path_length",
    "run_milgram",
    "exact_average_path_length",
    "distance_matrix",
    "SCHEDULE_PAIR_COUNTS",
    "schedule",
]

# 96 (Milgram's sources) and 24000 (the e-mail replication); the third run uses N
SCHEDULE_PAIR_COUNTS = (96, 24000)

UNREACHABLE = -1


class MilgramMode(str, Enum):
    UNDIRECTED = "undirected"
    DIRECTED = "directed"
    AS_UNDIRECTED = "as-undirected"

    @classmethod
    def parse(cls, value: MilgramMode | str) -> MilgramMode:
        if value == "directed-as-undirected":
            return cls.AS_UNDIRECTED
        try:
            return cls(value)
        except ValueError:
            raise UsageError(f"unknown mode {value!r}") from None

    @classmethod
    def default_for(cls, graph) -> MilgramMode:
        return cls.DIRECTED if graph.directed else cls.UNDIRECTED


@dataclass(frozen=True)
class MilgramConfig:
    pair_count: int
    seed: int = 0
    mode: MilgramMode | None = None

    def __post_init__(self):
        if self.pair_count < 1:
            raise UsageError("pair_count must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise UsageError("seed must be an unsigned 64-bit integer")
        if self.mode is not None:
            object.__setattr__(self, "mode", MilgramMode.parse(self.mode))


@dataclass(frozen=True)
class MilgramResult:
    trials: int
    successes: int
    failures: int
    length_histogram: dict[int, int] = field(default_factory=dict)

    @property
    def failure_rate(self) -> float:
        return self.failures / self.trials

    @property
    def mean_path_length(self) -> float | None:
        if not self.successes:
            return None
        return sum(k * c for k, c in self.length_histogram.items()) / self.successes

    @property
    def mean_rounded(self) -> int | None:
        mean = self.mean_path_length
        return None if mean is None else math.floor(mean + 0.5)

    @property
    def length_std(self) -> float | None:
        """Sample standard deviation of the successful path lengths."""
        if self.successes < 2:
            return None
        mean = self.mean_path_length
        ss = sum(c * (k - mean) ** 2 for k, c in self.length_histogram.items())
        return math.sqrt(ss / (self.successes - 1))

    def to_dict(self) -> dict:
        return {
            "trials": self.trials,
            "successes": self.successes,
            "failures": self.failures,
            "failure_rate": self.failure_rate,
            "mean_path_length": self.mean_path_length,
            "mean_rounded": self.mean_rounded,
            "histogram": [[k, c] for k, c in sorted(self.length_histogram.items())],
        }

    @classmethod
    def from_lengths(cls, lengths: np.ndarray) -> MilgramResult:
        lengths = np.asarray(lengths)
        ok = lengths[lengths != UNREACHABLE]
        values, counts = np.unique(ok, return_counts=True)
        hist = {int(k): int(c) for k, c in zip(values, counts)}
        return cls(len(lengths), len(ok), len(lengths) - len(ok), hist)


@dataclass(frozen=True)
class ExactPathLengths:
    mean: float | None
    unreachable_fraction: float
    pair_count: int
    reachable_count: int


@njit(cache=True)
def _bidir_bfs(s, t, f_ptr, f_idx, b_ptr, b_idx, dist_f, dist_b, q_f, q_b):
    # dist_f / dist_b must be all -1 on entry; restored before returning
    dist_f[s] = 0
    dist_b[t] = 0
    q_f[0] = s
    q_b[0] = t
    fs, fe, ftail = 0, 1, 1
    bs, be, btail = 0, 1, 1
    df = 0
    db = 0
    result = -1
    while result < 0 and fs < fe and bs < be:
        if fe - fs <= be - bs:
            for i in range(fs, fe):
                v = q_f[i]
                for p in range(f_ptr[v], f_ptr[v + 1]):
                    w = f_idx[p]
                    if dist_b[w] >= 0:
                        result = df + 1 + dist_b[w]
                        break
                    if dist_f[w] < 0:
                        dist_f[w] = df + 1
                        q_f[ftail] = w
                        ftail += 1
                if result >= 0:
                    break
            fs, fe = fe, ftail
            df += 1
        else:
            for i in range(bs, be):
                v = q_b[i]
                for p in range(b_ptr[v], b_ptr[v + 1]):
                    w = b_idx[p]
                    if dist_f[w] >= 0:
                        result = db + 1 + dist_f[w]
                        break
                    if dist_b[w] < 0:
                        dist_b[w] = db + 1
                        q_b[btail] = w
                        btail += 1
                if result >= 0:
                    break
            bs, be = be, btail
            db += 1
    for i in range(ftail):
        dist_f[q_f[i]] = -1
    for i in range(btail):
        dist_b[q_b[i]] = -1
    return result


@njit(parallel=True, cache=True)
def _pair_lengths_kernel(n, sources, targets, f_ptr, f_idx, b_ptr, b_idx, nchunks):
    m = len(sources)
    out = np.empty(m, np.int32)
    for c in prange(nchunks):
        dist_f = np.full(n, -1, np.int32)
        dist_b = np.full(n, -1, np.int32)
        q_f = np.empty(n, np.int32)
        q_b = np.empty(n, np.int32)
        lo = c * m // nchunks
        hi = (c + 1) * m // nchunks
        for i in range(lo, hi):
            out[i] = _bidir_bfs(sources[i], targets[i], f_ptr, f_idx, b_ptr, b_idx, dist_f, dist_b, q_f, q_b)
    return out


@njit(parallel=True, cache=True)
def _all_pairs_bfs(n, ptr, idx):
    dist = np.full((n, n), -1, np.int32)
    for s in prange(n):
        queue = np.empty(n, np.int32)
        row = dist[s]
        row[s] = 0
        queue[0] = s
        head, tail = 0, 1
        while head < tail:
            v = queue[head]
            head += 1
            for p in range(ptr[v], ptr[v + 1]):
                w = idx[p]
                if row[w] < 0:
                    row[w] = row[v] + 1
                    queue[tail] = w
                    tail += 1
    return dist


def _adjacency(graph: UndirectedGraph | DirectedGraph, mode: MilgramMode):
    """(forward indptr, forward indices, backward indptr, backward indices)."""
    if mode is MilgramMode.DIRECTED:
        if not graph.directed:
            raise UsageError("mode 'directed' needs a directed graph")
        return graph.out_indptr, graph.out_indices, graph.in_indptr, graph.in_indices
    if mode is MilgramMode.UNDIRECTED and graph.directed:
        raise UsageError("mode 'undirected' needs an undirected graph; use 'as-undirected' for digraphs")
    g = undirected_view(graph)
    return g.indptr, g.indices, g.indptr, g.indices


def _streams(seed: int) -> tuple[np.random.Generator, np.random.Generator]:
    part, pairs = np.random.SeedSequence(seed).spawn(2)
    return np.random.Generator(np.random.Philox(part)), np.random.Generator(np.random.Philox(pairs))


def partition_nodes(n: int, seed: int = 0) -> tuple[np.ndarray, np.ndarray]:
    """Uniform random split into A (ceil(n/2) nodes) and B (floor(n/2) nodes)."""
    if n < 2:
        raise UsageError("partition needs at least two nodes")
    rng, _ = _streams(seed)
    perm = rng.permutation(n)
    half = (n + 1) // 2
    return np.sort(perm[:half]), np.sort(perm[half:])


def sample_pairs(n: int, config: MilgramConfig) -> tuple[np.ndarray, np.ndarray]:
    """Source/target index arrays for ``config.pair_count`` trials.

    The A/B split depends only on the seed, so every pair count run with one
    seed shares the same partition.
    """
    a, b = partition_nodes(n, config.seed)
    _, rng = _streams(config.seed)
    src = a[rng.integers(len(a), size=config.pair_count)]
    dst = b[rng.integers(len(b), size=config.pair_count)]
    return src.astype(np.int32), dst.astype(np.int32)


def pair_lengths(
    graph: UndirectedGraph | DirectedGraph,
    sources: np.ndarray,
    targets: np.ndarray,
    mode: MilgramMode | str | None = None,
) -> np.ndarray:
    """Geodesic length per (source, target) pair; -1 where unreachable."""
    mode = MilgramMode.default_for(graph) if mode is None else MilgramMode.parse(mode)
    f_ptr, f_idx, b_ptr, b_idx = _adjacency(graph, mode)
    sources = np.ascontiguousarray(sources, dtype=np.int32)
    targets = np.ascontiguousarray(targets, dtype=np.int32)
    if len(sources) != len(targets):
        raise UsageError("sources and targets differ in length")
    n = graph.node_count
    if len(sources) and (min(sources.min(), targets.min()) < 0 or max(sources.max(), targets.max()) >= n):
        raise UsageError("node index out of range")
    if np.any(sources == targets):
        raise UsageError("source and target must differ")
    nchunks = max(1, min(numba.get_num_threads(), len(sources)))
    return _pair_lengths_kernel(n, sources, targets, f_ptr, f_idx, b_ptr, b_idx, nchunks)


def shortest_path_length(
    graph: UndirectedGraph | DirectedGraph,
    source: int,
    target: int,
    mode: MilgramMode | str | None = None,
) -> int | None:
    """Hop count of a shortest source->target path, or None if unreachable."""
    length = int(pair_lengths(graph, np.array([source]), np.array([target]), mode)[0])
    return None if length == UNREACHABLE else length


def run_milgram(graph: UndirectedGraph | DirectedGraph, config: MilgramConfig) -> MilgramResult:
    if graph.node_count < 2:
        raise UsageError("the experiment needs at least two nodes")
    src, dst = sample_pairs(graph.node_count, config)
    return MilgramResult.from_lengths(pair_lengths(graph, src, dst, config.mode))


def distance_matrix(graph: UndirectedGraph | DirectedGraph, mode: MilgramMode | str | None = None, max_nodes: int = 2000) -> np.ndarray:
    """All-pairs hop distances by one plain BFS per node (-1 = unreachable)."""
    if graph.node_count > max_nodes:
        raise UsageError(f"exhaustive BFS limited to {max_nodes} nodes, graph has {graph.node_count}")
    mode = MilgramMode.default_for(graph) if mode is None else MilgramMode.parse(mode)
    ptr, idx, _, _ = _adjacency(graph, mode)
    return _all_pairs_bfs(graph.node_count, ptr, idx)


def exact_average_path_length(
    graph: UndirectedGraph | DirectedGraph,
    mode: MilgramMode | str | None = None,
    *,
    sources: np.ndarray | None = None,
    targets: np.ndarray | None = None,
    max_nodes: int = 2000,
) -> ExactPathLengths:
    """Mean geodesic over reachable ordered pairs, by exhaustive BFS.

    ``sources``/``targets`` restrict the ordered pairs considered (for example
    to A x B); self-pairs are always excluded.
    """
    dist = distance_matrix(graph, mode, max_nodes)
    n = graph.node_count
    rows = np.arange(n) if sources is None else np.asarray(sources)
    cols = np.arange(n) if targets is None else np.asarray(targets)
    sub = dist[np.ix_(rows, cols)]
    not_self = rows[:, None] != cols[None, :]
    total = int(not_self.sum())
    reach = (sub > 0) & not_self
    reachable = int(reach.sum())
    mean = float(sub[reach].astype(np.int64).sum() / reachable) if reachable else None
    unreachable = (total - reachable) / total if total else 0.0
    return ExactPathLengths(mean, unreachable, total, reachable)


def schedule(n: int) -> tuple[int, ...]:
    return (*SCHEDULE_PAIR_COUNTS, n)
