"""Connected, weakly connected and strongly connected components."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

import numpy as np
from numba import njit

from .errors import UndefinedStatisticError, UsageError
from .graph import DirectedGraph, UndirectedGraph

__all__ = [
    "ComponentKind",
    "ComponentLabeling",
    "connected_components",
    "weakly_connected_components",
    "strongly_connected_components",
    "cross_component_failure_probability",
]


class ComponentKind(str, Enum):
    CONNECTED = "connected"
    WEAK = "weak"
    STRONG = "strong"


@dataclass(frozen=True, eq=False)
class ComponentLabeling:
    """Per-node component labels.

    Label 0 is the largest component; ties are ordered by the smallest node
    index they contain, so ``sizes[label[v]]`` is the size of v's component.
    """

    kind: ComponentKind
    labels: np.ndarray
    sizes: np.ndarray

    @property
    def count(self) -> int:
        return len(self.sizes)

    @property
    def node_count(self) -> int:
        return len(self.labels)

    @property
    def largest(self) -> int:
        return int(self.sizes[0]) if len(self.sizes) else 0

    @classmethod
    def from_sizes(cls, sizes: Sequence[int], kind: ComponentKind | str = ComponentKind.CONNECTED) -> ComponentLabeling:
        """Labeling with the given component sizes and nodes numbered consecutively."""
        sizes = np.sort(np.asarray(sizes, dtype=np.int64))[::-1]
        if len(sizes) and sizes[-1] < 1:
            raise UsageError("component sizes must be positive")
        labels = np.repeat(np.arange(len(sizes), dtype=np.int64), sizes)
        return cls(ComponentKind(kind), labels, sizes)


def _labeling(kind: ComponentKind, raw: np.ndarray) -> ComponentLabeling:
    # raw: arbitrary per-node component keys
    if len(raw) == 0:
        return ComponentLabeling(kind, np.zeros(0, np.int64), np.zeros(0, np.int64))
    _, first, inverse, counts = np.unique(raw, return_index=True, return_inverse=True, return_counts=True)
    order = np.lexsort((first, -counts))
    rank = np.empty(len(order), dtype=np.int64)
    rank[order] = np.arange(len(order))
    return ComponentLabeling(kind, rank[inverse.ravel()], counts[order].astype(np.int64))


@njit(cache=True)
def _dsu_roots(n, src, dst):
    parent = np.arange(n)
    size = np.ones(n, np.int64)
    for e in range(len(src)):
        a = src[e]
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        b = dst[e]
        while parent[b] != b:
            parent[b] = parent[parent[b]]
            b = parent[b]
        if a == b:
            continue
        if size[a] < size[b]:
            a, b = b, a
        parent[b] = a
        size[a] += size[b]
    for v in range(n):
        r = v
        while parent[r] != r:
            r = parent[r]
        parent[v] = r
    return parent


@njit(cache=True)
def _tarjan(n, indptr, indices):
    index = np.full(n, -1, np.int64)
    low = np.zeros(n, np.int64)
    on_stack = np.zeros(n, np.bool_)
    comp = np.full(n, -1, np.int64)
    stack = np.empty(n, np.int64)
    call_v = np.empty(n, np.int64)
    call_e = np.empty(n, np.int64)
    sp = 0
    counter = 0
    ncomp = 0
    for root in range(n):
        if index[root] != -1:
            continue
        index[root] = counter
        low[root] = counter
        counter += 1
        stack[sp] = root
        sp += 1
        on_stack[root] = True
        call_v[0] = root
        call_e[0] = indptr[root]
        cp = 1
        while cp > 0:
            v = call_v[cp - 1]
            e = call_e[cp - 1]
            if e < indptr[v + 1]:
                call_e[cp - 1] = e + 1
                w = indices[e]
                if index[w] == -1:
                    index[w] = counter
                    low[w] = counter
                    counter += 1
                    stack[sp] = w
                    sp += 1
                    on_stack[w] = True
                    call_v[cp] = w
                    call_e[cp] = indptr[w]
                    cp += 1
                elif on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
                continue
            cp -= 1
            if low[v] == index[v]:
                while True:
                    sp -= 1
                    w = stack[sp]
                    on_stack[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
            if cp > 0:
                u = call_v[cp - 1]
                if low[v] < low[u]:
                    low[u] = low[v]
    return comp


def connected_components(graph: UndirectedGraph) -> ComponentLabeling:
    if graph.directed:
        raise UsageError("connected_components needs an undirected graph")
    e = graph.edges()
    roots = _dsu_roots(graph.node_count, e[:, 0].astype(np.int64), e[:, 1].astype(np.int64))
    return _labeling(ComponentKind.CONNECTED, roots)


def weakly_connected_components(graph: DirectedGraph) -> ComponentLabeling:
    if not graph.directed:
        raise UsageError("weakly_connected_components needs a directed graph")
    e = graph.edges()
    roots = _dsu_roots(graph.node_count, e[:, 0].astype(np.int64), e[:, 1].astype(np.int64))
    return _labeling(ComponentKind.WEAK, roots)


def strongly_connected_components(graph: DirectedGraph) -> ComponentLabeling:
    """Iterative Tarjan, linear in N + M."""
    if not graph.directed:
        raise UsageError("strongly_connected_components needs a directed graph")
    comp = _tarjan(graph.node_count, graph.out_indptr, graph.out_indices)
    return _labeling(ComponentKind.STRONG, comp)


def cross_component_failure_probability(labeling: ComponentLabeling | Sequence[int]) -> float:
    """Probability that two independent uniform node draws fall in different components.

    ``1 - sum_i (n_i / N)**2``, evaluated in exact rational arithmetic.
    Accepts a labeling or a bare sequence of component sizes.
    """
    sizes = labeling.sizes if isinstance(labeling, ComponentLabeling) else labeling
    sizes = [int(s) for s in sizes]
    n = sum(sizes)
    if n == 0:
        raise UndefinedStatisticError("failure probability of an empty graph")
    return float(Fraction(n * n - sum(s * s for s in sizes), n * n))
