"""Edge-list ingestion and immutable compressed-adjacency graphs.

External node tokens are remapped to dense ``0..N-1`` indices in order of
first appearance. Adjacency is stored CSR-style: ``indptr`` (int64, length
N+1) and ``indices`` (int32), neighbour runs sorted ascending.
"""

from __future__ import annotations

import io
from array import array
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import DataError, ParseError, UsageError

__all__ = [
    "IdMap",
    "EdgeList",
    "UndirectedGraph",
    "DirectedGraph",
    "parse_edge_list",
    "read_edge_list",
    "build_undirected",
    "build_directed",
    "undirected_view",
    "load_graph",
]


class IdMap:
    """Bijection between external tokens and dense indices."""

    __slots__ = ("_reverse", "_forward")

    def __init__(self, reverse: Sequence[str], forward: dict[str, int] | None = None):
        self._reverse = tuple(reverse)
        self._forward = forward
        if forward is not None and len(forward) != len(self._reverse):
            raise ValueError("forward and reverse maps disagree in size")

    @classmethod
    def identity(cls, n: int) -> IdMap:
        return cls([str(i) for i in range(n)])

    def __len__(self) -> int:
        return len(self._reverse)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IdMap) and self._reverse == other._reverse

    def __hash__(self) -> int:
        return hash(self._reverse)

    @property
    def forward(self) -> dict[str, int]:
        if self._forward is None:
            self._forward = {tok: i for i, tok in enumerate(self._reverse)}
        return self._forward

    @property
    def reverse(self) -> tuple[str, ...]:
        return self._reverse

    def external(self, index: int) -> str:
        return self._reverse[index]

    def internal(self, token: str) -> int:
        try:
            return self.forward[token]
        except KeyError:
            raise UsageError(f"unknown node id {token!r}") from None

    def get(self, token: str) -> int | None:
        return self.forward.get(token)


@dataclass(frozen=True)
class EdgeList:
    """A simple (loop-free, duplicate-free) edge list over dense indices."""

    directed: bool
    node_count: int
    src: np.ndarray
    dst: np.ndarray
    dropped_self_loops: int = 0
    collapsed_duplicates: int = 0

    def __len__(self) -> int:
        return len(self.src)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return list(zip(self.src.tolist(), self.dst.tolist()))

    @classmethod
    def from_arrays(cls, src, dst, node_count: int | None = None, *, directed: bool) -> EdgeList:
        """Drop self-loops and duplicates, keeping first-appearance order."""
        src = np.asarray(src, dtype=np.int64).ravel()
        dst = np.asarray(dst, dtype=np.int64).ravel()
        if src.shape != dst.shape:
            raise ValueError("src and dst differ in length")
        if node_count is None:
            node_count = int(max(src.max(initial=-1), dst.max(initial=-1))) + 1
        if len(src) and (min(src.min(), dst.min()) < 0 or max(src.max(), dst.max()) >= node_count):
            raise UsageError(f"edge endpoint out of range for node_count={node_count}")

        loops = src == dst
        n_loops = int(loops.sum())
        if n_loops:
            src, dst = src[~loops], dst[~loops]

        if directed:
            key = src * node_count + dst
        else:
            key = np.minimum(src, dst) * node_count + np.maximum(src, dst)
        _, first = np.unique(key, return_index=True)
        n_dup = len(key) - len(first)
        if n_dup:
            first.sort()
            src, dst = src[first], dst[first]

        return cls(
            directed=directed,
            node_count=int(node_count),
            src=_frozen(src.astype(np.int32)),
            dst=_frozen(dst.astype(np.int32)),
            dropped_self_loops=n_loops,
            collapsed_duplicates=int(n_dup),
        )

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]], node_count: int | None = None, *, directed: bool) -> EdgeList:
        arr = np.array(list(pairs), dtype=np.int64).reshape(-1, 2)
        return cls.from_arrays(arr[:, 0], arr[:, 1], node_count, directed=directed)


def _frozen(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


def _csr(n: int, src: np.ndarray, dst: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    order = np.lexsort((dst, src))
    indices = dst[order].astype(np.int32)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
    return _frozen(indptr), _frozen(indices)


class UndirectedGraph:
    """Immutable simple undirected graph in CSR form.

    Each undirected edge appears twice in ``indices`` (once per endpoint).
    """

    directed = False

    def __init__(self, indptr: np.ndarray, indices: np.ndarray, id_map: IdMap | None = None):
        self.indptr = indptr
        self.indices = indices
        n = len(indptr) - 1
        self.id_map = id_map if id_map is not None else IdMap.identity(n)
        if len(self.id_map) != n:
            raise ValueError("id_map size does not match node count")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]], node_count: int | None = None) -> UndirectedGraph:
        return build_undirected(EdgeList.from_pairs(pairs, node_count, directed=False))

    @property
    def node_count(self) -> int:
        return len(self.indptr) - 1

    @property
    def edge_count(self) -> int:
        return len(self.indices) // 2

    @cached_property
    def degrees(self) -> np.ndarray:
        return _frozen(np.diff(self.indptr))

    def degree(self, v: int) -> int:
        self._check(v)
        return int(self.indptr[v + 1] - self.indptr[v])

    def neighbors(self, v: int) -> np.ndarray:
        self._check(v)
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.neighbors(u)
        i = np.searchsorted(nb, v)
        return bool(i < len(nb) and nb[i] == v)

    def edges(self) -> np.ndarray:
        """(M, 2) array of edges with ``u < v``."""
        src = np.repeat(np.arange(self.node_count, dtype=np.int32), self.degrees)
        keep = src < self.indices
        return np.column_stack([src[keep], self.indices[keep]])

    def _check(self, v: int) -> None:
        if not 0 <= v < self.node_count:
            raise UsageError(f"node index {v} out of range [0, {self.node_count})")

    def __repr__(self) -> str:
        return f"UndirectedGraph(N={self.node_count}, M={self.edge_count})"


class DirectedGraph:
    """Immutable simple digraph with both out- and in-adjacency in CSR form."""

    directed = True

    def __init__(
        self,
        out_indptr: np.ndarray,
        out_indices: np.ndarray,
        in_indptr: np.ndarray,
        in_indices: np.ndarray,
        id_map: IdMap | None = None,
    ):
        self.out_indptr = out_indptr
        self.out_indices = out_indices
        self.in_indptr = in_indptr
        self.in_indices = in_indices
        n = len(out_indptr) - 1
        self.id_map = id_map if id_map is not None else IdMap.identity(n)
        if len(self.id_map) != n:
            raise ValueError("id_map size does not match node count")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]], node_count: int | None = None) -> DirectedGraph:
        return build_directed(EdgeList.from_pairs(pairs, node_count, directed=True))

    @property
    def node_count(self) -> int:
        return len(self.out_indptr) - 1

    @property
    def edge_count(self) -> int:
        return len(self.out_indices)

    @cached_property
    def out_degrees(self) -> np.ndarray:
        return _frozen(np.diff(self.out_indptr))

    @cached_property
    def in_degrees(self) -> np.ndarray:
        return _frozen(np.diff(self.in_indptr))

    @cached_property
    def _undirected(self) -> UndirectedGraph:
        e = self.edges()
        edges = EdgeList.from_arrays(e[:, 0], e[:, 1], self.node_count, directed=False)
        return build_undirected(edges, self.id_map)

    def successors(self, v: int) -> np.ndarray:
        self._check(v)
        return self.out_indices[self.out_indptr[v] : self.out_indptr[v + 1]]

    def predecessors(self, v: int) -> np.ndarray:
        self._check(v)
        return self.in_indices[self.in_indptr[v] : self.in_indptr[v + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.successors(u)
        i = np.searchsorted(nb, v)
        return bool(i < len(nb) and nb[i] == v)

    def edges(self) -> np.ndarray:
        """(M, 2) array of (source, target) rows, sorted."""
        src = np.repeat(np.arange(self.node_count, dtype=np.int32), self.out_degrees)
        return np.column_stack([src, self.out_indices])

    def _check(self, v: int) -> None:
        if not 0 <= v < self.node_count:
            raise UsageError(f"node index {v} out of range [0, {self.node_count})")

    def __repr__(self) -> str:
        return f"DirectedGraph(N={self.node_count}, M={self.edge_count})"


def parse_edge_list(stream: Iterable[str] | str, directed: bool = False) -> tuple[EdgeList, IdMap]:
    """Parse whitespace-separated ``u v`` lines.

    Blank lines and lines whose first non-blank character is ``#`` are
    skipped; tokens after the second are ignored. A line with a single
    token raises :class:`ParseError`.
    """
    if isinstance(stream, str):
        stream = io.StringIO(stream)

    forward: dict[str, int] = {}
    reverse: list[str] = []
    src = array("q")
    dst = array("q")
    for lineno, line in enumerate(stream, 1):
        parts = line.split()
        if not parts or parts[0][0] == "#":
            continue
        if len(parts) < 2:
            raise ParseError(lineno, line.rstrip("\r\n"))
        a, b = parts[0], parts[1]
        ia = forward.get(a)
        if ia is None:
            ia = forward[a] = len(reverse)
            reverse.append(a)
        ib = forward.get(b)
        if ib is None:
            ib = forward[b] = len(reverse)
            reverse.append(b)
        src.append(ia)
        dst.append(ib)

    id_map = IdMap(reverse, forward)
    edges = EdgeList.from_arrays(
        np.frombuffer(src, dtype=np.int64),
        np.frombuffer(dst, dtype=np.int64),
        len(reverse),
        directed=directed,
    )
    return edges, id_map


def read_edge_list(path: str | Path, directed: bool = False) -> tuple[EdgeList, IdMap]:
    path = Path(path)
    try:
        with path.open(encoding="utf-8") as fh:
            return parse_edge_list(fh, directed)
    except (FileNotFoundError, IsADirectoryError, PermissionError) as exc:
        raise DataError(f"cannot read {path}: {exc.strerror}") from exc
    except UnicodeDecodeError as exc:
        raise DataError(f"{path} is not valid UTF-8 text") from exc


def build_undirected(edges: EdgeList, id_map: IdMap | None = None) -> UndirectedGraph:
    if edges.directed:
        raise UsageError("build_undirected needs an undirected EdgeList")
    n = edges.node_count
    src = np.concatenate([edges.src, edges.dst])
    dst = np.concatenate([edges.dst, edges.src])
    indptr, indices = _csr(n, src, dst)
    return UndirectedGraph(indptr, indices, id_map)


def build_directed(edges: EdgeList, id_map: IdMap | None = None) -> DirectedGraph:
    if not edges.directed:
        raise UsageError("build_directed needs a directed EdgeList")
    n = edges.node_count
    out_indptr, out_indices = _csr(n, edges.src, edges.dst)
    in_indptr, in_indices = _csr(n, edges.dst, edges.src)
    return DirectedGraph(out_indptr, out_indices, in_indptr, in_indices, id_map)


def undirected_view(graph: DirectedGraph) -> UndirectedGraph:
    """Forget edge orientation; antiparallel pairs collapse to one edge."""
    if not graph.directed:
        return graph
    # cached: the digraph is immutable, so its view is too
    return graph._undirected


def load_graph(path: str | Path, directed: bool = False) -> UndirectedGraph | DirectedGraph:
    edges, id_map = read_edge_list(path, directed)
    if directed:
        return build_directed(edges, id_map)
    return build_undirected(edges, id_map)
