"""Top-k degree rankings and cross-graph lookups between two graphs over one id space."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import UsageError
from .graph import DirectedGraph, UndirectedGraph
from .metrics import DegreeMode, degree_values

__all__ = ["Direction", "RankRow", "CompareTable", "top_k", "cross_rank_table", "id_sort_key"]


class Direction(str, Enum):
    SOCIAL_TO_INTERACTION = "social->interaction"
    INTERACTION_TO_SOCIAL = "interaction->social"


def id_sort_key(token: str) -> tuple:
    """Integer-looking ids compare numerically and sort before other tokens."""
    body = token[1:] if token[:1] == "-" else token
    if body.isdigit():
        return (0, int(token), token)
    return (1, 0, token)


def _default_mode(graph) -> DegreeMode:
    return DegreeMode.IN if graph.directed else DegreeMode.DEGREE


def _parse_mode(graph, mode) -> DegreeMode:
    if mode is None:
        return _default_mode(graph)
    return DegreeMode.parse(mode)


def top_k(graph: UndirectedGraph | DirectedGraph, k: int, mode: DegreeMode | str | None = None) -> list[tuple[str, int]]:
    """Highest-``mode`` nodes, descending; ties by ascending external id."""
    if k < 1:
        raise UsageError("k must be >= 1")
    values = degree_values(graph, _parse_mode(graph, mode))
    n = len(values)
    if n == 0:
        return []
    if k >= n:
        cand = np.arange(n)
    else:
        threshold = np.partition(values, n - k)[n - k]
        cand = np.flatnonzero(values >= threshold)
    ids = graph.id_map.reverse
    ranked = sorted(((ids[i], int(values[i])) for i in cand), key=lambda r: (-r[1], id_sort_key(r[0])))
    return ranked[:k]


@dataclass(frozen=True)
class RankRow:
    external_id: str
    primary_value: int
    cross_value: int | None

    def csv_fields(self) -> tuple[str, str, str]:
        return self.external_id, str(self.primary_value), str(self.cross_value)


@dataclass(frozen=True)
class CompareTable:
    direction: str
    k: int
    rows: tuple[RankRow, ...]
    overlap: float

    def to_dict(self) -> dict:
        return {
            "direction": self.direction,
            "k": self.k,
            "overlap": self.overlap,
            "rows": [[r.external_id, r.primary_value, r.cross_value] for r in self.rows],
        }


def _direction(primary, cross) -> str:
    name = {False: "social", True: "interaction"}
    return f"{name[primary.directed]}->{name[cross.directed]}"


def cross_rank_table(
    primary: UndirectedGraph | DirectedGraph,
    cross: UndirectedGraph | DirectedGraph,
    k: int = 10,
    direction: Direction | str | None = None,
) -> CompareTable:
    """Top-k of ``primary`` with each node's value looked up in ``cross``.

    Undirected graphs are ranked/looked up by degree, directed graphs by
    indegree. A node absent from ``cross`` gets ``cross_value=None``.
    """
    actual = _direction(primary, cross)
    if direction is not None and Direction(direction).value != actual:
        raise UsageError(f"direction {Direction(direction).value!r} does not match graph kinds ({actual})")

    ranked = top_k(primary, k)
    cross_values = degree_values(cross, _default_mode(cross))
    rows = []
    for token, value in ranked:
        idx = cross.id_map.get(token)
        rows.append(RankRow(token, value, None if idx is None else int(cross_values[idx])))

    cross_top = {tok for tok, _ in top_k(cross, k)} if cross.node_count else set()
    shared = sum(1 for r in rows if r.external_id in cross_top)
    overlap = shared / len(rows) if rows else 0.0
    return CompareTable(actual, k, tuple(rows), overlap)
