from __future__ import annotations

import itertools
import math
import statistics

import numpy as np
import pytest

from smallworld import DirectedGraph, UndirectedGraph

# --- random instances -------------------------------------------------------


def random_pairs(n: int, p: float, rng: np.random.Generator, directed: bool = False) -> list[tuple[int, int]]:
    if directed:
        cand = [(u, v) for u in range(n) for v in range(n) if u != v]
    else:
        cand = list(itertools.combinations(range(n), 2))
    keep = rng.random(len(cand)) < p
    return [e for e, k in zip(cand, keep) if k]


def random_graph(n: int, p: float, seed: int) -> UndirectedGraph:
    return UndirectedGraph.from_pairs(random_pairs(n, p, np.random.default_rng(seed)), n)


def random_digraph(n: int, p: float, seed: int) -> DirectedGraph:
    return DirectedGraph.from_pairs(random_pairs(n, p, np.random.default_rng(seed), directed=True), n)


def star(leaves: int) -> UndirectedGraph:
    return UndirectedGraph.from_pairs([(0, i) for i in range(1, leaves + 1)])


def cycle(n: int) -> UndirectedGraph:
    return UndirectedGraph.from_pairs([(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> UndirectedGraph:
    return UndirectedGraph.from_pairs(itertools.combinations(range(n), 2))


# --- independent oracles ----------------------------------------------------


def adjacency_sets(graph) -> list[set[int]]:
    n = graph.node_count
    adj = [set() for _ in range(n)]
    for u, v in graph.edges().tolist():
        adj[u].add(v)
        if not graph.directed:
            adj[v].add(u)
    return adj


def brute_average_clustering(graph: UndirectedGraph) -> float:
    # checks every neighbour pair of every node
    adj = adjacency_sets(graph)
    total = 0.0
    for v in range(graph.node_count):
        nb = sorted(adj[v])
        d = len(nb)
        if d < 2:
            continue
        linked = sum(1 for a, b in itertools.combinations(nb, 2) if b in adj[a])
        total += linked / (d * (d - 1) / 2)
    return total / graph.node_count


def oracle_pearson(pairs: list[tuple[float, float]]) -> float:
    xs = [float(x) for x, _ in pairs]
    ys = [float(y) for _, y in pairs]
    return statistics.correlation(xs, ys)


def oracle_undirected_assortativity(graph: UndirectedGraph) -> float:
    adj = adjacency_sets(graph)
    deg = [len(a) for a in adj]
    pairs = []
    for u, v in graph.edges().tolist():
        pairs.append((deg[u], deg[v]))
        pairs.append((deg[v], deg[u]))
    return oracle_pearson(pairs)


def reachability(graph) -> np.ndarray:
    """Boolean transitive closure (reflexive) by Floyd-Warshall."""
    n = graph.node_count
    reach = np.eye(n, dtype=bool)
    for u, v in graph.edges().tolist():
        reach[u, v] = True
        if not graph.directed:
            reach[v, u] = True
    for k in range(n):
        reach |= reach[:, k : k + 1] & reach[k : k + 1, :]
    return reach


def bfs_distances(adj: list[set[int]], s: int) -> dict[int, int]:
    dist = {s: 0}
    frontier = [s]
    while frontier:
        nxt = []
        for v in frontier:
            for w in adj[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    nxt.append(w)
        frontier = nxt
    return dist


# --- acceptance reporting ---------------------------------------------------

_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")
    config.addinivalue_line("markers", "slow: full-size runtime checks")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _CRITERIA[number] = (title, "PASS" if report.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, status = _CRITERIA[number]
        terminalreporter.write_line(f"{status}  criterion {number:>2}: {title}")


def standard_error(values) -> float:
    values = list(values)
    return statistics.stdev(values) / math.sqrt(len(values))
