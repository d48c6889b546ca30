"""Shared graph builders and small oracles for the test suite."""

from __future__ import annotations

import itertools

from gpgraph.graphs import SimpleGraph


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> SimpleGraph:
    return SimpleGraph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> SimpleGraph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    return SimpleGraph.from_edges(10, edges)


def grid_graph(rows: int, cols: int) -> SimpleGraph:
    def at(i, j):
        return i * cols + j

    edges = []
    for i in range(rows):
        for j in range(cols):
            if j + 1 < cols:
                edges.append((at(i, j), at(i, j + 1)))
            if i + 1 < rows:
                edges.append((at(i, j), at(i + 1, j)))
    return SimpleGraph.from_edges(rows * cols, edges)


def wheel_graph(spokes: int) -> SimpleGraph:
    """W_n: a cycle of n vertices plus a hub joined to all of them."""
    edges = [(i, (i + 1) % spokes) for i in range(spokes)]
    edges += [(spokes, i) for i in range(spokes)]
    return SimpleGraph.from_edges(spokes + 1, edges)


def partition_count(k: int) -> int:
    """Number of integer partitions of k (independent DP oracle)."""
    counts = [0] * (k + 1)
    counts[0] = 1
    for part in range(1, k + 1):
        for total in range(part, k + 1):
            counts[total] += counts[total - part]
    return counts[k]
