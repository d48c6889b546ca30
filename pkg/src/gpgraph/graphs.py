"""Undirected simple graphs with bitset adjacency.

Adjacency rows are Python ints used as bitsets: bit j of rows[i] is set iff
{i, j} is an edge. The dominant workloads (completeness scans, clique
probes over unions of cliques) are word-parallel this way.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .groups import IndexOutOfRange


class SimpleGraph:
    """Immutable simple graph; labels map vertices back to group elements."""

    __slots__ = ("v", "rows", "labels")

    def __init__(self, v: int, rows: Sequence[int], labels: Optional[Sequence[int]] = None):
        rows = list(rows)
        if len(rows) != v:
            raise ValueError(f"expected {v} adjacency rows, got {len(rows)}")
        labels = list(labels) if labels is not None else list(range(v))
        if len(labels) != v:
            raise ValueError(f"expected {v} labels, got {len(labels)}")
        full = (1 << v) - 1
        cols = [0] * v
        for i, row in enumerate(rows):
            if row >> i & 1:
                raise ValueError(f"self-loop at vertex {i}")
            if row & ~full:
                raise ValueError(f"adjacency row {i} references vertices >= {v}")
            r = row
            while r:
                j = (r & -r).bit_length() - 1
                cols[j] |= 1 << i
                r &= r - 1
        if cols != rows:
            raise ValueError("adjacency is not symmetric")
        self.v = v
        self.rows = rows
        self.labels = labels

    @classmethod
    def from_edges(cls, v: int, edges: Iterable[tuple[int, int]],
                   labels: Optional[Sequence[int]] = None) -> "SimpleGraph":
        rows = [0] * v
        for a, b in edges:
            if not (0 <= a < v and 0 <= b < v):
                raise IndexOutOfRange(max(a, b), v)
            if a == b:
                raise ValueError(f"self-loop at vertex {a}")
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return cls(v, rows, labels)

    def __repr__(self):
        return f"SimpleGraph(v={self.v}, e={self.edge_count()})"

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.rows[a] >> b & 1)

    def degree(self, i: int) -> int:
        return self.rows[i].bit_count()

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges (a, b) with a < b, sorted."""
        out = []
        for a in range(self.v):
            r = self.rows[a] >> (a + 1) << (a + 1)
            while r:
                b = (r & -r).bit_length() - 1
                out.append((a, b))
                r &= r - 1
        return out

    def adjacency_lists(self) -> list[list[int]]:
        out = []
        for r in self.rows:
            nbrs = []
            while r:
                j = (r & -r).bit_length() - 1
                nbrs.append(j)
                r &= r - 1
            out.append(nbrs)
        return out

    def is_complete(self) -> bool:
        """True iff every pair of distinct vertices is adjacent (v <= 1: True)."""
        if self.v <= 1:
            return True
        full = (1 << self.v) - 1
        return all(self.rows[i] == full ^ (1 << i) for i in range(self.v))

    def connected_components(self) -> list[list[int]]:
        """Partition into maximal connected vertex sets, ordered by minimum vertex."""
        unseen = (1 << self.v) - 1
        comps = []
        while unseen:
            start = (unseen & -unseen).bit_length() - 1
            comp = 1 << start
            frontier = comp
            while frontier:
                reach = 0
                f = frontier
                while f:
                    i = (f & -f).bit_length() - 1
                    reach |= self.rows[i]
                    f &= f - 1
                frontier = reach & ~comp
                comp |= frontier
            unseen &= ~comp
            members = []
            c = comp
            while c:
                i = (c & -c).bit_length() - 1
                members.append(i)
                c &= c - 1
            comps.append(members)
        return comps

    def induced_subgraph(self, vertices: Iterable[int]) -> "SimpleGraph":
        """Subgraph on the given vertices (sorted), labels inherited."""
        verts = sorted(set(vertices))
        for x in verts:
            if not 0 <= x < self.v:
                raise IndexOutOfRange(x, self.v)
        pos = {x: i for i, x in enumerate(verts)}
        rows = [0] * len(verts)
        for i, x in enumerate(verts):
            r = self.rows[x]
            while r:
                y = (r & -r).bit_length() - 1
                r &= r - 1
                j = pos.get(y)
                if j is not None:
                    rows[i] |= 1 << j
        return SimpleGraph(len(verts), rows, [self.labels[x] for x in verts])

    def contains_k5_clique(self) -> Optional[list[int]]:
        """Some 5-clique as a sorted vertex list, or None.

        Exact search over degree >= 4 vertices in ascending index order, so
        the witness is reproducible across runs.
        """
        cand0 = 0
        for i in range(self.v):
            if self.rows[i].bit_count() >= 4:
                cand0 |= 1 << i

        def extend(chosen: list[int], cand: int, need: int) -> Optional[list[int]]:
            if need == 0:
                return chosen
            if cand.bit_count() < need:
                return None
            while cand:
                u = (cand & -cand).bit_length() - 1
                cand &= cand - 1
                found = extend(chosen + [u], cand & self.rows[u], need - 1)
                if found is not None:
                    return found
            return None

        return extend([], cand0, 5)

    # -- text formats ------------------------------------------------------

    def to_dot(self) -> str:
        """DOT `graph` document; vertex names are labels, edges emitted once."""
        lines = ["graph G {"]
        for i in range(self.v):
            lines.append(f"  {self.labels[i]};")
        for a, b in self.edges():
            lines.append(f"  {self.labels[a]} -- {self.labels[b]};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_edge_list(self) -> str:
        """Plain interop format: vertex count on line 1, then `a b` pairs."""
        lines = [str(self.v)]
        lines.extend(f"{a} {b}" for a, b in self.edges())
        return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> SimpleGraph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty edge-list text")
    v = int(lines[0])
    edges = []
    for ln in lines[1:]:
        a, b = ln.split()
        edges.append((int(a), int(b)))
    return SimpleGraph.from_edges(v, edges)
