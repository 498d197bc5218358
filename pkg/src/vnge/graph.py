"""Simple undirected graphs and their matrix representations.

Nodes are dense 0-based integers. Edges are stored once as (u, v) with
u < v. Graph values are immutable; "mutation" builds a new graph, so
every operation here is safe for concurrent readers.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import (
    EdgeExistsError,
    EdgeListFormatError,
    EmptyEdgeSetError,
    IsolatedNodeError,
    NodeIndexError,
    SelfLoopError,
)


class DensityKind(Enum):
    """Which trace-one matrix represents the graph.

    LAPLACIAN scales the combinatorial Laplacian by its trace 2m;
    NORMALIZED scales the symmetric normalized Laplacian by its trace n.
    """

    LAPLACIAN = "laplacian"
    NORMALIZED = "normalized"


def canonical_edge(u: int, v: int) -> tuple[int, int]:
    if u == v:
        raise SelfLoopError(f"self-loop ({u}, {u}) not allowed")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]
    neighbors: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, u: int) -> int:
        return len(self.neighbors[u])

    def degrees(self) -> np.ndarray:
        return np.array([len(nb) for nb in self.neighbors], dtype=np.int64)

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self.edges

    def add_edge(self, u: int, v: int) -> "Graph":
        e = canonical_edge(u, v)
        _check_index(e[0], self.n)
        _check_index(e[1], self.n)
        if e in self.edges:
            raise EdgeExistsError(f"edge {e} already present")
        return _build(self.n, self.edges | {e})

    def remove_edge(self, u: int, v: int) -> "Graph":
        e = canonical_edge(u, v)
        if e not in self.edges:
            raise KeyError(f"edge {e} not present")
        return _build(self.n, self.edges - {e})

    def add_node(self) -> "Graph":
        return _build(self.n + 1, self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def _check_index(u: int, n: int) -> None:
    if not 0 <= u < n:
        raise NodeIndexError(f"node {u} outside 0..{n - 1}")


def _build(n: int, edges: frozenset[tuple[int, int]]) -> Graph:
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    return Graph(n, edges, tuple(tuple(sorted(b)) for b in nbrs))


def from_edge_list(n: int, pairs) -> Graph:
    """Build a graph from (u, v) pairs, deduplicating and canonicalizing."""
    edges = set()
    for u, v in pairs:
        e = canonical_edge(u, v)
        _check_index(e[0], n)
        _check_index(e[1], n)
        edges.add(e)
    return _build(n, frozenset(edges))


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=np.float64)
    for u, v in g.edges:
        a[u, v] = 1.0
        a[v, u] = 1.0
    return a


def laplacian(g: Graph) -> np.ndarray:
    """Combinatorial Laplacian L = D - A; integer assembly keeps row sums exactly 0."""
    lap = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges:
        lap[u, v] -= 1
        lap[v, u] -= 1
        lap[u, u] += 1
        lap[v, v] += 1
    return lap.astype(np.float64)


def normalized_laplacian(g: Graph) -> np.ndarray:
    """Symmetric normalized Laplacian D^{-1/2} L D^{-1/2}.

    Rejects degree-0 nodes: they would put a 0 on the diagonal and break
    the trace-n normalization used by the density matrix.
    """
    deg = g.degrees()
    if np.any(deg == 0):
        bad = int(np.argmax(deg == 0))
        raise IsolatedNodeError(f"node {bad} has degree 0")
    inv_sqrt = 1.0 / np.sqrt(deg.astype(np.float64))
    nl = np.eye(g.n)
    for u, v in g.edges:
        w = -inv_sqrt[u] * inv_sqrt[v]
        nl[u, v] = w
        nl[v, u] = w
    return nl


def density_matrix(g: Graph, kind: DensityKind) -> np.ndarray:
    """Trace-one matrix for the graph: L/(2m) or (normalized L)/n."""
    if kind is DensityKind.LAPLACIAN:
        if g.m == 0:
            raise EmptyEdgeSetError("Laplacian density matrix needs m >= 1")
        return laplacian(g) / (2.0 * g.m)
    return normalized_laplacian(g) / float(g.n)


def geodesic_distances(g: Graph) -> np.ndarray:
    """All-pairs hop counts via BFS from every node; inf marks unreachable pairs."""
    dist = np.full((g.n, g.n), np.inf)
    for s in range(g.n):
        dist[s, s] = 0.0
        q = deque([s])
        while q:
            u = q.popleft()
            du = dist[s, u]
            for v in g.neighbors[u]:
                if np.isinf(dist[s, v]):
                    dist[s, v] = du + 1.0
                    q.append(v)
    return dist


def complement_edges(g: Graph) -> list[tuple[int, int]]:
    """Absent node pairs, in lexicographic order."""
    return [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if (u, v) not in g.edges
    ]


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = [False] * g.n
    seen[0] = True
    q = deque([0])
    count = 1
    while q:
        u = q.popleft()
        for v in g.neighbors[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                q.append(v)
    return count == g.n


def read_edge_list(path) -> Graph:
    """Parse the text edge-list format.

    One `u v` pair per line, `#` starts a comment, and an optional
    `n <count>` header fixes the node count (otherwise max index + 1).
    """
    pairs = []
    n_header = None
    max_idx = -1
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if parts[0] == "n" and len(parts) == 2 and n_header is None and not pairs:
                try:
                    n_header = int(parts[1])
                except ValueError:
                    raise EdgeListFormatError(f"line {lineno}: bad node count {parts[1]!r}")
                continue
            if len(parts) != 2:
                raise EdgeListFormatError(f"line {lineno}: expected 'u v', got {line!r}")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise EdgeListFormatError(f"line {lineno}: non-integer endpoint in {line!r}")
            if u == v:
                raise EdgeListFormatError(f"line {lineno}: self-loop ({u}, {v})")
            if u < 0 or v < 0:
                raise EdgeListFormatError(f"line {lineno}: negative node index in {line!r}")
            pairs.append((u, v))
            max_idx = max(max_idx, u, v)
    n = n_header if n_header is not None else max_idx + 1
    if n < 0:
        n = 0
    if max_idx >= n:
        raise EdgeListFormatError(f"node {max_idx} exceeds declared count n={n}")
    return from_edge_list(n, pairs)


def write_edge_list(g: Graph, path, header_comments=()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for comment in header_comments:
            fh.write(f"# {comment}\n")
        fh.write(f"n {g.n}\n")
        for u, v in g.sorted_edges():
            fh.write(f"{u} {v}\n")
