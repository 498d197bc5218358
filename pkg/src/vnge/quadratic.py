"""Quadratic entropy approximations and closed-form single-edge increments.

Both approximations are the canonical 1 - tr(rho^2), which reduces to pure
degree statistics:

    Laplacian:   1 - 1/(2m) - (sum_v d_v^2) / (4 m^2)
    normalized:  1 - 1/n - (2/n^2) * sum_{edges (u,v)} 1/(d_u d_v)

The normalized form counts each undirected edge once and carries the
factor 2; that is the convention under which it equals 1 - tr(rho^2).
All increment formulas here are exact identities for these expressions,
not approximations of the increment.
"""

from __future__ import annotations

import numpy as np

from .errors import (
    EdgeExistsError,
    EmptyEdgeSetError,
    InconsistentStateError,
    IsolatedNodeError,
    NodeIndexError,
)
from .graph import Graph, canonical_edge

QUAD_CONVENTION = "1 - tr(rho^2)"

_CONSISTENCY_TOL = 1e-9


def approx_entropy_laplacian(g: Graph) -> float:
    """Quadratic approximation of the Laplacian entropy."""
    if g.m == 0:
        raise EmptyEdgeSetError("approximation needs m >= 1")
    m = float(g.m)
    sum_d2 = float(np.sum(g.degrees() ** 2))
    return 1.0 - 1.0 / (2.0 * m) - sum_d2 / (4.0 * m * m)


def approx_entropy_normalized(g: Graph) -> float:
    """Quadratic approximation of the normalized Laplacian entropy."""
    deg = g.degrees()
    if np.any(deg == 0):
        raise IsolatedNodeError("approximation undefined with degree-0 nodes")
    n = float(g.n)
    edge_sum = sum(1.0 / float(deg[u] * deg[v]) for u, v in g.edges)
    return 1.0 - 1.0 / n - (2.0 / (n * n)) * edge_sum


def _check_candidate(g: Graph, x: int, y: int) -> tuple[int, int]:
    e = canonical_edge(x, y)
    if e[0] < 0 or e[1] >= g.n:
        raise NodeIndexError(f"pair {e} outside 0..{g.n - 1}")
    if e in g.edges:
        raise EdgeExistsError(f"edge {e} already present")
    return e


def delta_approx_laplacian(g: Graph, x: int, y: int) -> float:
    """Increment of the Laplacian approximation when edge (x, y) is added.

    Closed form in the current edge count m, the endpoint degrees, and the
    current approximation value; agrees with the direct difference to
    rounding error. Only the -(d_x + d_y) term depends on the pair, so the
    best edge under this score always joins minimum-degree-sum endpoints.
    """
    _check_candidate(g, x, y)
    if g.m == 0:
        raise EmptyEdgeSetError("increment needs m >= 1")
    m = float(g.m)
    dx = float(g.degree(x))
    dy = float(g.degree(y))
    s = approx_entropy_laplacian(g)
    m1sq = (m + 1.0) ** 2
    return -(dx + dy) / (2.0 * m1sq) + ((2.0 * m + 1.0) * (1.0 - s) - 1.0) / m1sq


def delta_approx_normalized(g: Graph, x: int, y: int) -> float:
    """Increment of the normalized approximation when edge (x, y) is added.

    The first two terms reward endpoints whose neighborhoods have low
    harmonic-mean degree; the last term penalizes joining two high-degree
    nodes and pulls in the opposite direction of the Laplacian rule.
    """
    e = _check_candidate(g, x, y)
    x, y = e
    dx = g.degree(x)
    dy = g.degree(y)
    if dx == 0 or dy == 0:
        raise IsolatedNodeError("both endpoints need degree >= 1")
    sx = sum(1.0 / g.degree(u) for u in g.neighbors[x])
    sy = sum(1.0 / g.degree(u) for u in g.neighbors[y])
    n2 = float(g.n) ** 2
    return (2.0 / n2) * (
        sx / (dx * (dx + 1.0))
        + sy / (dy * (dy + 1.0))
        - 1.0 / ((dx + 1.0) * (dy + 1.0))
    )


class GrowthSums:
    """Mutable degree-statistic cache for growth loops.

    Tracks the edge count, sum of squared degrees, the normalized edge sum
    sum_{(u,v) in E} 1/(d_u d_v), and per-node reciprocal-degree neighbor
    sums, so each insertion updates in O(d_x + d_y) instead of O(n^2).
    Owned by a single growth loop; never shared.
    """

    def __init__(self, g: Graph):
        self.n = g.n
        self.m = g.m
        self.deg = [g.degree(u) for u in range(g.n)]
        self.adj = [set(nb) for nb in g.neighbors]
        self.sum_d2 = float(sum(d * d for d in self.deg))
        self.edge_inv_prod = sum(1.0 / (self.deg[u] * self.deg[v]) for u, v in g.edges)
        self.nbr_inv_deg = [
            sum(1.0 / self.deg[u] for u in nb) for nb in g.neighbors
        ]

    def add_node(self) -> int:
        """Append an isolated node and return its index."""
        self.deg.append(0)
        self.adj.append(set())
        self.nbr_inv_deg.append(0.0)
        self.n += 1
        return self.n - 1

    def add_edge(self, x: int, y: int) -> None:
        if x == y or y in self.adj[x]:
            raise EdgeExistsError(f"cannot insert ({x}, {y})")
        dx, dy = self.deg[x], self.deg[y]
        sx, sy = self.nbr_inv_deg[x], self.nbr_inv_deg[y]

        self.sum_d2 += 2.0 * (dx + dy) + 2.0
        self.m += 1
        term_x = sx / (dx * (dx + 1.0)) if dx else 0.0
        term_y = sy / (dy * (dy + 1.0)) if dy else 0.0
        self.edge_inv_prod += (
            -term_x - term_y + 1.0 / ((dx + 1.0) * (dy + 1.0))
        )

        # Neighbors of x see 1/d_x become 1/(d_x + 1); likewise for y.
        if dx:
            shift = 1.0 / (dx + 1.0) - 1.0 / dx
            for u in self.adj[x]:
                self.nbr_inv_deg[u] += shift
        if dy:
            shift = 1.0 / (dy + 1.0) - 1.0 / dy
            for u in self.adj[y]:
                self.nbr_inv_deg[u] += shift
        self.nbr_inv_deg[x] = sx + 1.0 / (dy + 1.0)
        self.nbr_inv_deg[y] = sy + 1.0 / (dx + 1.0)

        self.adj[x].add(y)
        self.adj[y].add(x)
        self.deg[x] = dx + 1
        self.deg[y] = dy + 1

    def approx_laplacian(self) -> float:
        if self.m == 0:
            raise EmptyEdgeSetError("approximation needs m >= 1")
        m = float(self.m)
        return 1.0 - 1.0 / (2.0 * m) - self.sum_d2 / (4.0 * m * m)

    def approx_normalized(self) -> float:
        if any(d == 0 for d in self.deg):
            raise IsolatedNodeError("approximation undefined with degree-0 nodes")
        n = float(self.n)
        return 1.0 - 1.0 / n - (2.0 / (n * n)) * self.edge_inv_prod

    def delta_laplacian(self, x: int, y: int) -> float:
        m = float(self.m)
        s = self.approx_laplacian()
        m1sq = (m + 1.0) ** 2
        return (
            -(self.deg[x] + self.deg[y]) / (2.0 * m1sq)
            + ((2.0 * m + 1.0) * (1.0 - s) - 1.0) / m1sq
        )

    def delta_normalized(self, x: int, y: int) -> float:
        dx, dy = self.deg[x], self.deg[y]
        if dx == 0 or dy == 0:
            raise IsolatedNodeError("both endpoints need degree >= 1")
        n2 = float(self.n) ** 2
        return (2.0 / n2) * (
            self.nbr_inv_deg[x] / (dx * (dx + 1.0))
            + self.nbr_inv_deg[y] / (dy * (dy + 1.0))
            - 1.0 / ((dx + 1.0) * (dy + 1.0))
        )

    def laplacian_after_leaf(self, v: int) -> float:
        """Laplacian approximation after attaching a brand-new node to v."""
        m1 = float(self.m) + 1.0
        sum_d2 = self.sum_d2 + 2.0 * self.deg[v] + 2.0
        return 1.0 - 1.0 / (2.0 * m1) - sum_d2 / (4.0 * m1 * m1)

    def normalized_after_leaf(self, v: int) -> float:
        """Normalized approximation after attaching a brand-new node to v.

        The new node is scored only in its attached state, where its degree
        is 1 and the normalized matrix is well-defined.
        """
        dv = self.deg[v]
        if dv == 0:
            raise IsolatedNodeError("attachment target must have degree >= 1")
        n1 = float(self.n) + 1.0
        edge_sum = (
            self.edge_inv_prod
            - self.nbr_inv_deg[v] / (dv * (dv + 1.0))
            + 1.0 / (dv + 1.0)
        )
        return 1.0 - 1.0 / n1 - (2.0 / (n1 * n1)) * edge_sum

    def verify(self) -> None:
        """Debug assertion: cached sums must match a fresh recomputation."""
        sum_d2 = float(sum(d * d for d in self.deg))
        edge_sum = sum(
            1.0 / (self.deg[u] * self.deg[v])
            for u in range(self.n)
            for v in self.adj[u]
            if u < v
        )
        m = sum(len(a) for a in self.adj) // 2
        nbr = [
            sum(1.0 / self.deg[u] for u in self.adj[v]) for v in range(self.n)
        ]
        if (
            m != self.m
            or abs(sum_d2 - self.sum_d2) > _CONSISTENCY_TOL
            or abs(edge_sum - self.edge_inv_prod) > _CONSISTENCY_TOL
            or any(abs(a - b) > _CONSISTENCY_TOL for a, b in zip(nbr, self.nbr_inv_deg))
        ):
            raise InconsistentStateError("cached sums drifted from the graph")
