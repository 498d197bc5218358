"""Structural graph statistics and correlation coefficients."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.stats import rankdata

from .errors import DisconnectedError, EmptyEdgeSetError, VngeError
from .generators import rng_stream, ring_lattice
from .graph import Graph, from_edge_list, geodesic_distances, is_connected


class NoPairsError(VngeError):
    """No reachable node pair; the average path length is undefined."""


class LengthMismatchError(VngeError):
    """Paired value lists must have equal length >= 2."""


class ZeroVarianceError(VngeError):
    """Pearson correlation is undefined for a constant list."""


@dataclass(frozen=True)
class StatVector:
    avg_path_length: float
    dispersion: float
    clustering: float


def avg_shortest_path_length(g: Graph) -> float:
    """Mean hop count over unordered reachable pairs.

    Unreachable pairs are excluded rather than mapped to a finite stand-in,
    so the statistic stays meaningful on disconnected snapshots.
    """
    dist = geodesic_distances(g)
    iu = np.triu_indices(g.n, k=1)
    vals = dist[iu]
    finite = vals[np.isfinite(vals)]
    if finite.size == 0:
        raise NoPairsError("no reachable pair of distinct nodes")
    return float(finite.mean())


def index_of_dispersion(g: Graph) -> float:
    """Variance-to-mean ratio of the degree sequence (population variance)."""
    deg = g.degrees().astype(np.float64)
    mean = deg.mean() if g.n else 0.0
    if mean == 0.0:
        raise EmptyEdgeSetError("mean degree is zero")
    return float(deg.var() / mean)


def avg_clustering_coefficient(g: Graph) -> float:
    """Mean local clustering; nodes of degree < 2 contribute 0."""
    if g.n == 0:
        return 0.0
    total = 0.0
    nbr_sets = [set(nb) for nb in g.neighbors]
    for v in range(g.n):
        d = g.degree(v)
        if d < 2:
            continue
        nb = g.neighbors[v]
        links = sum(
            1
            for i in range(d)
            for j in range(i + 1, d)
            if nb[j] in nbr_sets[nb[i]]
        )
        total += 2.0 * links / (d * (d - 1))
    return total / g.n


def _double_edge_swaps(g: Graph, swaps: int, rng: np.random.Generator) -> Graph:
    """Degree-preserving randomization: repeat (a,b),(c,d) -> (a,d),(c,b).

    Swaps producing self-loops or duplicates are rejected; attempts are
    capped at 100 per requested swap so near-complete graphs terminate.
    """
    edges = list(g.edges)
    edge_set = set(edges)
    accepted = 0
    attempts = 0
    max_attempts = max(100 * swaps, 100)
    while accepted < swaps and attempts < max_attempts:
        attempts += 1
        i, j = rng.integers(len(edges), size=2)
        if i == j:
            continue
        a, b = edges[i]
        c, d = edges[j]
        if len({a, b, c, d}) < 4:
            continue
        e1 = (a, d) if a < d else (d, a)
        e2 = (c, b) if c < b else (b, c)
        if e1 in edge_set or e2 in edge_set:
            continue
        edge_set.remove(edges[i])
        edge_set.remove(edges[j])
        edge_set.add(e1)
        edge_set.add(e2)
        edges[i] = e1
        edges[j] = e2
        accepted += 1
    return from_edge_list(g.n, edges)


def small_worldness_omega(
    g: Graph,
    seed: int,
    n_random_refs: int = 20,
    swaps_per_edge: int = 10,
) -> float:
    """Telesford-style omega: L_rand / L - C / C_latt.

    Negative values indicate a lattice-like graph, positive values a
    random-like graph, near zero a small world. The random reference is
    the mean path length over degree-preserving edge swaps; the lattice
    reference is the ring lattice with matched n and the even k nearest
    2m/n.
    """
    if not is_connected(g):
        raise DisconnectedError("omega needs a connected graph")
    path_len = avg_shortest_path_length(g)
    clustering = avg_clustering_coefficient(g)

    k_latt = 2 * int(round(g.m / g.n))
    if k_latt < 2:
        k_latt = 2
    if k_latt >= g.n:
        k_latt = g.n - 1 if (g.n - 1) % 2 == 0 else g.n - 2
    latt_clustering = avg_clustering_coefficient(ring_lattice(g.n, k_latt))
    if latt_clustering == 0.0:
        raise ZeroVarianceError(
            f"lattice reference k={k_latt} has no triangles; omega undefined"
        )

    rand_lengths = []
    for i in range(n_random_refs):
        ref = _double_edge_swaps(g, swaps_per_edge * g.m, rng_stream(seed, i))
        rand_lengths.append(avg_shortest_path_length(ref))
    return float(np.mean(rand_lengths)) / path_len - clustering / latt_clustering


def pearson(xs, ys) -> float:
    """Product-moment correlation coefficient."""
    x = np.asarray(xs, dtype=np.float64)
    y = np.asarray(ys, dtype=np.float64)
    if x.shape != y.shape or x.ndim != 1 or len(x) < 2:
        raise LengthMismatchError(f"need equal-length lists >= 2, got {x.shape} vs {y.shape}")
    xc = x - x.mean()
    yc = y - y.mean()
    sx = np.sqrt(np.sum(xc * xc))
    sy = np.sqrt(np.sum(yc * yc))
    if sx == 0.0 or sy == 0.0:
        raise ZeroVarianceError("pearson undefined for a constant list")
    return float(np.sum(xc * yc) / (sx * sy))


def spearman(xs, ys) -> float:
    """Rank correlation: pearson applied to average ranks (ties share the mean)."""
    x = np.asarray(xs, dtype=np.float64)
    y = np.asarray(ys, dtype=np.float64)
    if x.shape != y.shape or x.ndim != 1 or len(x) < 2:
        raise LengthMismatchError(f"need equal-length lists >= 2, got {x.shape} vs {y.shape}")
    return pearson(rankdata(x, method="average"), rankdata(y, method="average"))


def stat_vector(g: Graph) -> StatVector:
    return StatVector(
        avg_path_length=avg_shortest_path_length(g),
        dispersion=index_of_dispersion(g),
        clustering=avg_clustering_coefficient(g),
    )
