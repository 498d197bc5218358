"""Seeded random and deterministic graph constructors.

All randomness flows through PCG64 generators derived from a master seed
and an index path, so any trial of any experiment can be replayed in
isolation: stream(seed, i) is independent of stream(seed, j) for i != j.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import VngeError
from .graph import Graph, from_edge_list


class BadParamError(VngeError):
    """Model parameters outside their documented range."""


def rng_stream(master_seed: int, *path: int) -> np.random.Generator:
    """Independent, replayable generator for (master_seed, index path)."""
    return np.random.Generator(
        np.random.PCG64(np.random.SeedSequence(master_seed, spawn_key=tuple(path)))
    )


@dataclass(frozen=True)
class ERParams:
    n: int
    p: float

    def validate(self) -> None:
        if self.n < 1 or not 0.0 <= self.p <= 1.0:
            raise BadParamError(f"bad ER params n={self.n}, p={self.p}")


@dataclass(frozen=True)
class WSParams:
    n: int
    k: int
    p: float

    def validate(self) -> None:
        if self.k % 2 != 0:
            raise BadParamError(f"WS needs even k, got {self.k}")
        if not 2 <= self.k < self.n or not 0.0 <= self.p <= 1.0:
            raise BadParamError(f"bad WS params n={self.n}, k={self.k}, p={self.p}")


@dataclass(frozen=True)
class BAParams:
    n: int
    m: int

    def validate(self) -> None:
        if not 1 <= self.m < self.n:
            raise BadParamError(f"bad BA params n={self.n}, m={self.m}")


ModelParams = ERParams | WSParams | BAParams


def erdos_renyi(n: int, p: float, rng: np.random.Generator) -> Graph:
    """Each of the n(n-1)/2 pairs is included independently with probability p."""
    ERParams(n, p).validate()
    rows, cols = np.triu_indices(n, k=1)
    mask = rng.random(len(rows)) < p
    return from_edge_list(n, zip(rows[mask].tolist(), cols[mask].tolist()))


def ring_lattice(n: int, k: int) -> Graph:
    """Ring where each node connects to its k nearest neighbors (k/2 per side)."""
    WSParams(n, k, 0.0).validate()
    pairs = [(i, (i + j) % n) for j in range(1, k // 2 + 1) for i in range(n)]
    g = from_edge_list(n, pairs)
    assert g.m == n * k // 2
    return g


def watts_strogatz(n: int, k: int, p: float, rng: np.random.Generator) -> Graph:
    """Ring lattice with each original edge rewired with probability p.

    Edges are visited offset-by-offset in node order; a rewired edge keeps
    its near endpoint and moves the far one to a uniformly drawn node that
    is neither the near endpoint nor already adjacent to it. The edge count
    stays exactly nk/2.
    """
    WSParams(n, k, p).validate()
    adj: list[set[int]] = [set() for _ in range(n)]
    for j in range(1, k // 2 + 1):
        for i in range(n):
            v = (i + j) % n
            adj[i].add(v)
            adj[v].add(i)
    for j in range(1, k // 2 + 1):
        for i in range(n):
            if rng.random() >= p:
                continue
            old = (i + j) % n
            if len(adj[i]) >= n - 1:
                continue  # node saturated, nothing valid to rewire to
            while True:
                w = int(rng.integers(n))
                if w != i and w not in adj[i]:
                    break
            adj[i].remove(old)
            adj[old].remove(i)
            adj[i].add(w)
            adj[w].add(i)
    g = from_edge_list(n, ((u, v) for u in range(n) for v in adj[u] if u < v))
    assert g.m == n * k // 2
    return g


def barabasi_albert(n: int, m: int, rng: np.random.Generator) -> Graph:
    """Preferential attachment from a K_{m+1} seed.

    Each new node attaches to m distinct existing nodes drawn with
    probability proportional to current degree (redraw on duplicates).
    """
    BAParams(n, m).validate()
    pairs = [(u, v) for u in range(m + 1) for v in range(u + 1, m + 1)]
    # One entry per endpoint of every edge: sampling it uniformly is
    # degree-proportional sampling.
    repeated = [u for pair in pairs for u in pair]
    for w in range(m + 1, n):
        targets: set[int] = set()
        while len(targets) < m:
            t = repeated[int(rng.integers(len(repeated)))]
            targets.add(t)
        for t in sorted(targets):
            pairs.append((t, w))
            repeated.append(t)
            repeated.append(w)
    return from_edge_list(n, pairs)


def path_graph(n: int) -> Graph:
    if n < 1:
        raise BadParamError("path needs n >= 1")
    return from_edge_list(n, ((i, i + 1) for i in range(n - 1)))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise BadParamError("complete graph needs n >= 1")
    return from_edge_list(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def triangle_seed() -> Graph:
    """K3, the seed used by the node-growth experiments."""
    return complete_graph(3)


def generate(params: ModelParams, rng: np.random.Generator) -> Graph:
    """Dispatch on the parameter type."""
    if isinstance(params, ERParams):
        return erdos_renyi(params.n, params.p, rng)
    if isinstance(params, WSParams):
        return watts_strogatz(params.n, params.k, params.p, rng)
    if isinstance(params, BAParams):
        return barabasi_albert(params.n, params.m, rng)
    raise BadParamError(f"unknown model params {params!r}")
