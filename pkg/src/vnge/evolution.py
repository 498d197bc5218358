"""Entropy-driven growth models, edge heuristics, and predictability errors.

Growth adds the edge (or node attachment) whose entropy increment is
optimal under the selected variant; ties are broken uniformly from a
seeded stream and their size is logged, since for the approximate
Laplacian score every minimum-degree-sum pair is equally good.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import (
    DegenerateRatioError,
    EmptyEdgeSetError,
    GraphCompleteError,
    TooFewCandidatesError,
)
from .generators import BadParamError, ModelParams, generate, rng_stream, triangle_seed
from .graph import (
    DensityKind,
    Graph,
    adjacency_matrix,
    complement_edges,
    geodesic_distances,
    laplacian,
)
from .netstats import StatVector, stat_vector
from .quadratic import (
    GrowthSums,
    approx_entropy_laplacian,
    approx_entropy_normalized,
)
from .spectral import entropies_from_stacked_eigenvalues, von_neumann_entropy

# Increments closer than this are treated as a tie. Approximate deltas tie
# bit-exactly; exact deltas of isomorphic candidates differ only by
# eigensolver noise well below this.
TIE_TOL = 1e-12

_EIG_CHUNK = 128


class Objective(Enum):
    MAXIMIZE = "max"
    MINIMIZE = "min"


class EntropyVariant(Enum):
    EXACT_LAPLACIAN = "le"
    APPROX_LAPLACIAN = "ale"
    EXACT_NORMALIZED = "nle"
    APPROX_NORMALIZED = "anle"

    @property
    def kind(self) -> DensityKind:
        if self in (EntropyVariant.EXACT_LAPLACIAN, EntropyVariant.APPROX_LAPLACIAN):
            return DensityKind.LAPLACIAN
        return DensityKind.NORMALIZED

    @property
    def exact(self) -> bool:
        return self in (EntropyVariant.EXACT_LAPLACIAN, EntropyVariant.EXACT_NORMALIZED)


class Heuristic(Enum):
    MIN_DEGREE_SUM = "min-degree-sum"
    MAX_GEODESIC = "max-geodesic"
    MIN_SUM_MAX_GEO = "min-sum-max-geo"
    RANDOM = "random"


@dataclass(frozen=True)
class AddEdgeAction:
    u: int
    v: int


@dataclass(frozen=True)
class AddNodeAction:
    node: int
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class GrowthStep:
    graph: Graph
    entropy: float
    action: AddEdgeAction | AddNodeAction | None
    tie_count: int


@dataclass(frozen=True)
class GrowthTrace:
    variant: EntropyVariant
    objective: Objective
    steps: tuple[GrowthStep, ...]


@dataclass(frozen=True)
class PredictabilityPair:
    """Predictability errors; a side is None when its denominator was
    zero or negative (the ratio would be meaningless, not small)."""

    prd_max: float | None
    prd_min: float | None


def entropy_value(g: Graph, variant: EntropyVariant) -> float:
    if variant is EntropyVariant.EXACT_LAPLACIAN:
        return von_neumann_entropy(g, DensityKind.LAPLACIAN)
    if variant is EntropyVariant.EXACT_NORMALIZED:
        return von_neumann_entropy(g, DensityKind.NORMALIZED)
    if variant is EntropyVariant.APPROX_LAPLACIAN:
        return approx_entropy_laplacian(g)
    return approx_entropy_normalized(g)


def exact_entropy_increments(
    g: Graph, kind: DensityKind, candidates: list[tuple[int, int]] | None = None
) -> tuple[float, np.ndarray]:
    """Exact entropy increment for every candidate absent edge.

    Candidate matrices are eigendecomposed in stacked chunks, which keeps
    full sweeps over thousands of candidates inside vectorized LAPACK calls.
    """
    if candidates is None:
        candidates = complement_edges(g)
    base = von_neumann_entropy(g, kind)
    if not candidates:
        return base, np.empty(0)
    n = g.n
    us = np.array([c[0] for c in candidates])
    vs = np.array([c[1] for c in candidates])
    entropies = np.empty(len(candidates))
    if kind is DensityKind.LAPLACIAN:
        lap = laplacian(g)
        scale = 1.0 / (2.0 * (g.m + 1))
        for lo in range(0, len(candidates), _EIG_CHUNK):
            hi = min(lo + _EIG_CHUNK, len(candidates))
            cu, cv = us[lo:hi], vs[lo:hi]
            idx = np.arange(hi - lo)
            stack = np.broadcast_to(lap, (hi - lo, n, n)).copy()
            stack[idx, cu, cu] += 1.0
            stack[idx, cv, cv] += 1.0
            stack[idx, cu, cv] -= 1.0
            stack[idx, cv, cu] -= 1.0
            vals = np.linalg.eigvalsh(stack * scale)
            entropies[lo:hi] = entropies_from_stacked_eigenvalues(vals)
    else:
        adj = adjacency_matrix(g)
        deg = g.degrees().astype(np.float64)
        diag = np.arange(n)
        for lo in range(0, len(candidates), _EIG_CHUNK):
            hi = min(lo + _EIG_CHUNK, len(candidates))
            cu, cv = us[lo:hi], vs[lo:hi]
            idx = np.arange(hi - lo)
            dstack = np.broadcast_to(deg, (hi - lo, n)).copy()
            dstack[idx, cu] += 1.0
            dstack[idx, cv] += 1.0
            inv = 1.0 / np.sqrt(dstack)
            astack = np.broadcast_to(adj, (hi - lo, n, n)).copy()
            astack[idx, cu, cv] = 1.0
            astack[idx, cv, cu] = 1.0
            nl = -astack * inv[:, :, None] * inv[:, None, :]
            nl[:, diag, diag] = 1.0
            vals = np.linalg.eigvalsh(nl / float(n))
            entropies[lo:hi] = entropies_from_stacked_eigenvalues(vals)
    return base, entropies - base


def _tie_set(values: np.ndarray, objective: Objective) -> tuple[np.ndarray, float]:
    opt = values.max() if objective is Objective.MAXIMIZE else values.min()
    return np.flatnonzero(np.abs(values - opt) <= TIE_TOL), float(opt)


def _candidate_increments(
    g: Graph,
    sums: GrowthSums | None,
    variant: EntropyVariant,
    candidates: list[tuple[int, int]],
) -> np.ndarray:
    if variant.exact:
        _, incs = exact_entropy_increments(g, variant.kind, candidates)
        return incs
    assert sums is not None
    if variant is EntropyVariant.APPROX_LAPLACIAN:
        return np.array([sums.delta_laplacian(u, v) for u, v in candidates])
    return np.array([sums.delta_normalized(u, v) for u, v in candidates])


def edge_growth(
    seed_graph: Graph,
    steps: int,
    objective: Objective,
    variant: EntropyVariant,
    seed: int,
) -> GrowthTrace:
    """Greedy edge addition for a fixed node set.

    Every absent edge is scored each step; the optimal one is added, with
    ties drawn uniformly from the seeded stream.
    """
    total_absent = seed_graph.n * (seed_graph.n - 1) // 2 - seed_graph.m
    if steps > total_absent:
        raise GraphCompleteError(
            f"only {total_absent} absent edges, cannot grow {steps} steps"
        )
    rng = rng_stream(seed)
    g = seed_graph
    sums = None if variant.exact else GrowthSums(g)
    trace = [GrowthStep(g, entropy_value(g, variant), None, 0)]
    for _ in range(steps):
        candidates = complement_edges(g)
        incs = _candidate_increments(g, sums, variant, candidates)
        ties, _ = _tie_set(incs, objective)
        pick = int(ties[rng.integers(len(ties))])
        u, v = candidates[pick]
        g = g.add_edge(u, v)
        if sums is not None:
            sums.add_edge(u, v)
        trace.append(
            GrowthStep(g, entropy_value(g, variant), AddEdgeAction(u, v), len(ties))
        )
    return GrowthTrace(variant, objective, tuple(trace))


def _leaf_scores(
    g: Graph, sums: GrowthSums | None, variant: EntropyVariant
) -> np.ndarray:
    """Entropy of the graph after attaching a brand-new node to each target.

    The new node is only ever scored in its attached state, so normalized
    variants stay well-defined throughout the step.
    """
    if variant is EntropyVariant.APPROX_LAPLACIAN:
        return np.array([sums.laplacian_after_leaf(v) for v in range(g.n)])
    if variant is EntropyVariant.APPROX_NORMALIZED:
        return np.array([sums.normalized_after_leaf(v) for v in range(g.n)])
    w = g.n
    grown = g.add_node()
    scores = [
        von_neumann_entropy(grown.add_edge(w, v), variant.kind) for v in range(g.n)
    ]
    return np.array(scores)


def node_growth(
    steps: int,
    m: int,
    objective: Objective,
    variant: EntropyVariant,
    seed: int,
) -> GrowthTrace:
    """Greedy node attachment starting from a 3-clique.

    Each step appends one node and attaches m edges one at a time, each to
    the target optimizing the entropy. tie_count is the number of equally
    probable action sequences for the step (the product over attachments).
    """
    if m < 1:
        raise BadParamError("need m >= 1 attachments per node")
    rng = rng_stream(seed)
    g = triangle_seed()
    sums = None if variant.exact else GrowthSums(g)
    trace = [GrowthStep(g, entropy_value(g, variant), None, 0)]
    for _ in range(steps):
        if m > g.n:
            raise BadParamError(f"cannot attach {m} edges to {g.n} nodes")
        w = g.n
        scores = _leaf_scores(g, sums, variant)
        ties, _ = _tie_set(scores, objective)
        tie_count = len(ties)
        target = int(ties[rng.integers(len(ties))])
        g = g.add_node().add_edge(w, target)
        if sums is not None:
            sums.add_node()
            sums.add_edge(w, target)
        added = [(w, target)]
        for _ in range(m - 1):
            candidates = [
                (w, v) for v in range(g.n) if v != w and not g.has_edge(w, v)
            ]
            incs = _candidate_increments(g, sums, variant, candidates)
            tie_idx, _ = _tie_set(incs, objective)
            tie_count *= len(tie_idx)
            pick = int(tie_idx[rng.integers(len(tie_idx))])
            _, v = candidates[pick]
            g = g.add_edge(w, v)
            if sums is not None:
                sums.add_edge(w, v)
            added.append((w, v))
        action = AddNodeAction(w, tuple(added))
        trace.append(GrowthStep(g, entropy_value(g, variant), action, tie_count))
    return GrowthTrace(variant, objective, tuple(trace))


def heuristic_predict(
    g: Graph, heuristic: Heuristic, rng: np.random.Generator
) -> tuple[int, int]:
    """Pick an absent edge by a structural rule; ties drawn uniformly."""
    candidates = complement_edges(g)
    if not candidates:
        raise GraphCompleteError("no absent edge to predict")
    if heuristic is Heuristic.RANDOM:
        chosen = candidates
    elif heuristic is Heuristic.MIN_DEGREE_SUM:
        sums = np.array([g.degree(u) + g.degree(v) for u, v in candidates])
        chosen = [candidates[i] for i in np.flatnonzero(sums == sums.min())]
    elif heuristic is Heuristic.MAX_GEODESIC:
        dist = geodesic_distances(g)
        dvals = np.array([dist[u, v] for u, v in candidates])
        chosen = [candidates[i] for i in np.flatnonzero(dvals == dvals.max())]
    else:  # MIN_SUM_MAX_GEO: max distance among the min-degree-sum pairs
        sums = np.array([g.degree(u) + g.degree(v) for u, v in candidates])
        short = [candidates[i] for i in np.flatnonzero(sums == sums.min())]
        dist = geodesic_distances(g)
        dvals = np.array([dist[u, v] for u, v in short])
        chosen = [short[i] for i in np.flatnonzero(dvals == dvals.max())]
    return chosen[int(rng.integers(len(chosen)))]


def true_best_edges(g: Graph, kind: DensityKind) -> set[tuple[int, int]]:
    """Absent edges achieving the maximal exact entropy increment."""
    candidates = complement_edges(g)
    _, incs = exact_entropy_increments(g, kind, candidates)
    ties, _ = _tie_set(incs, Objective.MAXIMIZE)
    return {candidates[i] for i in ties}


def heuristic_accuracies(
    params: ModelParams,
    heuristics: list[Heuristic],
    trials: int,
    seed: int,
    kind: DensityKind = DensityKind.LAPLACIAN,
) -> dict[Heuristic, float]:
    """Fraction of trials where each heuristic's pick is a truly optimal edge.

    All heuristics are scored on the same generated graphs, sharing the
    expensive exact argmax sweep; any member of that set counts as correct.
    """
    if trials < 1:
        raise BadParamError("need trials >= 1")
    hits = {h: 0 for h in heuristics}
    for t in range(trials):
        g = generate(params, rng_stream(seed, t, 0))
        best = true_best_edges(g, kind)
        for offset, h in enumerate(heuristics):
            pick = heuristic_predict(g, h, rng_stream(seed, t, 1 + offset))
            hits[h] += pick in best
    return {h: count / trials for h, count in hits.items()}


def heuristic_accuracy(
    params: ModelParams,
    heuristic: Heuristic,
    trials: int,
    seed: int,
    kind: DensityKind = DensityKind.LAPLACIAN,
) -> float:
    return heuristic_accuracies(params, [heuristic], trials, seed, kind)[heuristic]


def predictability_errors(g: Graph, kind: DensityKind) -> PredictabilityPair:
    """How far the approximation's best/worst edge falls from the exact extremes.

    Both errors are 1 minus a ratio of exact increments, so 0 means the
    approximation pointed at a truly optimal edge. The approximate argmax
    and argmin are plain first-hit argmax/argmin over the candidate list
    in lexicographic edge order; under the Laplacian score every
    minimum-degree-sum pair ties bit-exactly, so this is an arbitrary but
    deterministic pick among them.

    Exact Laplacian increments are frequently negative (adding an edge can
    lower that entropy), which breaks the min-side ratio whose denominator
    is the exact increment of the approximation's argmin pick; that side
    comes back None rather than a fabricated number. When even max(exact)
    is nonpositive, no ratio is meaningful and DegenerateRatioError is
    raised for the whole graph.
    """
    candidates = complement_edges(g)
    if len(candidates) < 2:
        raise TooFewCandidatesError(f"need >= 2 absent edges, have {len(candidates)}")
    if g.m == 0:
        raise EmptyEdgeSetError("increments need m >= 1")
    sums = GrowthSums(g)
    if kind is DensityKind.LAPLACIAN:
        approx = np.array([sums.delta_laplacian(u, v) for u, v in candidates])
    else:
        approx = np.array([sums.delta_normalized(u, v) for u, v in candidates])
    _, exact = exact_entropy_increments(g, kind, candidates)

    i_max = int(np.argmax(approx))
    i_min = int(np.argmin(approx))

    exact_max = float(exact.max())
    if exact_max <= 0.0:
        raise DegenerateRatioError(f"max exact increment {exact_max:.3e} is nonpositive")
    denom_min = float(exact[i_min])
    prd_min = 1.0 - float(exact.min()) / denom_min if denom_min > 0.0 else None
    return PredictabilityPair(
        prd_max=1.0 - float(exact[i_max]) / exact_max,
        prd_min=prd_min,
    )


def trace_statistics(trace: GrowthTrace) -> list[StatVector]:
    """Structural statistics of every snapshot along a growth trace."""
    return [stat_vector(step.graph) for step in trace.steps]


def replay_trace(trace: GrowthTrace) -> list[float]:
    """Reapply the recorded actions from the first snapshot.

    Returns the recomputed entropy of every snapshot; raises if any stored
    snapshot differs from the replayed graph.
    """
    g = trace.steps[0].graph
    entropies = [entropy_value(g, trace.variant)]
    for step in trace.steps[1:]:
        action = step.action
        if isinstance(action, AddEdgeAction):
            g = g.add_edge(action.u, action.v)
        elif isinstance(action, AddNodeAction):
            g = g.add_node()
            for u, v in action.edges:
                g = g.add_edge(u, v)
        else:
            raise ValueError("non-initial step without an action")
        if g.edges != step.graph.edges or g.n != step.graph.n:
            raise ValueError("snapshot does not match its recorded action")
        entropies.append(entropy_value(g, trace.variant))
    return entropies
