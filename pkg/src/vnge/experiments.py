"""Config-driven experiment runners emitting plot-ready CSV/JSON.

Every stochastic run is replayable: trial i of a study draws from the
derived stream (seed, i), and outputs embed the command line, seed, and
package version, so identical invocations are byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import __version__
from .errors import (
    DegenerateRatioError,
    EmptyEdgeSetError,
    IsolatedNodeError,
    TooFewCandidatesError,
)
from .evolution import (
    AddEdgeAction,
    AddNodeAction,
    EntropyVariant,
    GrowthTrace,
    Heuristic,
    heuristic_accuracies,
    predictability_errors,
)
from .generators import ModelParams, generate, rng_stream
from .graph import DensityKind, Graph
from .netstats import (
    ZeroVarianceError,
    pearson,
    small_worldness_omega,
    spearman,
)
from .quadratic import approx_entropy_laplacian, approx_entropy_normalized
from .spectral import von_neumann_entropy

VARIANT_ORDER = (
    EntropyVariant.EXACT_LAPLACIAN,
    EntropyVariant.APPROX_LAPLACIAN,
    EntropyVariant.EXACT_NORMALIZED,
    EntropyVariant.APPROX_NORMALIZED,
)

VARIANT_LABELS = {
    EntropyVariant.EXACT_LAPLACIAN: "exact_laplacian",
    EntropyVariant.APPROX_LAPLACIAN: "approx_laplacian",
    EntropyVariant.EXACT_NORMALIZED: "exact_normalized",
    EntropyVariant.APPROX_NORMALIZED: "approx_normalized",
}


def provenance(command: str, seed: int | None) -> dict:
    return {"command": command, "seed": seed, "version": __version__}


def _sample_se(values: np.ndarray) -> float:
    """Standard error of the mean: sample standard deviation / sqrt(count)."""
    if len(values) < 2:
        return 0.0
    return float(np.std(values, ddof=1) / np.sqrt(len(values)))


def all_entropies(g: Graph) -> dict[str, float]:
    """All four entropy values of one graph; raises on precondition failures."""
    return {
        "exact_laplacian": von_neumann_entropy(g, DensityKind.LAPLACIAN),
        "approx_laplacian": approx_entropy_laplacian(g),
        "exact_normalized": von_neumann_entropy(g, DensityKind.NORMALIZED),
        "approx_normalized": approx_entropy_normalized(g),
    }


def entropy_report(g: Graph) -> dict:
    """Per-graph report; fields whose preconditions fail come back null."""
    report: dict = {"n": g.n, "m": g.m, "reasons": {}}
    evaluators = {
        "exact_laplacian": lambda: von_neumann_entropy(g, DensityKind.LAPLACIAN),
        "approx_laplacian": lambda: approx_entropy_laplacian(g),
        "exact_normalized": lambda: von_neumann_entropy(g, DensityKind.NORMALIZED),
        "approx_normalized": lambda: approx_entropy_normalized(g),
    }
    for label, fn in evaluators.items():
        try:
            report[label] = fn()
        except EmptyEdgeSetError:
            report[label] = None
            report["reasons"][label] = "no_edges"
        except IsolatedNodeError:
            report[label] = None
            report["reasons"][label] = "isolated_node"
    return report


@dataclass(frozen=True)
class CorrelationReport:
    label: str
    params: dict
    graphs_used: int
    graphs_excluded: int
    pearson_matrix: list[list[float]]
    vs_edges: dict[str, dict[str, float | None]]
    vs_nodes: dict[str, dict[str, float | None]]

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "params": self.params,
            "graphs_used": self.graphs_used,
            "graphs_excluded": self.graphs_excluded,
            "variants": [VARIANT_LABELS[v] for v in VARIANT_ORDER],
            "pearson_matrix": self.pearson_matrix,
            "vs_edges": self.vs_edges,
            "vs_nodes": self.vs_nodes,
        }


def _safe_corr(fn, xs, ys) -> float | None:
    try:
        return fn(xs, ys)
    except ZeroVarianceError:
        return None


def correlation_report_from_graphs(
    graphs, label: str, params: dict, excluded: int = 0
) -> CorrelationReport:
    """Pairwise entropy correlations plus entropy-vs-size correlations."""
    values: dict[str, list[float]] = {VARIANT_LABELS[v]: [] for v in VARIANT_ORDER}
    edges: list[float] = []
    nodes: list[float] = []
    used = 0
    for g in graphs:
        try:
            ent = all_entropies(g)
        except (EmptyEdgeSetError, IsolatedNodeError):
            excluded += 1
            continue
        for key, val in ent.items():
            values[key].append(val)
        edges.append(float(g.m))
        nodes.append(float(g.n))
        used += 1
    labels = [VARIANT_LABELS[v] for v in VARIANT_ORDER]
    matrix = [[1.0] * 4 for _ in range(4)]
    for i in range(4):
        for j in range(i + 1, 4):
            r = _safe_corr(pearson, values[labels[i]], values[labels[j]])
            matrix[i][j] = matrix[j][i] = r
    vs_edges = {
        lab: {
            "pearson": _safe_corr(pearson, values[lab], edges),
            "spearman": _safe_corr(spearman, values[lab], edges),
        }
        for lab in labels
    }
    vs_nodes = {
        lab: {
            "pearson": _safe_corr(pearson, values[lab], nodes),
            "spearman": _safe_corr(spearman, values[lab], nodes),
        }
        for lab in labels
    }
    return CorrelationReport(label, params, used, excluded, matrix, vs_edges, vs_nodes)


def run_correlation_setting(
    params: ModelParams, label: str, param_dict: dict, graphs: int, seed: int
) -> CorrelationReport:
    generated = (generate(params, rng_stream(seed, i)) for i in range(graphs))
    return correlation_report_from_graphs(generated, label, param_dict)


@dataclass(frozen=True)
class PredictabilityRow:
    param: float
    pairing: str
    prd_max_mean: float
    prd_max_se: float
    prd_min_mean: float
    prd_min_se: float
    trials: int
    degenerate_max_excluded: int
    degenerate_min_excluded: int


def run_predictability_setting(
    params: ModelParams, param_value: float, kind: DensityKind, trials: int, seed: int
) -> PredictabilityRow:
    """Average predictability errors over trials.

    Each ratio is averaged over the trials where its denominator was
    positive; degenerate trials are counted per side, never replaced by a
    made-up value.
    """
    maxima, minima = [], []
    bad_max = bad_min = 0
    for t in range(trials):
        g = generate(params, rng_stream(seed, t))
        try:
            pair = predictability_errors(g, kind)
        except (DegenerateRatioError, TooFewCandidatesError, IsolatedNodeError):
            bad_max += 1
            bad_min += 1
            continue
        maxima.append(pair.prd_max)
        if pair.prd_min is None:
            bad_min += 1
        else:
            minima.append(pair.prd_min)
    max_arr = np.array(maxima) if maxima else np.array([np.nan])
    min_arr = np.array(minima) if minima else np.array([np.nan])
    return PredictabilityRow(
        param=param_value,
        pairing="laplacian" if kind is DensityKind.LAPLACIAN else "normalized",
        prd_max_mean=float(max_arr.mean()),
        prd_max_se=_sample_se(max_arr) if maxima else float("nan"),
        prd_min_mean=float(min_arr.mean()),
        prd_min_se=_sample_se(min_arr) if minima else float("nan"),
        trials=trials,
        degenerate_max_excluded=bad_max,
        degenerate_min_excluded=bad_min,
    )


@dataclass(frozen=True)
class HeuristicRow:
    param: float
    heuristic: str
    accuracy: float
    std_error: float
    trials: int


def run_heuristic_setting(
    params: ModelParams, param_value: float, trials: int, seed: int
) -> list[HeuristicRow]:
    """All four heuristics on one shared batch of graphs."""
    heuristics = list(Heuristic)
    accs = heuristic_accuracies(params, heuristics, trials, seed)
    rows = []
    for h in heuristics:
        wins = round(accs[h] * trials)
        outcomes = np.array([1.0] * wins + [0.0] * (trials - wins))
        rows.append(
            HeuristicRow(
                param=param_value,
                heuristic=h.value,
                accuracy=accs[h],
                std_error=_sample_se(outcomes),
                trials=trials,
            )
        )
    return rows


def run_smallworld_sweep(
    n: int,
    k: int,
    p_values,
    seed: int,
    instances: int = 5,
    n_random_refs: int = 20,
) -> list[tuple[float, float]]:
    """Mean omega per rewiring probability, averaged over graph instances."""
    from .generators import watts_strogatz

    rows = []
    for pi, p in enumerate(p_values):
        omegas = []
        for i in range(instances):
            g = watts_strogatz(n, k, p, rng_stream(seed, pi, i, 0))
            ref_seed = int(rng_stream(seed, pi, i, 1).integers(2**63))
            omegas.append(
                small_worldness_omega(g, seed=ref_seed, n_random_refs=n_random_refs)
            )
        rows.append((float(p), float(np.mean(omegas))))
    return rows


def action_to_dict(action) -> dict | None:
    if action is None:
        return None
    if isinstance(action, AddEdgeAction):
        return {"type": "add_edge", "edge": [action.u, action.v]}
    if isinstance(action, AddNodeAction):
        return {
            "type": "add_node",
            "node": action.node,
            "edges": [[u, v] for u, v in action.edges],
        }
    raise TypeError(f"unknown action {action!r}")


def trace_to_dict(trace: GrowthTrace) -> dict:
    seed_graph = trace.steps[0].graph
    return {
        "variant": trace.variant.value,
        "objective": trace.objective.value,
        "seed_graph": {
            "n": seed_graph.n,
            "edges": [[u, v] for u, v in seed_graph.sorted_edges()],
        },
        "steps": [
            {
                "action": action_to_dict(step.action),
                "entropy": step.entropy,
                "tie_count": step.tie_count,
            }
            for step in trace.steps
        ],
    }


def dump_json(payload: dict, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, sort_keys=True, indent=2)
        fh.write("\n")


def write_csv(path, header: list[str], rows, prov: dict) -> None:
    """CSV with `#` provenance comment lines before the header row."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(f"# command: {prov['command']}\n")
        fh.write(f"# seed: {prov['seed']}\n")
        fh.write(f"# version: {prov['version']}\n")
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_cell(x) for x in row) + "\n")


def _cell(x) -> str:
    if isinstance(x, float):
        return repr(x)
    return str(x)
