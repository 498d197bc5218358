"""Command-line surface: one executable, one subcommand per experiment.

Stochastic subcommands require --seed and are byte-reproducible: the same
invocation writes the same output. Failures print a machine-readable JSON
object on stderr and exit nonzero.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import VngeError
from .evolution import (
    EntropyVariant,
    Objective,
    edge_growth,
    node_growth,
)
from .experiments import (
    correlation_report_from_graphs,
    dump_json,
    entropy_report,
    provenance,
    run_correlation_setting,
    run_heuristic_setting,
    run_predictability_setting,
    run_smallworld_sweep,
    trace_to_dict,
    write_csv,
)
from .generators import BadParamError, BAParams, ERParams, WSParams, generate, path_graph, rng_stream
from .graph import DensityKind, is_connected, read_edge_list, write_edge_list
from .ingest import CorrNetParams, filter_connected_fullsize, load_price_csv, network_sequence


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        json.dump({"error": "usage", "message": message}, sys.stderr)
        sys.stderr.write("\n")
        raise SystemExit(2)


def _model_params(args, param_value=None):
    """Build model params, substituting the swept value when given."""
    if args.model == "er":
        p = args.p if param_value is None else param_value
        if p is None:
            raise BadParamError("er model needs --p")
        return ERParams(args.n, float(p))
    if args.model == "ws":
        k = args.k if param_value is None else int(param_value)
        if k is None or args.p is None:
            raise BadParamError("ws model needs --k and --p")
        return WSParams(args.n, int(k), args.p)
    if args.model == "ba":
        m = args.m if param_value is None else int(param_value)
        if m is None:
            raise BadParamError("ba model needs --m")
        return BAParams(args.n, int(m))
    raise BadParamError(f"unknown model {args.model!r}")


def _sweep_values(args):
    if args.model == "er":
        values = args.p_values or ([args.p] if args.p is not None else None)
    elif args.model == "ws":
        values = args.k_values or ([args.k] if args.k is not None else None)
    else:
        values = args.m_values or ([args.m] if args.m is not None else None)
    if not values:
        raise BadParamError(f"no parameter values given for model {args.model!r}")
    return values


def _add_model_args(sub, sweep: bool):
    sub.add_argument("--model", choices=["er", "ws", "ba"], required=True)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--p", type=float, help="er/ws connection or rewiring probability")
    sub.add_argument("--k", type=int, help="ws ring-neighbor count (even)")
    sub.add_argument("--m", type=int, help="ba edges per new node")
    if sweep:
        sub.add_argument("--p-values", type=float, nargs="+", help="er sweep over p")
        sub.add_argument("--k-values", type=int, nargs="+", help="ws sweep over k")
        sub.add_argument("--m-values", type=int, nargs="+", help="ba sweep over m")


def build_parser() -> _Parser:
    parser = _Parser(prog="vnge")
    subs = parser.add_subparsers(dest="command", required=True)

    p_ent = subs.add_parser("entropy", help="all four entropies of one graph")
    p_ent.add_argument("--input", required=True, help="edge-list file")
    p_ent.add_argument("--out", help="JSON output path (stdout when omitted)")

    p_gen = subs.add_parser("generate", help="write a random graph as an edge list")
    _add_model_args(p_gen, sweep=False)
    p_gen.add_argument("--seed", type=int, required=True)
    p_gen.add_argument("--out", required=True)

    p_grow = subs.add_parser("grow", help="entropy-driven growth trace")
    p_grow.add_argument("--mode", choices=["edge", "node"], required=True)
    p_grow.add_argument(
        "--variant", choices=[v.value for v in EntropyVariant], required=True
    )
    p_grow.add_argument("--objective", choices=["max", "min"], required=True)
    p_grow.add_argument("--steps", type=int, required=True)
    p_grow.add_argument("--seed", type=int, required=True)
    p_grow.add_argument("--out", required=True)
    p_grow.add_argument(
        "--input", help="edge mode seed graph (default: 8-node path)"
    )
    p_grow.add_argument(
        "--attach", type=int, default=1, help="node mode: edges per new node"
    )

    p_heur = subs.add_parser("heuristics", help="edge-prediction accuracy sweep")
    _add_model_args(p_heur, sweep=True)
    p_heur.add_argument("--trials", type=int, default=50)
    p_heur.add_argument("--seed", type=int, required=True)
    p_heur.add_argument("--out", required=True)

    p_prd = subs.add_parser("predictability", help="approximation error sweep")
    _add_model_args(p_prd, sweep=True)
    p_prd.add_argument("--trials", type=int, default=30)
    p_prd.add_argument(
        "--pairing", choices=["l", "n", "both"], default="both",
        help="which approximate->exact pairing to score",
    )
    p_prd.add_argument("--seed", type=int, required=True)
    p_prd.add_argument("--out", required=True)

    p_corr = subs.add_parser("correlate", help="entropy correlation study")
    _add_model_args(p_corr, sweep=True)
    p_corr.add_argument("--graphs", type=int, default=100)
    p_corr.add_argument("--input-dir", help="score saved edge lists instead of a model")
    p_corr.add_argument("--seed", type=int)
    p_corr.add_argument("--out", required=True)

    p_sw = subs.add_parser("smallworld", help="omega across rewiring probabilities")
    p_sw.add_argument("--n", type=int, required=True)
    p_sw.add_argument("--k", type=int, required=True)
    p_sw.add_argument("--p-grid", type=float, nargs="+", required=True)
    p_sw.add_argument("--instances", type=int, default=5)
    p_sw.add_argument("--refs", type=int, default=20)
    p_sw.add_argument("--seed", type=int, required=True)
    p_sw.add_argument("--out", required=True)

    p_ing = subs.add_parser("ingest", help="sliding-window correlation networks")
    p_ing.add_argument("--prices", required=True, help="price CSV (header = assets)")
    p_ing.add_argument("--window", type=int, default=28)
    p_ing.add_argument("--threshold", type=float, required=True)
    p_ing.add_argument("--out-dir", required=True)
    p_ing.add_argument(
        "--analyze",
        help="also write an entropy correlation report over the connected, "
        "full-size networks",
    )
    return parser


def _cmd_entropy(args, command):
    g = read_edge_list(args.input)
    payload = entropy_report(g)
    payload["provenance"] = provenance(command, None)
    if args.out:
        dump_json(payload, args.out)
    else:
        print(json.dumps(payload, sort_keys=True, indent=2))
    return 0


def _cmd_generate(args, command):
    g = generate(_model_params(args), rng_stream(args.seed))
    prov = provenance(command, args.seed)
    write_edge_list(
        g,
        args.out,
        header_comments=[
            f"command: {prov['command']}",
            f"seed: {prov['seed']}",
            f"version: {prov['version']}",
        ],
    )
    return 0


def _cmd_grow(args, command):
    variant = EntropyVariant(args.variant)
    objective = Objective(args.objective)
    if args.mode == "edge":
        seed_graph = read_edge_list(args.input) if args.input else path_graph(8)
        trace = edge_growth(seed_graph, args.steps, objective, variant, args.seed)
    else:
        trace = node_growth(args.steps, args.attach, objective, variant, args.seed)
    payload = trace_to_dict(trace)
    payload["mode"] = args.mode
    payload["provenance"] = provenance(command, args.seed)
    dump_json(payload, args.out)
    return 0


def _cmd_heuristics(args, command):
    rows = []
    for vi, value in enumerate(_sweep_values(args)):
        params = _model_params(args, value)
        for row in run_heuristic_setting(
            params, float(value), args.trials,
            seed=int(rng_stream(args.seed, vi).integers(2**63)),
        ):
            rows.append(
                (row.param, row.heuristic, row.accuracy, row.std_error, row.trials)
            )
    write_csv(
        args.out,
        ["param", "heuristic", "accuracy", "std_error", "trials"],
        rows,
        provenance(command, args.seed),
    )
    return 0


def _cmd_predictability(args, command):
    kinds = {
        "l": [DensityKind.LAPLACIAN],
        "n": [DensityKind.NORMALIZED],
        "both": [DensityKind.LAPLACIAN, DensityKind.NORMALIZED],
    }[args.pairing]
    rows = []
    for vi, value in enumerate(_sweep_values(args)):
        params = _model_params(args, value)
        for ki, kind in enumerate(kinds):
            row = run_predictability_setting(
                params, float(value), kind, args.trials,
                seed=int(rng_stream(args.seed, vi, ki).integers(2**63)),
            )
            rows.append(
                (
                    row.param,
                    row.pairing,
                    row.prd_max_mean,
                    row.prd_max_se,
                    row.prd_min_mean,
                    row.prd_min_se,
                    row.trials,
                    row.degenerate_max_excluded,
                    row.degenerate_min_excluded,
                )
            )
    write_csv(
        args.out,
        [
            "param",
            "pairing",
            "prd_max_mean",
            "prd_max_se",
            "prd_min_mean",
            "prd_min_se",
            "trials",
            "degenerate_max_excluded",
            "degenerate_min_excluded",
        ],
        rows,
        provenance(command, args.seed),
    )
    return 0


def _cmd_correlate(args, command):
    reports = []
    if args.input_dir:
        paths = sorted(Path(args.input_dir).glob("*.edgelist"))
        if not paths:
            raise VngeError(f"no .edgelist files under {args.input_dir}")
        graphs = [read_edge_list(p) for p in paths]
        reports.append(
            correlation_report_from_graphs(
                graphs, "ingested", {"count": len(graphs)}
            ).to_dict()
        )
    else:
        if args.seed is None:
            raise BadParamError("--seed is required when generating graphs")
        param_name = {"er": "p", "ws": "k", "ba": "m"}[args.model]
        for vi, value in enumerate(_sweep_values(args)):
            params = _model_params(args, value)
            label = f"{args.model}-{param_name}-{value}"
            report = run_correlation_setting(
                params,
                label,
                {"model": args.model, "n": args.n, param_name: value},
                args.graphs,
                seed=int(rng_stream(args.seed, vi).integers(2**63)),
            )
            reports.append(report.to_dict())
    dump_json(
        {"provenance": provenance(command, args.seed), "reports": reports}, args.out
    )
    return 0


def _cmd_smallworld(args, command):
    rows = run_smallworld_sweep(
        args.n,
        args.k,
        args.p_grid,
        seed=args.seed,
        instances=args.instances,
        n_random_refs=args.refs,
    )
    write_csv(args.out, ["p", "omega"], rows, provenance(command, args.seed))
    return 0


def _cmd_ingest(args, command):
    panel = load_price_csv(args.prices)
    params = CorrNetParams(threshold=args.threshold, window=args.window)
    nets = network_sequence(panel, params)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    prov = provenance(command, None)
    comments = [
        f"command: {prov['command']}",
        f"seed: {prov['seed']}",
        f"version: {prov['version']}",
    ]
    manifest = []
    for offset, g in enumerate(nets):
        window_end = params.window + offset
        write_edge_list(g, out_dir / f"window_{window_end:05d}.edgelist", comments)
        manifest.append((window_end, g.n, g.m, int(is_connected(g))))
    write_csv(out_dir / "manifest.csv", ["window_end", "n", "m", "connected"], manifest, prov)
    if args.analyze:
        kept = filter_connected_fullsize(nets, panel.n_assets)
        report = correlation_report_from_graphs(
            kept,
            "ingested",
            {"windows": len(nets), "retained": len(kept), "threshold": args.threshold},
        )
        dump_json({"provenance": prov, "reports": [report.to_dict()]}, args.analyze)
    return 0


_COMMANDS = {
    "entropy": _cmd_entropy,
    "generate": _cmd_generate,
    "grow": _cmd_grow,
    "heuristics": _cmd_heuristics,
    "predictability": _cmd_predictability,
    "correlate": _cmd_correlate,
    "smallworld": _cmd_smallworld,
    "ingest": _cmd_ingest,
}


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    command = "vnge " + " ".join(argv)
    try:
        return _COMMANDS[args.command](args, command)
    except (VngeError, OSError, ValueError) as exc:
        json.dump(
            {"error": type(exc).__name__, "message": str(exc)}, sys.stderr
        )
        sys.stderr.write("\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
