"""Experiment runners and the command-line surface.

Determinism contract: any command rerun with the same seed and arguments
produces byte-identical files.
"""

import json
import math

import numpy as np
import pytest
from pytest import approx

from vnge import complete_graph, from_edge_list, pearson, rng_stream, spearman
from vnge.cli import main
from vnge.experiments import (
    all_entropies,
    correlation_report_from_graphs,
    entropy_report,
    run_correlation_setting,
)
from vnge.generators import ERParams, erdos_renyi


def test_entropy_report_k4_values():
    report = entropy_report(complete_graph(4))
    assert report["exact_laplacian"] == approx(math.log(3), abs=1e-9)
    assert report["approx_laplacian"] == approx(2 / 3, abs=1e-12)
    assert report["approx_normalized"] == approx(2 / 3, abs=1e-12)
    assert report["n"] == 4 and report["m"] == 6
    assert report["reasons"] == {}


def test_entropy_report_flags_precondition_failures():
    no_edges = from_edge_list(3, [])
    report = entropy_report(no_edges)
    assert report["exact_laplacian"] is None
    assert report["reasons"]["exact_laplacian"] == "no_edges"
    isolated = from_edge_list(3, [(0, 1)])
    report = entropy_report(isolated)
    assert report["exact_normalized"] is None
    assert report["reasons"]["exact_normalized"] == "isolated_node"
    assert report["exact_laplacian"] is not None


def test_correlation_report_duplication_invariance():
    graphs = [erdos_renyi(20, 0.3, rng_stream(42, i)) for i in range(30)]
    once = correlation_report_from_graphs(graphs, "x", {})
    twice = correlation_report_from_graphs(graphs + graphs, "x", {})
    assert np.asarray(once.pearson_matrix) == approx(
        np.asarray(twice.pearson_matrix), abs=1e-12
    )


def test_correlation_invariant_under_edge_sum_convention():
    # Under the single-counting convention the normalized approximation
    # becomes an affine map of ours (half the edge-sum coefficient), so
    # at fixed n every reported coefficient is unchanged.
    graphs = [
        g
        for g in (erdos_renyi(25, 0.25, rng_stream(77, i)) for i in range(40))
        if g.m > 0 and np.all(g.degrees() > 0)
    ]
    assert len(graphs) >= 30
    ours, halved, edges = [], [], []
    for g in graphs:
        values = all_entropies(g)
        ours.append(values["approx_normalized"])
        n = g.n
        halved.append(0.5 * values["approx_normalized"] + 0.5 * (1.0 - 1.0 / n))
        edges.append(float(g.m))
    exact = [all_entropies(g)["exact_normalized"] for g in graphs]
    assert pearson(exact, ours) == approx(pearson(exact, halved), abs=1e-12)
    assert pearson(ours, edges) == approx(pearson(halved, edges), abs=1e-12)
    assert spearman(ours, edges) == approx(spearman(halved, edges), abs=1e-12)


def test_run_correlation_setting_reports_shape():
    report = run_correlation_setting(
        ERParams(20, 0.3), "er-p-0.3", {"model": "er", "n": 20, "p": 0.3}, 25, seed=5
    )
    mat = np.asarray(report.pearson_matrix, dtype=float)
    assert mat.shape == (4, 4)
    assert np.all(np.diag(mat) == 1.0)
    assert mat == approx(mat.T)
    assert np.all(np.abs(mat) <= 1.0 + 1e-12)
    # n is fixed in a setting, so node-count correlations are undefined
    assert report.vs_nodes["exact_laplacian"]["pearson"] is None


def _run(argv):
    code = main(argv)
    assert code == 0, f"command failed: {argv}"


def _assert_rerun_identical(argv, out_path):
    _run(argv)
    first = out_path.read_bytes()
    _run(argv)
    assert out_path.read_bytes() == first
    return first


def test_cli_generate_deterministic(tmp_path):
    out = tmp_path / "g.edgelist"
    data = _assert_rerun_identical(
        ["generate", "--model", "er", "--n", "30", "--p", "0.2",
         "--seed", "11", "--out", str(out)],
        out,
    )
    assert data.startswith(b"# command: vnge generate")


def test_cli_generate_matches_library(tmp_path):
    from vnge import read_edge_list

    out = tmp_path / "g.edgelist"
    _run(["generate", "--model", "ba", "--n", "20", "--m", "2",
          "--seed", "3", "--out", str(out)])
    from vnge.generators import barabasi_albert

    assert read_edge_list(out) == barabasi_albert(20, 2, rng_stream(3))


def test_cli_entropy_report(tmp_path, capsys):
    graph_path = tmp_path / "k4.edgelist"
    graph_path.write_text("n 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    _run(["entropy", "--input", str(graph_path)])
    payload = json.loads(capsys.readouterr().out)
    assert payload["exact_laplacian"] == approx(math.log(3), abs=1e-9)
    assert payload["approx_normalized"] == approx(2 / 3)
    assert payload["provenance"]["version"]


def test_cli_entropy_bad_file_is_machine_readable(tmp_path, capsys):
    bad = tmp_path / "bad.edgelist"
    bad.write_text("0 1\n2 2\n")
    code = main(["entropy", "--input", str(bad)])
    assert code == 1
    err = json.loads(capsys.readouterr().err)
    assert err["error"] == "EdgeListFormatError"
    assert "line 2" in err["message"]


def test_cli_usage_error_is_json(capsys):
    code = main(["generate", "--model", "er", "--n", "10"])
    assert code == 2
    err = json.loads(capsys.readouterr().err)
    assert err["error"] == "usage"


def test_cli_grow_deterministic_and_replayable(tmp_path):
    out = tmp_path / "trace.json"
    _assert_rerun_identical(
        ["grow", "--mode", "edge", "--variant", "ale", "--objective", "max",
         "--steps", "5", "--seed", "9", "--out", str(out)],
        out,
    )
    payload = json.loads(out.read_text())
    assert payload["seed_graph"]["n"] == 8
    assert len(payload["steps"]) == 6
    assert payload["steps"][0]["action"] is None
    assert payload["steps"][1]["action"]["type"] == "add_edge"
    assert payload["steps"][1]["tie_count"] >= 1


def test_cli_grow_node_mode(tmp_path):
    out = tmp_path / "trace.json"
    _run(["grow", "--mode", "node", "--variant", "anle", "--objective", "min",
          "--steps", "4", "--seed", "2", "--out", str(out)])
    payload = json.loads(out.read_text())
    assert payload["seed_graph"]["n"] == 3
    last = payload["steps"][-1]["action"]
    assert last["type"] == "add_node"
    assert len(last["edges"]) == 1


def test_cli_heuristics_csv(tmp_path):
    out = tmp_path / "heur.csv"
    _assert_rerun_identical(
        ["heuristics", "--model", "er", "--n", "12", "--p-values", "0.3",
         "--trials", "10", "--seed", "21", "--out", str(out)],
        out,
    )
    lines = out.read_text().splitlines()
    assert lines[0].startswith("# command:")
    assert lines[3] == "param,heuristic,accuracy,std_error,trials"
    assert len(lines) == 4 + 4  # one row per heuristic


def test_cli_predictability_csv(tmp_path):
    out = tmp_path / "prd.csv"
    _assert_rerun_identical(
        ["predictability", "--model", "er", "--n", "14", "--p-values", "0.3", "0.6",
         "--trials", "6", "--pairing", "both", "--seed", "33", "--out", str(out)],
        out,
    )
    lines = out.read_text().splitlines()
    assert len(lines) == 4 + 4  # 2 params x 2 pairings
    header = lines[3].split(",")
    assert header[0] == "param" and "degenerate_min_excluded" in header


def test_cli_smallworld_csv(tmp_path):
    out = tmp_path / "omega.csv"
    _assert_rerun_identical(
        ["smallworld", "--n", "40", "--k", "4", "--p-grid", "0.01", "1.0",
         "--instances", "2", "--refs", "5", "--seed", "13", "--out", str(out)],
        out,
    )
    lines = out.read_text().splitlines()
    assert lines[3] == "p,omega"
    rows = [line.split(",") for line in lines[4:]]
    assert [r[0] for r in rows] == ["0.01", "1.0"]
    assert float(rows[0][1]) < float(rows[1][1])


def test_cli_correlate_json(tmp_path):
    out = tmp_path / "corr.json"
    _assert_rerun_identical(
        ["correlate", "--model", "er", "--n", "16", "--p-values", "0.4",
         "--graphs", "20", "--seed", "8", "--out", str(out)],
        out,
    )
    payload = json.loads(out.read_text())
    report = payload["reports"][0]
    assert report["graphs_used"] + report["graphs_excluded"] == 20
    assert len(report["pearson_matrix"]) == 4


def test_cli_ingest_end_to_end(tmp_path, capsys):
    rng = np.random.default_rng(6)
    days, assets = 31, 4
    prices = np.exp(np.cumsum(rng.standard_normal((days, assets)) * 0.02, axis=0))
    csv_path = tmp_path / "prices.csv"
    header = ",".join(f"s{i}" for i in range(assets))
    body = "\n".join(",".join(f"{x:.9f}" for x in row) for row in prices)
    csv_path.write_text(header + "\n" + body + "\n")

    nets_dir = tmp_path / "nets"
    report_path = tmp_path / "ingested.json"
    _run(["ingest", "--prices", str(csv_path), "--window", "28",
          "--threshold", "0.2", "--out-dir", str(nets_dir),
          "--analyze", str(report_path)])
    edge_files = sorted(nets_dir.glob("*.edgelist"))
    assert [p.name for p in edge_files] == [
        "window_00028.edgelist", "window_00029.edgelist", "window_00030.edgelist"
    ]
    manifest = (nets_dir / "manifest.csv").read_text().splitlines()
    assert manifest[3] == "window_end,n,m,connected"
    assert len(manifest) == 4 + 3
    payload = json.loads(report_path.read_text())
    assert payload["reports"][0]["label"] == "ingested"

    # correlate can rescore the saved networks
    corr_out = tmp_path / "rescored.json"
    _run(["correlate", "--model", "er", "--n", "4",
          "--input-dir", str(nets_dir), "--out", str(corr_out)])
    assert json.loads(corr_out.read_text())["reports"][0]["graphs_used"] >= 0
