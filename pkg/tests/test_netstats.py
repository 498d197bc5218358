"""Structural statistics and correlation coefficients."""

import numpy as np
import pytest
from pytest import approx

from vnge import (
    EmptyEdgeSetError,
    LengthMismatchError,
    NoPairsError,
    ZeroVarianceError,
    avg_clustering_coefficient,
    avg_shortest_path_length,
    complete_graph,
    from_edge_list,
    index_of_dispersion,
    path_graph,
    pearson,
    ring_lattice,
    rng_stream,
    small_worldness_omega,
    spearman,
    stat_vector,
    watts_strogatz,
)
from oracles import random_edge_set


def test_avg_path_length_examples():
    assert avg_shortest_path_length(complete_graph(4)) == 1.0
    assert avg_shortest_path_length(path_graph(3)) == approx(4 / 3)
    cycle4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert avg_shortest_path_length(cycle4) == approx(4 / 3)


def test_avg_path_length_ignores_unreachable_pairs():
    g = from_edge_list(5, [(0, 1), (2, 3)])
    assert avg_shortest_path_length(g) == 1.0
    with pytest.raises(NoPairsError):
        avg_shortest_path_length(from_edge_list(3, []))


def test_complete_graph_path_length_for_all_sizes():
    for n in range(2, 9):
        assert avg_shortest_path_length(complete_graph(n)) == 1.0


def test_index_of_dispersion_examples():
    assert index_of_dispersion(complete_graph(5)) == 0.0
    assert index_of_dispersion(ring_lattice(10, 4)) == 0.0
    assert index_of_dispersion(path_graph(3)) == approx(1 / 6)
    star = from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
    assert index_of_dispersion(star) == approx(0.5)
    with pytest.raises(EmptyEdgeSetError):
        index_of_dispersion(from_edge_list(3, []))


def test_index_of_dispersion_relabel_invariant():
    rng = np.random.default_rng(3)
    for _ in range(10):
        n = int(rng.integers(3, 10))
        edges = random_edge_set(n, 0.5, rng)
        if not edges:
            continue
        perm = rng.permutation(n)
        g = from_edge_list(n, edges)
        h = from_edge_list(n, [(perm[u], perm[v]) for u, v in edges])
        assert index_of_dispersion(g) == approx(index_of_dispersion(h), abs=1e-12)


def test_clustering_examples():
    assert avg_clustering_coefficient(complete_graph(5)) == approx(1.0)
    tree = from_edge_list(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)])
    assert avg_clustering_coefficient(tree) == 0.0
    diamond = complete_graph(4).remove_edge(0, 1)
    # degree-2 nodes each close their one neighbor pair (coefficient 1);
    # degree-3 nodes keep two of their three pairs (coefficient 2/3)
    assert avg_clustering_coefficient(diamond) == approx(5 / 6)


def test_omega_signs():
    assert small_worldness_omega(ring_lattice(100, 6), seed=42) < 0.0
    random_like = watts_strogatz(100, 6, 1.0, rng_stream(8))
    assert small_worldness_omega(random_like, seed=43) > 0.0


def test_omega_needs_connected_graph():
    from vnge import DisconnectedError

    with pytest.raises(DisconnectedError):
        small_worldness_omega(from_edge_list(4, [(0, 1), (2, 3)]), seed=1)


def test_pearson_examples():
    assert pearson([1, 2, 3], [2, 4, 6]) == approx(1.0)
    assert pearson([1, 2, 3], [3, 2, 1]) == approx(-1.0)
    assert pearson([1, 2, 3, 4], [1, 3, 2, 4]) == approx(0.8)


def test_pearson_affine_invariance():
    rng = np.random.default_rng(5)
    xs = rng.standard_normal(40)
    ys = rng.standard_normal(40)
    base = pearson(xs, ys)
    for a, b in [(2.5, 1.0), (-0.3, 7.0), (1000.0, -2.0)]:
        assert pearson(xs, a * ys + b) == approx(np.sign(a) * base, abs=1e-12)


def test_pearson_errors():
    with pytest.raises(LengthMismatchError):
        pearson([1, 2], [1, 2, 3])
    with pytest.raises(LengthMismatchError):
        pearson([1], [2])
    with pytest.raises(ZeroVarianceError):
        pearson([1, 1, 1], [1, 2, 3])


def test_spearman_examples():
    assert spearman([1, 5, 9], [2, 30, 41]) == approx(1.0)
    assert spearman([1, 5, 9], [10, 3, -4]) == approx(-1.0)
    # Ties share the mean rank: x-ranks are (1, 2.5, 2.5, 4).
    assert spearman([1, 2, 2, 3], [1, 2, 3, 4]) == approx(
        pearson([1.0, 2.5, 2.5, 4.0], [1, 2, 3, 4])
    )


def test_spearman_monotone_invariance():
    rng = np.random.default_rng(9)
    xs = rng.standard_normal(30)
    ys = rng.standard_normal(30)
    base = spearman(xs, ys)
    assert spearman(np.exp(xs), ys) == approx(base, abs=1e-12)
    assert spearman(xs, ys**3) == approx(base, abs=1e-12)


def test_stat_vector_bundle():
    sv = stat_vector(complete_graph(4))
    assert sv.avg_path_length == 1.0
    assert sv.dispersion == 0.0
    assert sv.clustering == approx(1.0)
