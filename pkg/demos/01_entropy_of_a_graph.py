"""A first look at graph entropy.

Any simple undirected graph maps to a trace-one matrix in two ways: the
Laplacian scaled by its trace 2m, or the normalized Laplacian scaled by
its trace n. The entropy of the eigenvalue spectrum of either matrix is a
spectral measure of how "mixed" the graph's structure is: a single edge
is a pure state with entropy zero, and a complete graph on n nodes
saturates the ln(n-1) upper bound.
"""

import math

from vnge import (
    DensityKind,
    complete_graph,
    density_matrix,
    from_edge_list,
    path_graph,
    von_neumann_entropy,
    approx_entropy_laplacian,
    approx_entropy_normalized,
)

print("=== single edge: a pure state ===")
k2 = complete_graph(2)
print("S_L(K2) =", von_neumann_entropy(k2, DensityKind.LAPLACIAN))
print("S_N(K2) =", von_neumann_entropy(k2, DensityKind.NORMALIZED))

print("\n=== complete graphs saturate ln(n-1) ===")
for n in (3, 5, 10, 25):
    s = von_neumann_entropy(complete_graph(n), DensityKind.LAPLACIAN)
    print(f"n={n:>2}  S_L={s:.6f}  ln(n-1)={math.log(n - 1):.6f}")

print("\n=== the four variants on a small path ===")
p3 = path_graph(3)
print("density matrix (Laplacian kind):")
print(density_matrix(p3, DensityKind.LAPLACIAN))
print("exact Laplacian entropy:      ", von_neumann_entropy(p3, DensityKind.LAPLACIAN))
print("exact normalized entropy:     ", von_neumann_entropy(p3, DensityKind.NORMALIZED))
print("quadratic Laplacian approx:   ", approx_entropy_laplacian(p3))
print("quadratic normalized approx:  ", approx_entropy_normalized(p3))

print("\n=== same size, same edge count, different structure ===")
path6 = from_edge_list(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)])
star6 = from_edge_list(6, [(0, i) for i in range(1, 6)])
print("path on 6 nodes:", von_neumann_entropy(path6, DensityKind.LAPLACIAN))
print("star on 6 nodes:", von_neumann_entropy(star6, DensityKind.LAPLACIAN))
print("(long paths read as regular and score high; hubs pull the entropy down)")
