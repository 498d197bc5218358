"""Choosing the rewiring probability that makes a small world.

omega compares a graph's path length to degree-preserving random
rewirings and its clustering to a matched ring lattice: near -1 means
lattice-like, near +1 random-like, near 0 small-world. Sweeping the
rewiring probability of a ring lattice shows the crossover, which is the
principled way to pick p for small-world experiments.
"""

import numpy as np

from vnge.experiments import run_smallworld_sweep

p_grid = np.logspace(-3, 0, 9).tolist()
rows = run_smallworld_sweep(n=60, k=6, p_values=p_grid, seed=606, instances=3)

print("      p     omega")
for p, omega in rows:
    bar = "#" * int(20 * abs(omega))
    side = "lattice" if omega < -0.05 else ("random" if omega > 0.05 else "small world")
    print(f"{p:9.4f}  {omega:+.3f}  {bar:<20} {side}")

crossing = [
    (rows[i][0], rows[i + 1][0])
    for i in range(len(rows) - 1)
    if rows[i][1] < 0 <= rows[i + 1][1]
]
print("\nzero crossing between p =", crossing)
