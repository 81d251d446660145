"""
Distance spectra of odd gain cycles
===================================

On an odd cycle of length n = 2p + 1 every pair has a unique shortest path,
so the distance matrix is circulant up to switching. The eigenvalues are
2 sum_r r k^r cos(r t_j) with t_j = (2 pi j + theta) / n.
"""

import math

import numpy as np

import skewgain as sg

###############################################################################
# Closed form against a numerical eigensolve.

for n, k, theta in [(3, 1, 0), (5, 1, math.pi), (7, 0.5, 1.0), (9, 2, math.pi / 3)]:
    closed = sg.cycle_distance_spectrum_closed(n, k, theta).values
    g = sg.canonical_odd_cycle(n, k, theta)
    numeric = sg.hermitian_eigenvalues(sg.distance_matrix(g).entries).values
    print(n, k, round(theta, 4), np.round(closed, 6), "max diff", np.abs(closed - numeric).max())

###############################################################################
# The spectrum depends only on the modulus and the cycle-gain argument:
# scrambling edge arguments while keeping their sum fixed changes nothing.

rng = np.random.default_rng(1)
n, k, theta = 7, 1.3, 2.0
args = rng.uniform(-math.pi, math.pi, n - 1)
edges = [(j, j + 1, k * np.exp(1j * a)) for j, a in enumerate(args)]
edges.append((n - 1, 0, k * np.exp(1j * (theta - args.sum()))))
g = sg.build_graph(n, edges)
print(np.round(sg.hermitian_eigenvalues(sg.distance_matrix(g).entries).values, 10))
print(np.round(sg.cycle_distance_spectrum_closed(n, k, theta).values, 10))

###############################################################################
# Unit gains admit a sine form. It is 0/0 at t_j = 0, where the limit
# p (p + 1) is the largest eigenvalue.

for theta in (0.0, 1e-6, 0.5):
    print(theta, np.round(sg.unit_cycle_spectrum_closed(9, theta).values, 8))

###############################################################################
# The cosine sum itself, closed against direct, across the parameter box.

worst = 0.0
for _ in range(2000):
    p = int(rng.integers(1, 51))
    kk = rng.uniform(0.2, 3)
    t = rng.uniform(0.05, 2 * math.pi - 0.05)
    direct = sg.agp_sum_direct(p, kk, t)
    worst = max(worst, abs(sg.agp_sum_closed(p, kk, t) - direct) / (1 + abs(direct)))
print("worst scaled error", worst)
