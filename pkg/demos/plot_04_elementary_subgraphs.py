"""
Characteristic polynomials two ways
===================================

Coefficients of det(xI - A) from the trace recurrence, and from a sum over
elementary subgraphs (disjoint edges and cycles), where a cycle contributes
through the real part of its gain and an edge through its squared modulus.
"""

import numpy as np

import skewgain as sg
from skewgain.generators import MODELS

g = sg.build_graph(3, [(0, 1, 1), (1, 2, 1), (2, 0, 1j)])
print(sg.char_poly(sg.adjacency_matrix(g)).coeffs)
print(sg.char_poly_elementary(g).coeffs)

###############################################################################
# Agreement over random graphs from each gain model.

worst = 0.0
for seed, model in enumerate(MODELS * 25):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(3, 9))
    m = int(rng.integers(n - 1, n * (n - 1) // 2 + 1))
    h = sg.random_csg(sg.RandomModel(model, seed=seed), n, m)
    a = sg.char_poly(sg.adjacency_matrix(h)).coeffs
    b = sg.char_poly_elementary(h).coeffs
    worst = max(worst, np.abs(a - b).max())
print("max coefficient difference", worst)

###############################################################################
# Adjacency spectra detect balance: a graph is cospectral with its magnitude
# graph exactly when it is balanced.

for model in ("balanced", "unit"):
    h = sg.random_csg(sg.RandomModel(model, seed=4), 7, 12)
    same = sg.cospectral(sg.adjacency_matrix(h), sg.adjacency_matrix(sg.magnitude_graph(h)))
    print(model, sg.balance_certificate(h).balanced, same)
