"""
A balanced gain graph and its distance matrix
=============================================

Four vertices, five edges, complex gains. The graph is balanced, every pair
has a single shortest-path gain, and its distance matrix is cospectral with
the one built from gain moduli alone.
"""

import numpy as np

import skewgain as sg

g = sg.example_graph("fig3")
for u, v, w in g.edges():
    print(f"v{u + 1} -> v{v + 1}: {w}")

###############################################################################
# Balance is decided with a spanning tree. The certificate for a balanced
# graph is a unit switching function that makes every gain a positive real.

cert = sg.balance_certificate(g)
print(cert.status, np.round(cert.zeta.zeta, 6))
print(np.round([w for _, _, w in sg.apply_switching(g, cert.zeta).edges()], 12))

###############################################################################
# Shortest-path gains and the common distance matrix.

report = sg.compatibility_report(g)
print("distance compatible:", report.graph_distance_compatible)

d = sg.distance_matrix(g).entries
d_abs = sg.distance_matrix(sg.magnitude_graph(g)).entries
np.set_printoptions(precision=4, suppress=True)
print(d)
print(d_abs)

###############################################################################
# Both matrices have characteristic polynomial x^4 - 16 x^2 - 24 x - 7.
# The x coefficient is nonzero, so the spectrum cannot be symmetric about 0.

print(sg.char_poly(d).coeffs)
print(sg.char_poly(d_abs).coeffs)
vals = sg.hermitian_eigenvalues(d).values
print(vals, "sum", vals.sum())
print("residuals", np.polyval(sg.char_poly(d).coeffs, vals))
print("cospectral:", sg.cospectral(d, d_abs))
