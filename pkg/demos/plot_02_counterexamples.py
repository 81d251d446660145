"""
Compatibility without balance, balance without compatibility
============================================================

Balance and distance compatibility are independent in general. Two small
graphs show each direction failing.
"""

import skewgain as sg

###############################################################################
# An unbalanced graph that is still distance compatible: the triangle has gain
# 1 + i, but no pair is joined by two distinct shortest paths.

g1 = sg.example_graph("fig1")
cert = sg.balance_certificate(g1)
print(cert.to_dict())
print(sg.compatibility_report(g1).to_dict())
print("cospectral with |phi|:", sg.balance_via_distance_cospectrality(g1))

###############################################################################
# A balanced 4-cycle whose two shortest paths between opposite corners have
# gains of different modulus. Their ratio is a positive real, so only
# modulus-wise compatibility fails.

g2 = sg.example_graph("fig2")
print(sg.balance_certificate(g2).status)
report = sg.compatibility_report(g2)
print(report.to_dict())
print(sg.shortest_path_gain_set(g2, 0, 2).values)

###############################################################################
# The common matrix does not exist, the extremal ones do.

try:
    sg.distance_matrix(g2)
except sg.NotDistanceCompatibleError as exc:
    print(exc)
print(sg.distance_matrix_max(g2).entries.real)
print(sg.distance_matrix_min(g2).entries.real)
