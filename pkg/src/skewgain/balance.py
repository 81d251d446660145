"""Balance of gain graphs.

A gain graph is balanced when every cycle gain is a positive real. The test
used here grows a BFS spanning tree, switches so that every tree edge gets a
positive real gain, and then inspects the non-tree edges. Gains commute and
the positive-real condition survives conjugation, so checking fundamental
cycles settles every cycle.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .distance import distance_matrix
from .errors import InvalidCycleError, NotDistanceCompatibleError
from .graph import GainGraph, SwitchingFunction, apply_switching, magnitude_graph, require_connected
from .paths import DEFAULT_CAP, DEFAULT_TOL, is_positive_real
from .spectra import cospectral


@dataclass(frozen=True)
class OrientedCycle:
    vertices: tuple[int, ...]

    def __post_init__(self):
        verts = tuple(int(v) for v in self.vertices)
        if len(verts) < 3:
            raise InvalidCycleError("a cycle needs at least 3 vertices")
        if len(set(verts)) != len(verts):
            raise InvalidCycleError(f"repeated vertex in cycle {verts}")
        object.__setattr__(self, "vertices", verts)

    def reversed(self) -> "OrientedCycle":
        v = self.vertices
        return OrientedCycle((v[0],) + v[:0:-1])

    def oriented_edges(self):
        v = self.vertices
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]


def cycle_gain(g: GainGraph, c) -> complex:
    """Product of the gains along the oriented cycle ``c``."""
    if not isinstance(c, OrientedCycle):
        c = OrientedCycle(tuple(c))
    z = 1 + 0j
    for u, v in c.oriented_edges():
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise InvalidCycleError(f"{u} -> {v} is not an edge of the graph")
        z *= g.gain(u, v)
    return z


@dataclass(frozen=True)
class BalanceCertificate:
    status: str
    zeta: SwitchingFunction | None = None
    witness_cycle: OrientedCycle | None = None
    witness_gain: complex | None = None

    @property
    def balanced(self) -> bool:
        return self.status == "balanced"

    def to_dict(self) -> dict:
        if self.balanced:
            return {"status": self.status, "zeta": [[z.real, z.imag] for z in self.zeta.zeta]}
        z = self.witness_gain
        return {
            "status": self.status,
            "witness_cycle": {"vertices": list(self.witness_cycle.vertices), "gain": [z.real, z.imag]},
        }


def _tree_path_to_root(parent: list[int], u: int) -> list[int]:
    path = [u]
    while parent[path[-1]] >= 0:
        path.append(parent[path[-1]])
    return path


def balance_certificate(g: GainGraph, tol: float = DEFAULT_TOL) -> BalanceCertificate:
    """Decide balance, returning either a switching that makes every gain a
    positive real or a cycle whose gain is not a positive real."""
    require_connected(g)
    if g.n == 0:
        return BalanceCertificate("balanced", SwitchingFunction(()))
    zeta = [0j] * g.n
    parent = [-1] * g.n
    zeta[0] = 1 + 0j
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in g.neighbors(u):
            if not seen[v]:
                seen[v] = True
                parent[v] = u
                w = g.gain(u, v)
                # e^{-i arg w} without a branch cut
                zeta[v] = zeta[u] * w.conjugate() / abs(w)
                queue.append(v)
    for u, v, w in g.edges():
        if parent[v] == u or parent[u] == v:
            continue
        switched = zeta[u].conjugate() * w * zeta[v]
        if not is_positive_real(switched, tol):
            up_u = _tree_path_to_root(parent, u)
            up_v = _tree_path_to_root(parent, v)
            on_u = set(up_u)
            lca = next(x for x in up_v if x in on_u)
            down_to_u = up_u[: up_u.index(lca) + 1][::-1]
            up_from_v = up_v[: up_v.index(lca)]
            cycle = OrientedCycle(tuple(down_to_u + up_from_v))
            return BalanceCertificate("unbalanced", witness_cycle=cycle, witness_gain=cycle_gain(g, cycle))
    # renormalise: accumulated products drift off the unit circle
    return BalanceCertificate("balanced", SwitchingFunction(tuple(z / abs(z) for z in zeta)))


def verify_certificate(g: GainGraph, cert: BalanceCertificate, tol: float = DEFAULT_TOL) -> bool:
    """Check a certificate against the graph it was issued for."""
    if cert.balanced:
        switched = apply_switching(g, cert.zeta)
        return all(is_positive_real(w, tol) for _, _, w in switched.edges())
    z = cycle_gain(g, cert.witness_cycle)
    return not is_positive_real(z, tol)


def is_balanced(g: GainGraph, tol: float = DEFAULT_TOL) -> bool:
    return balance_certificate(g, tol).balanced


def associated_complete_graph(g: GainGraph, cap: int = DEFAULT_CAP, tol: float = DEFAULT_TOL) -> GainGraph:
    """Complete gain graph on the same vertices whose gain ``u -> v`` is the
    distance matrix entry ``(u, v)``. Needs a distance compatible graph."""
    d = distance_matrix(g, cap, tol).entries
    gains = {(u, v): complex(d[u, v]) for u in range(g.n) for v in range(u + 1, g.n)}
    return GainGraph(g.n, gains)


def balance_via_distance_cospectrality(
    g: GainGraph, cap: int = DEFAULT_CAP, tol: float = DEFAULT_TOL, spectral_tol: float = 1e-8
) -> bool:
    """True iff the common distance matrix exists and is cospectral with the
    distance matrix of the magnitude graph."""
    try:
        d = distance_matrix(g, cap, tol)
    except NotDistanceCompatibleError:
        return False
    d_abs = distance_matrix(magnitude_graph(g), cap, tol)
    return cospectral(np.asarray(d), np.asarray(d_abs), spectral_tol)
