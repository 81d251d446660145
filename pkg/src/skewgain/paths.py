"""Shortest-path gains and distance compatibility.

Shortest paths are counted in edges. For each ordered pair the set of
distinct gains over all shortest oriented paths is built by dynamic
programming on the BFS layering from the source: a vertex in layer ``L``
takes the union of its layer ``L-1`` neighbours' sets, each multiplied by the
connecting edge gain. Sets are deduplicated at every vertex, so the work
scales with the number of distinct gains rather than the number of paths.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import BadVertexError, CapExceededError, DisconnectedError
from .graph import GainGraph

DEFAULT_CAP = 4096
DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class GainSet:
    values: tuple[complex, ...]
    dedup_tolerance: float = DEFAULT_TOL
    truncated: bool = False

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    @property
    def is_singleton(self) -> bool:
        return len(self.values) == 1


def _same(a: complex, b: complex, tol: float) -> bool:
    return abs(a - b) <= tol * max(1.0, abs(a))


def _dedup(values, tol: float) -> list[complex]:
    out: list[complex] = []
    for z in values:
        if not any(_same(w, z, tol) for w in out):
            out.append(z)
    return out


def bfs_distances(g: GainGraph, src: int) -> list[int]:
    """Hop distance from ``src`` to every vertex."""
    if not (0 <= src < g.n):
        raise BadVertexError(f"vertex {src} out of range")
    dist = [-1] * g.n
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    if min(dist, default=0) < 0:
        raise DisconnectedError(f"vertex {dist.index(-1)} unreachable from {src}")
    return dist


def gain_sets_from(
    g: GainGraph, src: int, cap: int = DEFAULT_CAP, tol: float = DEFAULT_TOL
) -> tuple[list[int], list[list[complex]]]:
    """Distances and shortest-path gain sets from ``src`` to every vertex.

    The set at ``src`` itself is ``[1]`` (the empty path).
    """
    dist = bfs_distances(g, src)
    order = sorted(range(g.n), key=lambda v: (dist[v], v))
    sets: list[list[complex]] = [[] for _ in range(g.n)]
    sets[src] = [1 + 0j]
    for v in order[1:]:
        merged: list[complex] = []
        for x in g.neighbors(v):
            if dist[x] == dist[v] - 1:
                w = g.gain(x, v)
                for z in sets[x]:
                    z = z * w
                    if not any(_same(y, z, tol) for y in merged):
                        merged.append(z)
                        if len(merged) > cap:
                            raise CapExceededError(
                                f"more than {cap} distinct shortest-path gains "
                                f"from {src} to {v}"
                            )
        sets[v] = merged
    return dist, sets


def shortest_path_gain_set(
    g: GainGraph, u: int, v: int, cap: int = DEFAULT_CAP, tol: float = DEFAULT_TOL
) -> GainSet:
    """Distinct gains of the shortest oriented paths from ``u`` to ``v``."""
    if u == v:
        raise BadVertexError("shortest_path_gain_set needs two distinct vertices")
    _, sets = gain_sets_from(g, u, cap, tol)
    return GainSet(tuple(sets[v]), tol)


def lex_less(a: complex, b: complex, tol: float = DEFAULT_TOL) -> bool:
    """Lexicographic ``a < b`` on the complex plane: real part first, then
    imaginary part. Real parts within ``tol`` (relative) count as equal."""
    if abs(a.real - b.real) <= tol * max(1.0, abs(a.real), abs(b.real)):
        return a.imag < b.imag
    return a.real < b.real


def lex_extrema(values, tol: float = DEFAULT_TOL) -> tuple[complex, complex]:
    values = list(values)
    if not values:
        raise ValueError("empty gain set")
    hi = lo = values[0]
    for z in values[1:]:
        if lex_less(hi, z, tol):
            hi = z
        if lex_less(z, lo, tol):
            lo = z
    return hi, lo


def gain_extrema(
    g: GainGraph, u: int, v: int, cap: int = DEFAULT_CAP, tol: float = DEFAULT_TOL
) -> tuple[complex, complex]:
    """``(max, min)`` of the shortest-path gain set in lexicographic order."""
    return lex_extrema(shortest_path_gain_set(g, u, v, cap, tol).values, tol)


def is_positive_real(z: complex, tol: float = DEFAULT_TOL) -> bool:
    return abs(z.imag) <= tol * abs(z) and z.real > 0


def _flags(values, tol: float) -> tuple[bool, bool]:
    ref = values[0]
    arg_ok = all(is_positive_real(z / ref, tol) for z in values[1:])
    m = abs(ref)
    mod_ok = all(abs(abs(z) - m) <= tol * max(m, abs(z)) for z in values[1:])
    return arg_ok, mod_ok


def _witness(values, tol: float, which: str):
    ref = values[0]
    for z in values[1:]:
        if which == "argument_wise" and not is_positive_real(z / ref, tol):
            return ref, z
        if which == "modulus_wise" and abs(abs(z) - abs(ref)) > tol * max(abs(ref), abs(z)):
            return ref, z
    return None


def pair_compatibility(
    g: GainGraph, u: int, v: int, cap: int = DEFAULT_CAP, tol: float = DEFAULT_TOL
) -> tuple[bool, bool]:
    """``(argument_wise, modulus_wise)`` for the pair ``u, v``.

    Argument-wise: every ratio of two shortest-path gains is a positive real.
    Modulus-wise: all shortest-path gains have the same modulus.
    """
    return _flags(shortest_path_gain_set(g, u, v, cap, tol).values, tol)


@dataclass
class CompatibilityReport:
    per_pair: dict[tuple[int, int], tuple[bool, bool]]
    graph_argument_wise: bool
    graph_modulus_wise: bool
    # property name -> (pair, (gain, gain)); only failed properties appear
    witnesses: dict[str, tuple[tuple[int, int], tuple[complex, complex]]] = field(
        default_factory=dict
    )

    @property
    def graph_distance_compatible(self) -> bool:
        return self.graph_argument_wise and self.graph_modulus_wise

    def pair_compatible(self, u: int, v: int) -> bool:
        a, m = self.per_pair[(u, v)]
        return a and m

    def first_incompatible_pair(self) -> tuple[int, int] | None:
        for (u, v), (a, m) in sorted(self.per_pair.items()):
            if u < v and not (a and m):
                return (u, v)
        return None

    def to_dict(self) -> dict:
        return {
            "argument_wise": self.graph_argument_wise,
            "modulus_wise": self.graph_modulus_wise,
            "distance_compatible": self.graph_distance_compatible,
            "witnesses": {
                k: {"pair": list(pair), "gains": [[z.real, z.imag] for z in zs]}
                for k, (pair, zs) in self.witnesses.items()
            },
        }


def all_gain_sets(g: GainGraph, cap: int = DEFAULT_CAP, tol: float = DEFAULT_TOL):
    """Distance rows and gain sets from every source, ordered by source."""
    dists, sets = [], []
    for s in range(g.n):
        d, gs = gain_sets_from(g, s, cap, tol)
        dists.append(d)
        sets.append(gs)
    return dists, sets


def report_from_sets(sets, tol: float = DEFAULT_TOL) -> CompatibilityReport:
    n = len(sets)
    per_pair = {}
    witnesses = {}
    all_arg = all_mod = True
    for u in range(n):
        for v in range(u + 1, n):
            values = sets[u][v]
            a, m = _flags(values, tol)
            per_pair[(u, v)] = per_pair[(v, u)] = (a, m)
            for ok, name in ((a, "argument_wise"), (m, "modulus_wise")):
                if not ok and name not in witnesses:
                    witnesses[name] = ((u, v), _witness(values, tol, name))
            all_arg &= a
            all_mod &= m
    return CompatibilityReport(per_pair, all_arg, all_mod, witnesses)


def compatibility_report(
    g: GainGraph, cap: int = DEFAULT_CAP, tol: float = DEFAULT_TOL
) -> CompatibilityReport:
    """Argument-wise / modulus-wise compatibility of every pair.

    Pairs are evaluated once with ``u < v`` and mirrored; the gain set from
    ``v`` to ``u`` is the conjugate of the set from ``u`` to ``v``, which
    gives the same flags.
    """
    _, sets = all_gain_sets(g, cap, tol)
    return report_from_sets(sets, tol)
