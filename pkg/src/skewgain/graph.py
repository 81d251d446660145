"""Conjugate skew gain graphs: data model, switching and structural queries.

A gain graph here is a simple undirected graph on vertices ``0..n-1`` in which
every edge carries a nonzero complex gain for the orientation ``u -> v`` with
``u < v``. The gain of the reverse orientation is the complex conjugate and is
computed on demand, never stored, so the conjugation rule cannot drift.
"""

from __future__ import annotations

import cmath
import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import networkx as nx
import numpy as np

from .errors import (
    BadVertexError,
    DisconnectedError,
    DuplicateEdgeError,
    LengthMismatchError,
    NonUnitModulusError,
    NotAdjacentError,
    SelfLoopError,
    ZeroGainError,
)

ZERO_GAIN_FLOOR = 1e-12
UNIT_TOL = 1e-9


def _as_gain(value) -> complex:
    z = complex(value)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ZeroGainError(f"gain {value!r} is not finite")
    return z


class GainGraph:
    """Immutable simple graph with conjugate skew gains on its edges.

    Use :func:`build_graph` to construct one; it validates the edge list.
    """

    __slots__ = ("_n", "_gains", "_adj")

    def __init__(self, n: int, gains: dict[tuple[int, int], complex]):
        self._n = int(n)
        self._gains = dict(gains)
        adj: list[list[int]] = [[] for _ in range(self._n)]
        for u, v in self._gains:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = tuple(tuple(sorted(nb)) for nb in adj)

    def __setattr__(self, name, value):
        if hasattr(self, "_adj"):
            raise AttributeError("GainGraph is immutable")
        object.__setattr__(self, name, value)

    @property
    def n(self) -> int:
        return self._n

    @property
    def num_edges(self) -> int:
        return len(self._gains)

    def neighbors(self, u: int) -> tuple[int, ...]:
        self._check_vertex(u)
        return self._adj[u]

    def degree(self, u: int) -> int:
        return len(self.neighbors(u))

    def has_edge(self, u: int, v: int) -> bool:
        key = (u, v) if u < v else (v, u)
        return key in self._gains

    def gain(self, u: int, v: int) -> complex:
        """Gain of the oriented edge ``u -> v``."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u < v:
            z = self._gains.get((u, v))
            if z is not None:
                return z
        elif v < u:
            z = self._gains.get((v, u))
            if z is not None:
                return z.conjugate()
        raise NotAdjacentError(f"vertices {u} and {v} are not adjacent")

    def edges(self) -> Iterator[tuple[int, int, complex]]:
        """Yield ``(u, v, gain(u, v))`` with ``u < v``, in sorted order."""
        for (u, v) in sorted(self._gains):
            yield u, v, self._gains[(u, v)]

    def edge_list(self) -> list[tuple[int, int, complex]]:
        return list(self.edges())

    def with_gain(self, u: int, v: int, gain) -> "GainGraph":
        """Copy of the graph with the gain of ``u -> v`` replaced."""
        if not self.has_edge(u, v):
            raise NotAdjacentError(f"vertices {u} and {v} are not adjacent")
        z = _as_gain(gain)
        if abs(z) <= ZERO_GAIN_FLOOR:
            raise ZeroGainError(f"edge ({u},{v}) has zero gain")
        gains = dict(self._gains)
        if u < v:
            gains[(u, v)] = z
        else:
            gains[(v, u)] = z.conjugate()
        return GainGraph(self._n, gains)

    def _check_vertex(self, u: int) -> None:
        if not (0 <= u < self._n):
            raise BadVertexError(f"vertex {u} out of range 0..{self._n - 1}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, GainGraph):
            return NotImplemented
        return self._n == other._n and self._gains == other._gains

    def __hash__(self) -> int:
        return hash((self._n, tuple(sorted(self._gains.items(), key=lambda kv: kv[0]))))

    def __repr__(self) -> str:
        return f"GainGraph(n={self._n}, edges={self.edge_list()!r})"


def build_graph(n: int, edge_list: Iterable[tuple[int, int, complex]]) -> GainGraph:
    """Build a gain graph from ``(u, v, gain)`` triples, ``gain`` being the
    gain of ``u -> v``.

    Raises SelfLoopError, DuplicateEdgeError, ZeroGainError or BadVertexError.
    """
    n = int(n)
    if n < 0:
        raise BadVertexError("vertex count must be non-negative")
    gains: dict[tuple[int, int], complex] = {}
    for u, v, gain in edge_list:
        u, v = int(u), int(v)
        for w in (u, v):
            if not (0 <= w < n):
                raise BadVertexError(f"vertex {w} out of range 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        z = _as_gain(gain)
        if abs(z) <= ZERO_GAIN_FLOOR:
            raise ZeroGainError(f"edge ({u},{v}) has zero gain")
        key, z = ((u, v), z) if u < v else ((v, u), z.conjugate())
        if key in gains:
            raise DuplicateEdgeError(f"duplicate edge ({key[0]},{key[1]})")
        gains[key] = z
    return GainGraph(n, gains)


def gain(g: GainGraph, u: int, v: int) -> complex:
    return g.gain(u, v)


@dataclass(frozen=True)
class SwitchingFunction:
    """Unit-modulus value per vertex."""

    zeta: tuple[complex, ...]

    def __post_init__(self):
        zeta = tuple(complex(z) for z in self.zeta)
        for i, z in enumerate(zeta):
            if abs(abs(z) - 1.0) > UNIT_TOL:
                raise NonUnitModulusError(f"zeta[{i}]={z} is not of modulus one")
        object.__setattr__(self, "zeta", zeta)

    @classmethod
    def from_angles(cls, angles: Sequence[float]) -> "SwitchingFunction":
        return cls(tuple(cmath.exp(1j * a) for a in angles))

    def conjugate(self) -> "SwitchingFunction":
        return SwitchingFunction(tuple(z.conjugate() for z in self.zeta))

    def __len__(self) -> int:
        return len(self.zeta)

    def __getitem__(self, i: int) -> complex:
        return self.zeta[i]


def apply_switching(g: GainGraph, zeta) -> GainGraph:
    """Switch ``g`` by ``zeta``: the gain of ``u -> v`` becomes
    ``conj(zeta[u]) * gain(u, v) * zeta[v]``."""
    if not isinstance(zeta, SwitchingFunction):
        zeta = SwitchingFunction(tuple(zeta))
    if len(zeta) != g.n:
        raise LengthMismatchError(f"switching has {len(zeta)} values for {g.n} vertices")
    z = zeta.zeta
    return GainGraph(g.n, {(u, v): z[u].conjugate() * w * z[v] for u, v, w in g.edges()})


def magnitude_graph(g: GainGraph) -> GainGraph:
    """Same topology with every gain replaced by its modulus."""
    return GainGraph(g.n, {(u, v): complex(abs(w)) for u, v, w in g.edges()})


def is_connected(g: GainGraph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.n


def require_connected(g: GainGraph) -> None:
    if not is_connected(g):
        raise DisconnectedError("graph is not connected")


def is_bipartite(g: GainGraph) -> tuple[bool, list[int] | None]:
    """Two-colour the underlying graph.

    Returns ``(True, colours)`` with a 0/1 colour per vertex, or
    ``(False, None)`` when an odd cycle exists.
    """
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if colour[w] < 0:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return False, None
    return True, colour


def to_networkx(g: GainGraph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    for u, v, w in g.edges():
        G.add_edge(u, v, gain=w)
    return G


def blocks(g: GainGraph) -> list[frozenset[int]]:
    """Biconnected components (bridges included) as vertex sets.

    Ordered by their smallest edge. Every edge lies in exactly one block, and
    two blocks share at most one vertex, so the edges of a block are exactly
    the edges induced by its vertex set.
    """
    require_connected(g)
    found = []
    for comp in nx.biconnected_component_edges(to_networkx(g)):
        key = min(tuple(sorted(e)) for e in comp)
        verts = frozenset(x for e in comp for x in e)
        found.append((key, verts))
    found.sort(key=lambda kv: kv[0])
    return [verts for _, verts in found]


def induced_subgraph(g: GainGraph, vertices: Iterable[int]) -> tuple[GainGraph, list[int]]:
    """Subgraph induced by ``vertices``, relabelled densely in sorted order.

    Returns the subgraph and the list mapping new index -> old index.
    """
    old = sorted(set(vertices))
    index = {v: i for i, v in enumerate(old)}
    gains = {}
    for u, v, w in g.edges():
        if u in index and v in index:
            gains[(index[u], index[v])] = w
    return GainGraph(len(old), gains), old


def adjacency_matrix(g: GainGraph) -> np.ndarray:
    """Hermitian adjacency matrix; entry ``(i, j)`` is the gain of ``i -> j``."""
    a = np.zeros((g.n, g.n), dtype=complex)
    for u, v, w in g.edges():
        a[u, v] = w
        a[v, u] = w.conjugate()
    return a
