"""Seeded random gain graphs.

Every generated graph is connected: a random spanning tree is laid down
first and the remaining edges are drawn uniformly from the unused pairs.
The same model, sizes and seed always give the same graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BadEdgeCountError
from .graph import GainGraph, SwitchingFunction, apply_switching, build_graph

MODELS = ("unit", "annulus", "positive-real", "balanced")


@dataclass(frozen=True)
class RandomModel:
    """How edge gains are drawn.

    ``unit``: ``e^{i a}``; ``annulus``: ``r e^{i a}``; ``positive-real``:
    ``r``; ``balanced``: positive reals followed by a random unit switching.
    ``r`` is uniform in ``modulus`` and ``a`` uniform in ``argument``.
    """

    kind: str = "unit"
    modulus: tuple[float, float] = (0.5, 2.0)
    argument: tuple[float, float] = (-math.pi, math.pi)
    seed: int = 0

    def __post_init__(self):
        if self.kind not in MODELS:
            raise ValueError(f"unknown model {self.kind!r}; expected one of {MODELS}")
        lo, hi = self.modulus
        if not (0 < lo <= hi):
            raise ValueError(f"bad modulus bounds {self.modulus}")


def _random_topology(rng: np.random.Generator, n: int, m: int, bipartite: bool):
    perm = rng.permutation(n)
    if bipartite:
        side = np.zeros(n, dtype=int)
    tree = []
    for i in range(1, n):
        j = int(rng.integers(0, i))
        u, v = int(perm[i]), int(perm[j])
        tree.append((min(u, v), max(u, v)))
        if bipartite:
            side[u] = 1 - side[v]
    used = set(tree)
    candidates = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if (u, v) not in used and (not bipartite or side[u] != side[v])
    ]
    extra = m - len(tree)
    if extra > len(candidates):
        raise BadEdgeCountError(f"cannot place {m} edges on {n} vertices under the constraints")
    picks = rng.choice(len(candidates), size=extra, replace=False) if extra else []
    return tree + [candidates[int(i)] for i in sorted(picks)]


def random_switching(n: int, rng: np.random.Generator | int) -> SwitchingFunction:
    rng = np.random.default_rng(rng)
    return SwitchingFunction.from_angles(rng.uniform(-math.pi, math.pi, size=n))


def random_csg(model: RandomModel, n: int, m: int, bipartite: bool = False) -> GainGraph:
    """Random connected gain graph with ``n`` vertices and ``m`` edges.

    With ``bipartite=True`` extra edges only join the two colour classes of
    the spanning tree, so the result is bipartite.
    """
    if n < 1:
        raise BadEdgeCountError("need at least one vertex")
    if not (n - 1 <= m <= n * (n - 1) // 2):
        raise BadEdgeCountError(f"m={m} outside [{n - 1}, {n * (n - 1) // 2}] for n={n}")
    rng = np.random.default_rng(model.seed)
    pairs = _random_topology(rng, n, m, bipartite)
    lo, hi = model.modulus
    a_lo, a_hi = model.argument
    edges = []
    for u, v in pairs:
        if model.kind == "unit":
            z = np.exp(1j * rng.uniform(a_lo, a_hi))
        elif model.kind == "annulus":
            z = rng.uniform(lo, hi) * np.exp(1j * rng.uniform(a_lo, a_hi))
        else:
            z = complex(rng.uniform(lo, hi))
        edges.append((u, v, complex(z)))
    g = build_graph(n, edges)
    if model.kind == "balanced":
        g = apply_switching(g, random_switching(n, rng))
    return g
