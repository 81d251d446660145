import cmath
import math
from itertools import combinations

import numpy as np
import pytest

from skewgain import BadEdgeCountError, RandomModel, build_graph, random_csg

I = 1j


def fig1_graph():
    # v1..v4 -> 0..3
    return build_graph(4, [(0, 1, 1), (1, 2, 1 + I), (2, 3, 1), (3, 0, 1 - I), (0, 2, 1)])


def fig2_graph(theta=0.7):
    e = cmath.exp(1j * theta)
    return build_graph(4, [(0, 1, e), (1, 2, 2 / e), (2, 3, 3 / e), (3, 0, 4 * e)])


def fig3_graph():
    return build_graph(4, [(0, 1, 1 + I), (1, 2, I), (2, 3, 1 - I), (3, 0, -I), (0, 2, -1 + I)])


S2 = math.sqrt(2)
FIG3_D = np.array(
    [
        [0, 1 + I, -1 + I, I],
        [1 - I, 0, I, 2 * (1 + I)],
        [-(1 + I), -I, 0, 1 - I],
        [-I, 2 * (1 - I), 1 + I, 0],
    ]
)
FIG3_D_ABS = np.array(
    [
        [0, S2, S2, 1],
        [S2, 0, 1, 2 * S2],
        [S2, 1, 0, S2],
        [1, 2 * S2, S2, 0],
    ]
)
FIG3_CHARPOLY = [1, 0, -16, -24, -7]


@pytest.fixture
def fig1():
    return fig1_graph()


@pytest.fixture
def fig2():
    return fig2_graph()


@pytest.fixture
def fig3():
    return fig3_graph()


def brute_shortest_path_gains(g, u, v):
    """All shortest u -> v path gains by exhaustive DFS over simple paths."""
    best = [math.inf]
    found = []

    def dfs(x, seen, z, length):
        if length > best[0]:
            return
        if x == v:
            if length < best[0]:
                best[0] = length
                found.clear()
            found.append(z)
            return
        for w in g.neighbors(x):
            if w not in seen:
                dfs(w, seen | {w}, z * g.gain(x, w), length + 1)

    dfs(u, {u}, 1 + 0j, 0)
    return best[0], found


def brute_blocks(g):
    """Blocks as vertex sets via the pairwise 'edges on a common cycle' relation,
    using only vertex-removal connectivity checks."""
    edges = [(u, v) for u, v, _ in g.edges()]

    def connected_without(vertex, a, b):
        seen = {a}
        stack = [a]
        while stack:
            x = stack.pop()
            for w in g.neighbors(x):
                if w != vertex and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return b in seen

    # two edges sharing vertex c lie in one block iff their other ends stay
    # connected once c is removed
    parent = list(range(len(edges)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in combinations(range(len(edges)), 2):
        common = set(edges[i]) & set(edges[j])
        if len(common) == 1:
            c = common.pop()
            a = edges[i][0] if edges[i][1] == c else edges[i][1]
            b = edges[j][0] if edges[j][1] == c else edges[j][1]
            if connected_without(c, a, b):
                parent[find(i)] = find(j)
    groups = {}
    for i, e in enumerate(edges):
        groups.setdefault(find(i), set()).update(e)
    return sorted((frozenset(s) for s in groups.values()), key=lambda s: sorted(s))


MIXED_MODELS = ("unit", "annulus", "positive-real", "balanced")


def random_graph(seed, n_range=(3, 8), model=None, density=None, bipartite=False):
    """Seeded connected graph with a seed-derived model, size and density."""
    rng = np.random.default_rng(10_000 + seed)
    n = int(rng.integers(n_range[0], n_range[1] + 1))
    kind = model or MIXED_MODELS[seed % len(MIXED_MODELS)]
    max_m = n * (n - 1) // 2
    if bipartite:
        max_m = (n // 2) * (n - n // 2)
    if density is None:
        m = int(rng.integers(n - 1, max_m + 1))
    else:
        m = max(n - 1, min(max_m, int(round(density * max_m))))
    for attempt in range(20):
        try:
            return random_csg(RandomModel(kind=kind, seed=seed * 31 + attempt), n, m, bipartite=bipartite)
        except BadEdgeCountError:
            # an unbalanced bipartition can leave too few cross pairs
            m = max(n - 1, m - 1)
    raise RuntimeError("could not generate graph")
