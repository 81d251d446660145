"""Complex distance matrices of gain graphs.

Entry ``(u, v)`` is a shortest-path gain from ``u`` to ``v`` times the hop
distance. The ``max`` and ``min`` variants pick the lexicographic extremum of
the gain set independently for every ordered pair, so they need not be
Hermitian when some pair has several shortest-path gains. The common matrix
exists only for distance compatible graphs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotDistanceCompatibleError
from .graph import GainGraph, require_connected
from .paths import DEFAULT_CAP, DEFAULT_TOL, all_gain_sets, lex_extrema, report_from_sets

KINDS = ("max", "min", "compatible")


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    entries: np.ndarray
    kind: str

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        entries = np.array(self.entries, dtype=complex)
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    @property
    def hermitian(self) -> bool:
        return is_hermitian(self.entries)

    def __array__(self, dtype=None, copy=None):
        return self.entries if dtype is None else self.entries.astype(dtype)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "kind": self.kind,
            "entries": [[z.real, z.imag] for z in self.entries.ravel()],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "DistanceMatrix":
        n = int(data["n"])
        flat = np.array([complex(re, im) for re, im in data["entries"]], dtype=complex)
        return cls(flat.reshape(n, n), data["kind"])


def is_hermitian(m, tol: float = 1e-9) -> bool:
    """True iff ``m[v, u] == conj(m[u, v])`` within ``tol`` for all pairs."""
    a = np.asarray(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        return False
    return bool(np.all(np.abs(a - a.conj().T) <= tol))


def _extremal_matrix(g: GainGraph, which: str, cap: int, tol: float) -> DistanceMatrix:
    require_connected(g)
    dists, sets = all_gain_sets(g, cap, tol)
    pick = 0 if which == "max" else 1
    out = np.zeros((g.n, g.n), dtype=complex)
    for u in range(g.n):
        for v in range(g.n):
            if u != v:
                out[u, v] = lex_extrema(sets[u][v], tol)[pick] * dists[u][v]
    return DistanceMatrix(out, which)


def distance_matrix_max(g: GainGraph, cap: int = DEFAULT_CAP, tol: float = DEFAULT_TOL) -> DistanceMatrix:
    return _extremal_matrix(g, "max", cap, tol)


def distance_matrix_min(g: GainGraph, cap: int = DEFAULT_CAP, tol: float = DEFAULT_TOL) -> DistanceMatrix:
    return _extremal_matrix(g, "min", cap, tol)


def distance_matrix(g: GainGraph, cap: int = DEFAULT_CAP, tol: float = DEFAULT_TOL) -> DistanceMatrix:
    """The common distance matrix of a distance compatible graph.

    Raises NotDistanceCompatibleError carrying the first pair (in index
    order) with more than one shortest-path gain.
    """
    require_connected(g)
    dists, sets = all_gain_sets(g, cap, tol)
    report = report_from_sets(sets, tol)
    bad = report.first_incompatible_pair()
    if bad is not None:
        raise NotDistanceCompatibleError(bad)
    out = np.zeros((g.n, g.n), dtype=complex)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            z = sets[u][v][0] * dists[u][v]
            out[u, v] = z
            out[v, u] = z.conjugate()
    return DistanceMatrix(out, "compatible")
