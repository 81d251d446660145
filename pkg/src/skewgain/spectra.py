"""Hermitian spectra and characteristic polynomials.

Two independent routes to the adjacency characteristic polynomial are
provided: a trace recurrence on the matrix (:func:`char_poly`) and a sum over
elementary subgraphs of the graph (:func:`char_poly_elementary`).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatchError,
    DimensionTooLargeError,
    NoConvergenceError,
    NotHermitianError,
    PrecisionLossError,
)
from .graph import GainGraph

HERMITIAN_TOL = 1e-8
CHARPOLY_MAX_N = 64
ELEMENTARY_MAX_N = 12


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigenvalues sorted ascending."""

    values: np.ndarray
    tolerance: float = 1e-9

    def __post_init__(self):
        vals = np.sort(np.asarray(self.values, dtype=float))
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __array__(self, dtype=None, copy=None):
        return self.values if dtype is None else self.values.astype(dtype)

    def allclose(self, other, tol: float) -> bool:
        b = np.sort(np.asarray(other, dtype=float))
        return self.values.shape == b.shape and bool(np.all(np.abs(self.values - b) <= tol))

    def to_dict(self) -> dict:
        return {"values": [float(x) for x in self.values], "tolerance": self.tolerance}


@dataclass(frozen=True, eq=False)
class CharPoly:
    """Monic coefficients ``a_0 = 1, a_1, ..., a_n`` of ``det(xI - M)``,
    highest degree first (``numpy.polyval`` order)."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coeffs)
        c = c.astype(float) if not np.iscomplexobj(c) else c.astype(complex)
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        return np.polyval(self.coeffs, x)

    def roots(self) -> np.ndarray:
        return np.roots(self.coeffs)

    def allclose(self, other, tol: float) -> bool:
        b = np.asarray(other.coeffs if isinstance(other, CharPoly) else other)
        return self.coeffs.shape == b.shape and bool(np.all(np.abs(self.coeffs - b) <= tol))

    def to_dict(self) -> dict:
        if np.iscomplexobj(self.coeffs):
            return {"coeffs": [[c.real, c.imag] for c in self.coeffs]}
        return {"coeffs": [float(c) for c in self.coeffs]}


def _square(m) -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {a.shape}")
    return a


def _require_hermitian(a: np.ndarray, tol: float) -> None:
    dev = float(np.max(np.abs(a - a.conj().T), initial=0.0))
    if dev > tol:
        raise NotHermitianError(f"matrix deviates from Hermitian by {dev:.3g}")


def hermitian_eigenvalues(m, tol: float = HERMITIAN_TOL) -> Spectrum:
    """Real eigenvalues of a Hermitian matrix, ascending.

    The reported tolerance is ``1e-9 * (1 + n * max|m_ij|)``.
    """
    a = _square(m)
    _require_hermitian(a, tol)
    n = a.shape[0]
    if n == 0:
        return Spectrum(np.zeros(0))
    scale = float(np.max(np.abs(a))) * n
    try:
        vals = np.linalg.eigvalsh((a + a.conj().T) / 2)
    except np.linalg.LinAlgError as exc:
        raise NoConvergenceError(f"eigensolver did not converge: {exc}") from exc
    return Spectrum(vals, 1e-9 * (1.0 + scale))


def char_poly(m, hermitian_tol: float = 1e-8) -> CharPoly:
    """Characteristic polynomial by the Faddeev-LeVerrier trace recurrence.

    For Hermitian input the coefficients are real; the imaginary residue is
    dropped when below ``hermitian_tol`` (relative to ``1 + |a_k|``) and
    raises PrecisionLossError otherwise.
    """
    a = _square(m)
    n = a.shape[0]
    if n > CHARPOLY_MAX_N:
        raise DimensionTooLargeError(f"char_poly limited to n <= {CHARPOLY_MAX_N}, got {n}")
    coeffs = np.zeros(n + 1, dtype=complex)
    coeffs[0] = 1.0
    eye = np.eye(n, dtype=complex)
    mk = np.zeros((n, n), dtype=complex)
    for k in range(1, n + 1):
        mk = a @ mk + coeffs[k - 1] * eye
        coeffs[k] = -np.trace(a @ mk) / k
    if is_hermitian_array(a, HERMITIAN_TOL):
        resid = np.abs(coeffs.imag) / (1.0 + np.abs(coeffs.real))
        if np.any(resid > hermitian_tol):
            raise PrecisionLossError(
                f"imaginary residue {float(resid.max()):.3g} in coefficients of a Hermitian matrix"
            )
        return CharPoly(coeffs.real.copy())
    return CharPoly(coeffs)


def is_hermitian_array(a: np.ndarray, tol: float) -> bool:
    return bool(np.all(np.abs(a - a.conj().T) <= tol))


def _cycles_from(g: GainGraph, v: int, blocked: int):
    """Cycles whose smallest vertex is ``v`` avoiding the ``blocked`` bitmask.

    Each undirected cycle is yielded once as ``(vertex list, gain)`` with the
    gain taken along the listed orientation.
    """
    path = [v]
    gains = [1 + 0j]

    def extend(used: int):
        end = path[-1]
        for x in g.neighbors(end):
            if x == v and len(path) >= 3 and path[1] < path[-1]:
                yield list(path), gains[-1] * g.gain(end, v)
            elif x > v and not (used >> x) & 1:
                path.append(x)
                gains.append(gains[-1] * g.gain(end, x))
                yield from extend(used | (1 << x))
                path.pop()
                gains.pop()

    yield from extend(blocked | (1 << v))


def char_poly_elementary(g: GainGraph) -> CharPoly:
    """Adjacency characteristic polynomial from elementary subgraphs.

    An elementary subgraph has only single edges and cycles as components.
    The coefficient of ``x^(n-i)`` sums, over elementary subgraphs covering
    ``i`` vertices, ``(-1)^components * 2^cycles`` times the product of
    ``|gain|^2`` over edge components and of ``Re(cycle gain)`` over cycle
    components. Each subgraph is assembled once, by attaching to the smallest
    undecided vertex either nothing, an edge, or a cycle through it.
    """
    n = g.n
    if n > ELEMENTARY_MAX_N:
        raise DimensionTooLargeError(f"elementary enumeration limited to n <= {ELEMENTARY_MAX_N}, got {n}")
    coeffs = [0.0] * (n + 1)

    def assemble(v: int, covered: int, order: int, weight: float):
        while v < n and (covered >> v) & 1:
            v += 1
        if v == n:
            coeffs[order] += weight
            return
        assemble(v + 1, covered, order, weight)
        for w in g.neighbors(v):
            if w > v and not (covered >> w) & 1:
                assemble(v + 1, covered | (1 << v) | (1 << w), order + 2, -weight * abs(g.gain(v, w)) ** 2)
        for cyc, z in _cycles_from(g, v, covered):
            mask = covered
            for x in cyc:
                mask |= 1 << x
            assemble(v + 1, mask, order + len(cyc), -2.0 * weight * z.real)

    assemble(0, 0, 0, 1.0)
    return CharPoly(np.array(coeffs))


def cospectral(a, b, tol: float = 1e-8) -> bool:
    """True iff the sorted spectra of two Hermitian matrices agree within ``tol``."""
    a, b = _square(a), _square(b)
    if a.shape != b.shape:
        raise DimensionMismatchError(f"shapes {a.shape} and {b.shape} differ")
    sa, sb = hermitian_eigenvalues(a), hermitian_eigenvalues(b)
    return sa.allclose(sb.values, tol)
