"""Closed-form distance spectra of odd gain cycles.

For an odd cycle of length ``n = 2p + 1`` whose edge gains all have modulus
``k`` and whose cycle gain has argument ``theta``, the distance eigenvalues
are ``2 * sum_{r=1..p} r k^r cos(r theta_j)`` with
``theta_j = (2 pi j + theta) / n``. The arithmetico-geometric cosine sum has
a rational closed form in ``cos`` of multiples of ``theta``, and for unit
gains a further sine form.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import BadModulusError, EvenLengthError, SingularDenominatorError
from .graph import GainGraph, build_graph
from .spectra import Spectrum

SINGULAR_TOL = 1e-12
# spectra fall back to the direct sum once the closed form's rounding bound exceeds this
FALLBACK_REL_ERR = 1e-11
EPS = np.finfo(float).eps


@dataclass(frozen=True)
class CycleParams:
    n: int
    k: float = 1.0
    theta: float = 0.0

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 3 or self.n % 2 == 0:
            raise EvenLengthError(f"cycle length must be odd and >= 3, got {self.n}")
        if not (math.isfinite(self.k) and self.k > 0):
            raise BadModulusError(f"gain modulus must be positive, got {self.k}")
        if not math.isfinite(self.theta):
            raise ValueError(f"theta must be finite, got {self.theta}")
        object.__setattr__(self, "n", int(self.n))

    @property
    def p(self) -> int:
        return (self.n - 1) // 2

    def angles(self) -> np.ndarray:
        j = np.arange(self.n)
        return (2 * np.pi * j + self.theta) / self.n


def agp_sum_direct(p: int, k: float, theta: float) -> float:
    """``sum_{r=1..p} r k^r cos(r theta)`` by summation."""
    if p < 1:
        raise ValueError("p must be >= 1")
    return math.fsum(r * k**r * math.cos(r * theta) for r in range(1, p + 1))


def _agp_denominator(k: float, theta: float) -> float:
    return (1.0 - 2.0 * k * math.cos(theta) + k * k) ** 2


def _agp_numerator(p: int, k: float, theta: float) -> float:
    c = math.cos
    k2 = k * k
    return (
        p * k ** (p + 2) * c((p + 2) * theta)
        - k ** (p + 1) * (p * (2 * k2 + 1) + 1) * c((p + 1) * theta)
        + k ** (p + 2) * (p * (k2 + 2) + 2) * c(p * theta)
        - (p + 1) * k ** (p + 3) * c((p - 1) * theta)
        + k * (k2 + 1) * c(theta)
        - 2 * k2
    )


def agp_sum_closed(p: int, k: float, theta: float) -> float:
    """Closed form of :func:`agp_sum_direct`.

    Raises SingularDenominatorError when ``k == 1`` and ``theta`` is a
    multiple of ``2 pi`` (numerically), where the denominator vanishes.
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    den = _agp_denominator(k, theta)
    if abs(den) <= SINGULAR_TOL * (1 + k * k) ** 2:
        raise SingularDenominatorError(f"denominator vanishes at k={k}, theta={theta}")
    return _agp_numerator(p, k, theta) / den


def _agp_term_bound(p: int, k: float) -> float:
    k2 = k * k
    return (
        p * k ** (p + 2)
        + k ** (p + 1) * (p * (2 * k2 + 1) + 1)
        + k ** (p + 2) * (p * (k2 + 2) + 2)
        + (p + 1) * k ** (p + 3)
        + k * (k2 + 1)
        + 2 * k2
    )


def _agp_sum(p: int, k: float, theta: float) -> float:
    """Closed form where it is well conditioned, direct sum otherwise.

    Near ``k = 1, theta = 0 (mod 2 pi)`` the numerator and denominator both
    vanish and the closed form loses digits long before the denominator is
    exactly zero.
    """
    den = _agp_denominator(k, theta)
    if abs(den) > SINGULAR_TOL * (1 + k * k) ** 2:
        value = _agp_numerator(p, k, theta) / den
        err = 8 * EPS * _agp_term_bound(p, k) * max(1.0, (p + 2) * abs(theta)) / den
        if err <= FALLBACK_REL_ERR * (1 + abs(value)):
            return value
    return agp_sum_direct(p, k, theta)


def canonical_odd_cycle(n: int, k: float = 1.0, theta: float = 0.0) -> GainGraph:
    """Odd cycle ``0 -> 1 -> ... -> n-1 -> 0`` with gain ``k`` on the first
    ``n - 1`` edges and ``k e^{i theta}`` on the closing edge ``n-1 -> 0``."""
    params = CycleParams(n, k, theta)
    edges = [(j, j + 1, complex(params.k)) for j in range(params.n - 1)]
    edges.append((params.n - 1, 0, params.k * cmath.exp(1j * params.theta)))
    return build_graph(params.n, edges)


def cycle_distance_spectrum_closed(n: int, k: float = 1.0, theta: float = 0.0) -> Spectrum:
    params = CycleParams(n, k, theta)
    vals = [2.0 * _agp_sum(params.p, params.k, t) for t in params.angles()]
    return Spectrum(np.array(vals), 1e-8)


def _unit_sine_form(n: int, t: float) -> float:
    s = math.sin
    num = n * s(n * t / 2) - (n - 1) / 2 * s((n + 2) * t / 2) - (n + 1) / 2 * s((n - 2) * t / 2) - 2 * s(t / 2)
    return num / (4 * s(t / 2) ** 3)


def unit_cycle_spectrum_closed(n: int, theta: float = 0.0) -> Spectrum:
    """Distance spectrum of an odd cycle with unit-modulus gains, sine form.

    At ``theta_j`` congruent to 0 mod ``2 pi`` the sine form is 0/0 (the limit
    is ``p (p + 1)``); there, and close enough that the sine form's rounding
    bound is too large, the direct sum is used instead.
    """
    params = CycleParams(n, 1.0, theta)
    n = params.n
    vals = []
    for t in params.angles():
        s3 = abs(math.sin(t / 2)) ** 3
        if s3 > 0:
            value = _unit_sine_form(n, t)
            err = 8 * EPS * (2 * n + 2) * max(1.0, n * abs(t)) / (4 * s3)
            if err <= FALLBACK_REL_ERR * (1 + abs(value)):
                vals.append(value)
                continue
        vals.append(2.0 * agp_sum_direct(params.p, 1.0, t))
    return Spectrum(np.array(vals), 1e-8)
