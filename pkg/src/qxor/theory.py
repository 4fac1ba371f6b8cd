"""Limiting distribution curves of the truth probability and cycle-count limits.

All curves live on the density axis c = clauses per existential variable.
Below c = 1/2 they are the no-bad-cycle probabilities of the associated
random labelled multigraph, i.e. exp(-lambda) for the limiting expected
number of bad cycles lambda; past c = 1/2 every curve is 0.

Closed forms exist for three regimes:

* ``h_inf``  -- exp(c) * (1-2c)^(1/2), no cycles at all (also the full-rank
  limit and the many-universal-variables limit),
* ``h_0``    -- exp(c/2) * (1-2c)^(1/4), plain satisfiability (half of all
  cycles are bad),
* ``h_1``    -- exp(c) * (1-2c)^(1/2) * (1-4c^2)^(-1/8), one universal
  variable per clause drawn from a single variable.

For a single universal variable per clause drawn from m variables, the
limit ``h_m`` has no simple closed form; ``lambda_m1`` evaluates its bad
cycle count as a series over cycle lengths with a rigorous geometric tail
bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InputError

CURVE_IDS = ("h0", "h1", "hm", "hinf")

_HM_CLAMP = 0.5 - 1e-6
_HM_TOL = 1e-10


def _check_density(c: float) -> float:
    c = float(c)
    if c < 0 or math.isnan(c):
        raise InputError(f"density must be nonnegative, got {c}")
    return c


def h_inf(c: float) -> float:
    """exp(c) * (1-2c)^(1/2) on [0, 1/2], else 0."""
    c = _check_density(c)
    if c >= 0.5:
        return 0.0
    return math.exp(c) * math.sqrt(1.0 - 2.0 * c)


def h_0(c: float) -> float:
    """exp(c/2) * (1-2c)^(1/4) on [0, 1/2], else 0."""
    c = _check_density(c)
    if c >= 0.5:
        return 0.0
    return math.exp(0.5 * c) * (1.0 - 2.0 * c) ** 0.25


def h_1(c: float) -> float:
    """exp(c) * (1-2c)^(1/2) * (1-4c^2)^(-1/8) on [0, 1/2), else 0.

    Evaluated as exp(c) * (1-2c)^(3/8) * (1+2c)^(-1/8), which stays finite
    at the right endpoint.
    """
    c = _check_density(c)
    if c >= 0.5:
        return 0.0
    return math.exp(c) * (1.0 - 2.0 * c) ** 0.375 * (1.0 + 2.0 * c) ** -0.125


def lambda_inf(c: float) -> float:
    """Limit of the expected number of cycles: -ln(1-2c)/2 - c, for c < 1/2."""
    c = _check_density(c)
    if c >= 0.5:
        raise InputError("cycle expectation diverges at c >= 1/2")
    return -0.5 * math.log1p(-2.0 * c) - c


def lambda_11(c: float) -> float:
    """Closed form of the m = 1 bad-cycle limit: -ln(1-2c)/2 + ln(1-4c^2)/8 - c."""
    c = _check_density(c)
    if c >= 0.5:
        raise InputError("cycle expectation diverges at c >= 1/2")
    return -0.5 * math.log1p(-2.0 * c) + 0.125 * math.log1p(-4.0 * c * c) - c


def _parity_weights(m: int) -> np.ndarray:
    """w_k = C(m-1, k) / 2^(m-1) for k in 0..m-1."""
    if m <= 1000:
        return np.array([math.comb(m - 1, k) for k in range(m)], dtype=float) * (
            2.0 ** -(m - 1)
        )
    logs = [
        math.lgamma(m) - math.lgamma(k + 1) - math.lgamma(m - k) - (m - 1) * math.log(2.0)
        for k in range(m)
    ]
    return np.exp(np.array(logs))


def lambda_m1(c: float, m: int, tol: float) -> float:
    """Series value of the bad-cycle limit for one universal variable per
    clause out of m, truncated once the geometric tail bound drops below tol.

    Every odd cycle length contributes (2c)^l / (2l). An even length l
    contributes (2c)^l/(4l) * (2 - S(m, l)) where S is the probability
    that each of the m variables is hit an even number of times by l
    uniform draws; S is the binomial average of ((m-2k)/m)^l, kept as
    running powers so each term costs O(m). Terms past index T are
    bounded by (2c)^(T+1) / (2(T+1)(1-2c)). Cost grows like 1/(1-2c)
    near the right endpoint.
    """
    c = _check_density(c)
    if not isinstance(m, (int, np.integer)) or m < 1:
        raise InputError(f"need integer m >= 1, got {m!r}")
    if tol <= 0:
        raise InputError("tolerance must be positive")
    if c >= 0.5:
        raise InputError("series diverges at c >= 1/2")
    if c == 0.0:
        return 0.0
    x = 2.0 * c
    w = _parity_weights(m)
    ratio = (m - 2.0 * np.arange(m)) / m
    base = (x * ratio) ** 2
    powers = base.copy()  # (x * ratio)^l for the current even l
    xl = x * x  # x^l
    total = 0.0
    l = 2
    while True:
        if l % 2 == 0:
            total += (2.0 * xl - float(w @ powers)) / (4.0 * l)
        else:
            total += xl / (2.0 * l)
        xl_next = xl * x
        if xl_next / (2.0 * (l + 1) * (1.0 - x)) < tol:
            break
        l += 1
        xl = xl_next
        if l % 2 == 0:
            powers *= base
    return total


def h_m(c: float, m: int) -> float:
    """exp(-lambda_m1(c, m)) on [0, 1/2), else 0.

    Densities inside [1/2 - 1e-6, 1/2) are clamped to the left end of
    that sliver, where the series is still affordable.
    """
    c = _check_density(c)
    if c >= 0.5:
        return 0.0
    return math.exp(-lambda_m1(min(c, _HM_CLAMP), m, _HM_TOL))


@dataclass(frozen=True)
class DensityGrid:
    """Inclusive arithmetic grid of densities."""

    c_from: float
    c_to: float
    c_step: float

    def __post_init__(self):
        if not (0 <= self.c_from <= self.c_to):
            raise InputError("need 0 <= c_from <= c_to")
        if self.c_step <= 0:
            raise InputError("c_step must be positive")

    def values(self) -> list[float]:
        out = []
        eps = 1e-9 * max(self.c_step, 1.0)
        i = 0
        while True:
            c = self.c_from + i * self.c_step
            if c > self.c_to + eps:
                return out
            out.append(c)
            i += 1


@dataclass(frozen=True)
class TheoryCurve:
    curve_id: str
    points: tuple[tuple[float, float], ...]


def tabulate(curve_id: str, grid: DensityGrid, m: int | None = None) -> TheoryCurve:
    """Evaluate the named curve over the grid.

    ``curve_id`` is one of h0, h1, hinf, hm; hm needs ``m`` and is
    labelled ``hm_<m>`` in the result.
    """
    if curve_id not in CURVE_IDS:
        raise InputError(f"unknown curve {curve_id!r}, expected one of {CURVE_IDS}")
    if curve_id == "hm":
        if m is None or m < 1:
            raise InputError("curve hm needs m >= 1")
        fn = lambda c: h_m(c, m)  # noqa: E731
        label = f"hm_{m}"
    else:
        fn = {"h0": h_0, "h1": h_1, "hinf": h_inf}[curve_id]
        label = curve_id
    return TheoryCurve(label, tuple((c, fn(c)) for c in grid.values()))
