"""Special functions and quadrature used by every other module.

All frequencies are dimensionless: the unit is fixed by the unmodulated
biphoton temporal width, so the unmodulated spectral bandwidth is one unit.
Everything here is a pure function of its inputs and safe to call
concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import DimensionError, RangeError

# Validated argument range for the integer-order Bessel evaluation below.
BESSEL_MAX_ORDER = 200
BESSEL_MAX_ARG = 50.0


@dataclass(frozen=True)
class FrequencyGrid:
    """Uniform sampling of detuning from band center with trapezoid weights.

    The point count is kept odd so the center frequency is itself a sample.
    """

    center: float
    half_width: float
    n_points: int

    def __post_init__(self):
        if not self.half_width > 0:
            raise ValueError("half_width must be positive")
        if self.n_points < 3 or self.n_points % 2 == 0:
            raise ValueError("n_points must be an odd integer >= 3")

    @cached_property
    def points(self) -> np.ndarray:
        return np.linspace(self.center - self.half_width,
                           self.center + self.half_width, self.n_points)

    @property
    def spacing(self) -> float:
        return 2.0 * self.half_width / (self.n_points - 1)

    @cached_property
    def weights(self) -> np.ndarray:
        w = np.full(self.n_points, self.spacing)
        w[0] *= 0.5
        w[-1] *= 0.5
        return w

    def covers(self, lo: float, hi: float) -> bool:
        return (self.center - self.half_width <= lo
                and self.center + self.half_width >= hi)


def integrate(values, grid: FrequencyGrid):
    """Trapezoidal quadrature of sampled values over the grid."""
    values = np.asarray(values)
    if values.shape != (grid.n_points,):
        raise DimensionError(
            f"expected {grid.n_points} samples, got shape {values.shape}")
    total = np.dot(grid.weights, values)
    return total if np.iscomplexobj(values) else float(total)


def _bessel_row(x: float, nmax: int) -> np.ndarray:
    """J_0(x) .. J_nmax(x) for x >= 0 by Miller's backward recurrence.

    The downward recurrence is started well above max(nmax, x) with an
    arbitrary seed and the whole row is normalized afterwards with
    J_0 + 2*sum_k J_{2k} = 1.
    """
    out = np.zeros(nmax + 1)
    if x == 0.0:
        out[0] = 1.0
        return out
    if x < 1e-8:
        # leading series term; the 2/x factor in the recurrence would
        # overflow here, and the O(x^2) correction is below machine epsilon
        term = 1.0
        for n in range(nmax + 1):
            out[n] = term
            term *= x / (2.0 * (n + 1))
            if term == 0.0:
                break
        return out

    # Start high enough that the seeded recurrence has converged by n = nmax.
    m = max(nmax, int(x)) + 1
    m += int(math.sqrt(40.0 * m)) + 10
    if m % 2:
        m += 1

    two_over_x = 2.0 / x
    j_up = 0.0        # J_{k+1}
    j_cur = 1e-30     # J_k, seeded at k = m
    norm = 2.0 * j_cur if m % 2 == 0 else 0.0
    for k in range(m, 0, -1):
        j_down = k * two_over_x * j_cur - j_up
        j_up, j_cur = j_cur, j_down      # j_cur is now J_{k-1}
        if abs(j_cur) > 1e100:
            j_cur *= 1e-100
            j_up *= 1e-100
            out *= 1e-100
            norm *= 1e-100
        n = k - 1
        if n <= nmax:
            out[n] = j_cur
        if n % 2 == 0:
            norm += j_cur if n == 0 else 2.0 * j_cur
    return out / norm


def bessel_j(n: int, x: float) -> float:
    """Integer-order Bessel function J_n(x).

    Validated for |n| <= 200 and |x| <= 50; arguments outside that box
    raise RangeError.
    """
    if abs(n) > BESSEL_MAX_ORDER:
        raise RangeError(f"order |{n}| exceeds validated maximum "
                         f"{BESSEL_MAX_ORDER}")
    if abs(x) > BESSEL_MAX_ARG:
        raise RangeError(f"argument |{x}| exceeds validated maximum "
                         f"{BESSEL_MAX_ARG}")
    sign = 1.0
    if n < 0:          # J_{-n}(x) = (-1)^n J_n(x)
        n = -n
        if n % 2:
            sign = -sign
    if x < 0:          # J_n(-x) = (-1)^n J_n(x)
        x = -x
        if n % 2:
            sign = -sign
    return sign * float(_bessel_row(x, n)[n])


def truncation_order(delta: float, tol: float) -> int:
    """Smallest N with sum_{|n|<=N} J_n(delta)^2 >= 1 - tol (floor of 1).

    This is the comb-truncation rule used everywhere a nominally infinite
    Bessel comb has to be cut off.
    """
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    if not 0 < tol < 1:
        raise ValueError("tol must lie in (0, 1)")
    if delta > BESSEL_MAX_ARG:
        raise RangeError(f"delta {delta} exceeds validated maximum "
                         f"{BESSEL_MAX_ARG}")
    if delta == 0.0:
        return 1
    nmax = BESSEL_MAX_ORDER
    row = _bessel_row(delta, nmax)
    captured = row[0] ** 2
    for n in range(1, nmax + 1):
        captured += 2.0 * row[n] ** 2
        if captured >= 1.0 - tol:
            return max(n, 1)
    raise RangeError(f"truncation order for delta={delta} exceeds "
                     f"{nmax}")
