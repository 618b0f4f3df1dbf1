"""Down-converter output coefficients and the built-in wavefunction models.

The two-photon state is carried by four Bogoliubov-style coefficients
A, B, C, D of the input-output relations of the generating crystal,
sampled on a frequency grid.  In the low-gain regime used throughout
(|A| = |D| = 1, B = C*), the biphoton wavefunction is phi = A * C*.

Built-in models also carry their closed-form generating functions so that
downstream code can evaluate frequency-shifted coefficients exactly instead
of interpolating sampled arrays.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import GridCoverageError
from .numerics import FrequencyGrid, integrate

# Tail coverage demanded of the grid, in units of the spectral width.
_RECT_TAIL = 20.0
_GAUSS_TAIL = 8.0


@dataclass(frozen=True)
class BiphotonModel:
    """Sampled down-converter coefficients plus their closed forms."""

    grid: FrequencyGrid
    A: np.ndarray
    B: np.ndarray
    C: np.ndarray
    D: np.ndarray
    label: str
    A_fn: Callable[[np.ndarray], np.ndarray] = field(repr=False)
    B_fn: Callable[[np.ndarray], np.ndarray] = field(repr=False)
    C_fn: Callable[[np.ndarray], np.ndarray] = field(repr=False)
    D_fn: Callable[[np.ndarray], np.ndarray] = field(repr=False)

    def __post_init__(self):
        n = self.grid.n_points
        for name in ("A", "B", "C", "D"):
            if np.asarray(getattr(self, name)).shape != (n,):
                raise ValueError(f"coefficient {name} must have length {n}")
        # Low-gain consistency: lossless A, D and entangled B = C*.
        if not np.allclose(np.abs(self.A), 1.0, atol=1e-12):
            raise ValueError("low-gain model requires |A| = 1 everywhere")
        if not np.allclose(np.abs(self.D), 1.0, atol=1e-12):
            raise ValueError("low-gain model requires |D| = 1 everywhere")
        if np.max(np.abs(self.B - np.conj(self.C))) > 1e-12:
            raise ValueError("low-gain model requires B = C*")
        if np.max(np.abs(self.B)) > 1.0 + 1e-12:
            raise ValueError("|B| must not exceed 1")

    def phi_fn(self, omega):
        """Closed-form biphoton wavefunction phi = A * C*."""
        return self.A_fn(omega) * np.conj(self.C_fn(omega))


def _sinc(x):
    # sin(x)/x with the removable singularity at x = 0 set to 1
    return np.sinc(np.asarray(x, dtype=float) / np.pi)


def make_rectangular(center: float, grid: FrequencyGrid) -> BiphotonModel:
    """Biphoton with a rectangular temporal profile of width one unit.

    A = D = 1 and B(w) = C*(w) = exp(-ix) sin(x)/x with x = (w - center)/2.
    """
    if not grid.covers(center - _RECT_TAIL, center + _RECT_TAIL):
        raise GridCoverageError(
            f"grid must cover [{center - _RECT_TAIL}, {center + _RECT_TAIL}] "
            "to capture the sinc tails")

    ones = lambda w: np.ones_like(np.asarray(w, dtype=float), dtype=complex)

    def b_fn(w):
        x = (np.asarray(w, dtype=float) - center) / 2.0
        return np.exp(-1j * x) * _sinc(x)

    def c_fn(w):
        x = (np.asarray(w, dtype=float) - center) / 2.0
        return np.exp(1j * x) * _sinc(x)

    w = grid.points
    return BiphotonModel(grid=grid, A=ones(w), B=b_fn(w), C=c_fn(w),
                         D=ones(w), label="rectangular",
                         A_fn=ones, B_fn=b_fn, C_fn=c_fn, D_fn=ones)


def make_gaussian_delayed(duration: float, delay: float,
                          grid: FrequencyGrid) -> BiphotonModel:
    """Gaussian biphoton with a linear spectral phase (signal-channel delay).

    phi(w) = exp(-w^2 duration^2 / 4) * exp(i w delay), centered at zero
    detuning; the delay leaves the magnitude untouched and shifts the
    time-domain envelope.
    """
    if not duration > 0:
        raise ValueError("duration must be positive")
    if not grid.covers(-_GAUSS_TAIL / duration, _GAUSS_TAIL / duration):
        raise GridCoverageError(
            f"grid must cover +-{_GAUSS_TAIL / duration} for duration "
            f"{duration}")

    ones = lambda w: np.ones_like(np.asarray(w, dtype=float), dtype=complex)

    def c_fn(w):
        w = np.asarray(w, dtype=float)
        # conjugate of B = C*: Gaussian magnitude, opposite linear phase
        return np.exp(-w * w * duration * duration / 4.0) * \
            np.exp(-1j * w * delay)

    def b_fn(w):
        return np.conj(c_fn(w))

    w = grid.points
    return BiphotonModel(grid=grid, A=ones(w), B=b_fn(w), C=c_fn(w),
                         D=ones(w),
                         label=f"gaussian(duration={duration}, delay={delay})",
                         A_fn=ones, B_fn=b_fn, C_fn=c_fn, D_fn=ones)


def wavefunction(model: BiphotonModel) -> np.ndarray:
    """Biphoton wavefunction phi = A * C* sampled on the model grid."""
    return model.A * np.conj(model.C)


def pair_rate(model: BiphotonModel) -> float:
    """Pair generation rate R = (1/2pi) * integral of |B|^2."""
    return integrate(np.abs(model.B) ** 2, model.grid) / (2.0 * np.pi)
