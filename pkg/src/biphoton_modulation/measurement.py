"""Fourier waveform measurement with synchronized amplitude modulators.

Sweeping the shared amplitude-modulation frequency and recording the
slow-detector coincidence rate samples the spectral autocorrelation of the
biphoton wavefunction,

    F(wm) = kappa * integral [ phi(w + wm) phi*(w) + cc ] dw ,

with kappa = depth_s * depth_i / 2pi.  F is the inverse Fourier transform of
|phi_tilde(tau)|^2, so a cosine transform of the swept curve recovers the
time-domain intensity envelope.  Raw F values are stored; mean subtraction
is a serialization-time convention.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .biphoton import BiphotonModel, wavefunction
from .errors import ConfigError, GridCoverageError
from .numerics import integrate


@dataclass(frozen=True)
class MeasurementCurve:
    """Coincidence counts per bandwidth versus modulation frequency.

    Only omega_m >= 0 is stored; F is even under sign reversal of the
    modulation frequency.
    """

    omega_m_values: np.ndarray
    F_values: np.ndarray
    kappa: float

    @property
    def spacing(self) -> float:
        return float(self.omega_m_values[1] - self.omega_m_values[0])

    def mean_subtracted(self) -> np.ndarray:
        """F with the average count rate set to zero (plot convention)."""
        return self.F_values - float(np.mean(self.F_values))


@dataclass(frozen=True)
class RecoveredWaveform:
    """Peak-normalized time-domain intensity from the cosine transform.

    clipped_fraction records how much negative ringing mass (relative to the
    total absolute mass) was clipped to zero before normalization.
    """

    tau_values: np.ndarray
    intensity: np.ndarray
    clipped_fraction: float


def measured_curve(model: BiphotonModel, delta_s: float, delta_i: float,
                   omega_m_max: float, n_samples: int) -> MeasurementCurve:
    """Sweep the modulation frequency and record the coincidence curve."""
    if n_samples < 2:
        raise ConfigError("n_samples must be at least 2")
    if not omega_m_max > 0:
        raise ConfigError("omega_m_max must be positive")
    if omega_m_max > model.grid.half_width:
        raise GridCoverageError(
            f"grid half_width {model.grid.half_width} cannot hold shifts "
            f"out to {omega_m_max}")
    if delta_s * delta_i >= 0.1:
        warnings.warn(
            f"depth product {delta_s * delta_i} is not small; the lowest-"
            "order-in-kappa curve is unreliable", stacklevel=2)

    kappa = delta_s * delta_i / (2.0 * np.pi)
    w = model.grid.points
    phi_conj = np.conj(wavefunction(model))
    omegas = np.linspace(0.0, omega_m_max, n_samples)
    F = np.empty(n_samples)
    for k, wm in enumerate(omegas):
        overlap = integrate(model.phi_fn(w + wm) * phi_conj, model.grid)
        F[k] = 2.0 * kappa * float(np.real(overlap))
    return MeasurementCurve(omega_m_values=omegas, F_values=F, kappa=kappa)


def cosine_transform(curve: MeasurementCurve, tau_values) -> np.ndarray:
    """Discrete cosine quadrature of the raw curve at the given delays."""
    tau_values = np.asarray(tau_values, dtype=float)
    wm = curve.omega_m_values
    quad = np.full(len(wm), curve.spacing)
    quad[0] *= 0.5
    quad[-1] *= 0.5
    return np.cos(np.outer(tau_values, wm)) @ (curve.F_values * quad)


def recover_waveform(curve: MeasurementCurve, tau_max: float,
                     n_tau: int) -> RecoveredWaveform:
    """Recover the time-domain intensity envelope on tau in [0, tau_max].

    The transform is even in tau, so only nonnegative delays are returned;
    a delayed wavepacket appears at +|delay|.
    """
    if n_tau < 2:
        raise ConfigError("n_tau must be at least 2")
    if curve.spacing >= np.pi / (2.0 * tau_max):
        raise ConfigError(
            f"modulation-frequency spacing {curve.spacing} is too coarse to "
            f"resolve delays out to {tau_max}")
    taus = np.linspace(0.0, tau_max, n_tau)
    raw = cosine_transform(curve, taus)
    negative = -float(np.sum(np.minimum(raw, 0.0)))
    total = float(np.sum(np.abs(raw)))
    clipped_fraction = negative / total if total > 0 else 0.0
    intensity = np.maximum(raw, 0.0)
    peak = float(np.max(intensity))
    if peak > 0:
        intensity = intensity / peak
    return RecoveredWaveform(tau_values=taus, intensity=intensity,
                             clipped_fraction=clipped_fraction)
