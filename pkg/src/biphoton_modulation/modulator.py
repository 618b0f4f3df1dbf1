"""Periodic modulators represented as finite frequency combs.

A modulator multiplying the time-domain field by a periodic function of
frequency omega_m is, in the frequency domain, a comb of Fourier
coefficients at multiples of omega_m.  Ideal sinusoidal phase modulators
give Bessel coefficients J_n(-depth); amplitude modulators 1 + depth*cos
give the three-line comb {depth/2, 1, depth/2}.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError
from .numerics import bessel_j, truncation_order

PHASE = "phase"
AMPLITUDE = "amplitude"
IDENTITY = "identity"


@dataclass(frozen=True)
class ModulatorSpec:
    """Finite Fourier comb of a periodic modulator.

    coeffs holds the coefficients for n = -order .. order in ascending
    order of n.  Combs are stored dense; the orders needed in practice
    stay around thirty, so sparsity machinery would be wasted.
    """

    omega_m: float
    coeffs: np.ndarray
    kind: str
    depth: float

    def __post_init__(self):
        if not self.omega_m > 0:
            raise ValueError("omega_m must be positive")
        if len(self.coeffs) % 2 == 0:
            raise ValueError("coeffs must span n = -N..N (odd length)")
        if self.kind not in (PHASE, AMPLITUDE, IDENTITY):
            raise ValueError(f"unknown modulator kind {self.kind!r}")

    @property
    def order(self) -> int:
        return (len(self.coeffs) - 1) // 2

    def coeff(self, n: int) -> complex:
        """Comb coefficient at index n; zero beyond the stored order."""
        if abs(n) > self.order:
            return 0.0 + 0.0j
        return complex(self.coeffs[n + self.order])

    def indices(self) -> range:
        return range(-self.order, self.order + 1)

    def power(self) -> float:
        return float(np.sum(np.abs(self.coeffs) ** 2))


def phase_modulator(delta: float, omega_m: float,
                    tol: float = 1e-10) -> ModulatorSpec:
    """Ideal lossless phase modulator exp[i delta sin(omega_m t)].

    Comb coefficients are J_n(-delta), truncated once the captured power
    reaches 1 - tol.  Negative delta encodes drive in phase opposition.
    """
    if not omega_m > 0:
        raise ConfigError("omega_m must be positive")
    if abs(delta) > 20:
        raise ConfigError("phase depth |delta| must not exceed 20")
    if delta == 0.0:
        return identity_modulator(omega_m)
    n_max = truncation_order(abs(delta), tol)
    coeffs = np.array([bessel_j(n, -delta)
                       for n in range(-n_max, n_max + 1)], dtype=complex)
    return ModulatorSpec(omega_m=omega_m, coeffs=coeffs, kind=PHASE,
                         depth=delta)


def amplitude_modulator(delta: float, omega_m: float) -> ModulatorSpec:
    """Amplitude modulator 1 + delta*cos(omega_m t) as a three-line comb.

    The comb is the literal multiplicative expansion; no renormalization
    for energy loss is applied.
    """
    if not delta > 0:
        raise ConfigError("amplitude depth must be positive")
    if not omega_m > 0:
        raise ConfigError("omega_m must be positive")
    if delta >= 1:
        warnings.warn(
            f"amplitude depth {delta} >= 1 exceeds physical transmissivity "
            "bounds", stacklevel=2)
    coeffs = np.array([delta / 2.0, 1.0, delta / 2.0], dtype=complex)
    return ModulatorSpec(omega_m=omega_m, coeffs=coeffs, kind=AMPLITUDE,
                         depth=delta)


def identity_modulator(omega_m: float = 1.0) -> ModulatorSpec:
    """Absent modulator: single coefficient 1 at n = 0."""
    return ModulatorSpec(omega_m=omega_m,
                         coeffs=np.array([1.0], dtype=complex),
                         kind=IDENTITY, depth=0.0)


def convolve_combs(first: ModulatorSpec,
                   second: ModulatorSpec) -> np.ndarray:
    """Comb of the two modulators applied in sequence (same omega_m).

    Returns the dense coefficient array for n = -(N1+N2) .. N1+N2.  For two
    phase combs this realizes the Bessel addition theorem: the result is the
    comb of a single phase modulator with the summed depth.
    """
    if abs(first.omega_m - second.omega_m) > 1e-12:
        raise ConfigError("combs can only be convolved at equal omega_m")
    return np.convolve(first.coeffs, second.coeffs)
