"""Two-frequency correlation: continuous classical term and quantum comb.

The frequency-domain coincidence correlation splits into a continuous
classical part c(detuning difference) that any source with the same spectra
would produce, and a delta comb that exists only through time-energy
entanglement.  The comb weight at sideband z is

    f(z) = integral | sum_n q_n* r*_{z-n} C(w - n wm) A*(w - n wm) |^2 dw

and the comb places weight f(z) at detuning difference -z * omega_m.
The comb is represented as a discrete weight array, never as narrow
continuous peaks: the comb/continuum split is the structural point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .biphoton import BiphotonModel, pair_rate
from .errors import ConfigError, GridCoverageError
from .modulator import ModulatorSpec
from .numerics import FrequencyGrid, integrate
from .spectra import signal_spectrum


@dataclass(frozen=True)
class SidebandComb:
    """Discrete weights f(z), z = -Z..Z, of the quantum delta comb.

    The delta of sideband z sits at detuning difference -z * omega_m;
    the comb carries a prefactor T / 2pi.
    """

    omega_m: float
    weights: np.ndarray
    gatewidth: float

    @property
    def max_sideband(self) -> int:
        return (len(self.weights) - 1) // 2

    def weight(self, z: int) -> float:
        if abs(z) > self.max_sideband:
            return 0.0
        return float(self.weights[z + self.max_sideband])

    def sidebands(self) -> range:
        return range(-self.max_sideband, self.max_sideband + 1)


@dataclass(frozen=True)
class ClassicalCurve:
    """Continuous classical correlation sampled on a detuning-difference axis.

    full_integral is the integral of the classical term over the whole real
    line, computed termwise by Fubini (the two spectra factorize), so it is
    free of the slow sinc-tail truncation of the plotting window.
    """

    delta_grid: FrequencyGrid
    values: np.ndarray
    gatewidth: float
    full_integral: float


@dataclass(frozen=True)
class SumRuleReport:
    """Conservation check of the comb sum and the classical integral."""

    quantum_sum: float
    classical_integral: float
    pair_rate: float
    gatewidth: float
    quantum_rel_dev: float
    classical_rel_dev: float
    gating_marginal: bool   # RT >= 0.1: single-pair observation is doubtful


def _check_pair(model: BiphotonModel, mod_s: ModulatorSpec,
                mod_i: ModulatorSpec) -> float:
    """Validate the synchronized-drive assumption; return shared omega_m."""
    if mod_s.order > 0 and mod_i.order > 0:
        if not math.isclose(mod_s.omega_m, mod_i.omega_m,
                            rel_tol=0.0, abs_tol=1e-12):
            raise ConfigError(
                "signal and idler modulators must be driven at the same "
                f"frequency (got {mod_s.omega_m} and {mod_i.omega_m})")
    omega_m = mod_s.omega_m if mod_s.order > 0 else mod_i.omega_m
    max_shift = mod_s.order * omega_m
    if max_shift > model.grid.half_width:
        raise GridCoverageError(
            f"grid half_width {model.grid.half_width} cannot hold shifts "
            f"out to {max_shift}")
    return omega_m


def quantum_comb(model: BiphotonModel, mod_s: ModulatorSpec,
                 mod_i: ModulatorSpec, T: float = 1.0) -> SidebandComb:
    """Quantum delta-comb weights for two synchronized modulators.

    The coefficient product is conjugated exactly as defined so that
    user-supplied complex combs interfere with the correct phases; for the
    real Bessel combs the conjugation is a no-op.
    """
    omega_m = _check_pair(model, mod_s, mod_i)
    w = model.grid.points
    z_max = mod_s.order + mod_i.order
    # Cache the shifted kernel C * A^* for every signal index.
    kernels = {n: model.C_fn(w - n * omega_m) *
               np.conj(model.A_fn(w - n * omega_m))
               for n in mod_s.indices()}
    q_conj = np.conj(mod_s.coeffs)
    weights = np.zeros(2 * z_max + 1)
    for z in range(-z_max, z_max + 1):
        acc = np.zeros(model.grid.n_points, dtype=complex)
        for i, n in enumerate(mod_s.indices()):
            r = mod_i.coeff(z - n)
            if r == 0.0:
                continue
            acc += q_conj[i] * np.conj(r) * kernels[n]
        weights[z + z_max] = integrate(np.abs(acc) ** 2, model.grid)
    return SidebandComb(omega_m=omega_m, weights=weights, gatewidth=T)


def _idler_density(model: BiphotonModel, mod_i: ModulatorSpec, T: float,
                   x: np.ndarray) -> np.ndarray:
    dens = np.zeros_like(x)
    for i, m in enumerate(mod_i.indices()):
        weight = abs(mod_i.coeffs[i]) ** 2
        if weight == 0.0:
            continue
        dens += weight * np.abs(model.C_fn(x + m * mod_i.omega_m)) ** 2
    return dens * T / (2.0 * np.pi)


def classical_curve(model: BiphotonModel, mod_s: ModulatorSpec,
                    mod_i: ModulatorSpec, T: float = 1.0,
                    delta_grid: FrequencyGrid | None = None
                    ) -> ClassicalCurve:
    """Classical correlation term: convolution of the two singles spectra."""
    _check_pair(model, mod_s, mod_i)
    if delta_grid is None:
        delta_grid = FrequencyGrid(0.0, 20.0, 801)
    w = model.grid.points
    signal = signal_spectrum(model, mod_s, T).values
    weights = model.grid.weights
    values = np.empty(delta_grid.n_points)
    for j, delta in enumerate(delta_grid.points):
        idler = _idler_density(model, mod_i, T, w + delta)
        values[j] = float(np.dot(weights, signal * idler))

    # Full-line integral by Fubini: the double integral factorizes into the
    # product of the two spectral totals.
    r_signal = integrate(np.abs(model.B) ** 2, model.grid) / (2.0 * np.pi)
    r_idler = integrate(np.abs(model.C) ** 2, model.grid) / (2.0 * np.pi)
    full = (T ** 2) * r_signal * r_idler * mod_s.power() * mod_i.power()
    return ClassicalCurve(delta_grid=delta_grid, values=values,
                          gatewidth=T, full_integral=full)


def sum_rules(comb: SidebandComb, curve: ClassicalCurve,
              model: BiphotonModel) -> SumRuleReport:
    """Check the comb sum against RT and the classical integral against
    (RT)^2."""
    if not math.isclose(comb.gatewidth, curve.gatewidth,
                        rel_tol=0.0, abs_tol=1e-12):
        raise ConfigError("comb and curve were computed with different "
                          "gatewidths")
    T = comb.gatewidth
    R = pair_rate(model)
    quantum_sum = T / (2.0 * np.pi) * float(np.sum(comb.weights))
    classical_integral = curve.full_integral
    return SumRuleReport(
        quantum_sum=quantum_sum,
        classical_integral=classical_integral,
        pair_rate=R,
        gatewidth=T,
        quantum_rel_dev=quantum_sum / (R * T) - 1.0,
        classical_rel_dev=classical_integral / (R * T) ** 2 - 1.0,
        gating_marginal=R * T >= 0.1,
    )
