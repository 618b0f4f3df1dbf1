"""Numerical model of time-energy entangled photon pairs passing through
synchronized phase or amplitude modulators.

Capabilities: post-modulator singles spectra, the classical and quantum
two-frequency correlation terms with their sum rules, and the Fourier
technique that recovers the biphoton time-domain envelope from a
modulation-frequency sweep.
"""

from .biphoton import (BiphotonModel, make_gaussian_delayed,
                       make_rectangular, pair_rate, wavefunction)
from .correlation import (ClassicalCurve, SidebandComb, SumRuleReport,
                          classical_curve, quantum_comb, sum_rules)
from .errors import (BiphotonError, ConfigError, DimensionError,
                     GridCoverageError, NumericalDomainError, RangeError)
from .measurement import (MeasurementCurve, RecoveredWaveform,
                          cosine_transform, measured_curve, recover_waveform)
from .modulator import (ModulatorSpec, amplitude_modulator, convolve_combs,
                        identity_modulator, phase_modulator)
from .numerics import FrequencyGrid, bessel_j, integrate, truncation_order
from .spectra import SpectrumResult, idler_spectrum, signal_spectrum

__version__ = "0.1.0"

__all__ = [
    "BiphotonModel", "ClassicalCurve", "FrequencyGrid", "MeasurementCurve",
    "ModulatorSpec", "RecoveredWaveform", "SidebandComb", "SpectrumResult",
    "SumRuleReport",
    "amplitude_modulator", "bessel_j", "classical_curve", "convolve_combs",
    "cosine_transform", "identity_modulator", "idler_spectrum", "integrate",
    "make_gaussian_delayed", "make_rectangular", "measured_curve",
    "pair_rate", "phase_modulator", "quantum_comb", "recover_waveform",
    "signal_spectrum", "sum_rules", "truncation_order", "wavefunction",
    "BiphotonError", "ConfigError", "DimensionError", "GridCoverageError",
    "NumericalDomainError", "RangeError",
]
