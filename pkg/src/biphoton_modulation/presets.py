"""Figure presets: canonical parameter sets for the reference figures.

Each preset is a raw configuration mapping that goes through the normal
parser, so presets and hand-written configs share one code path.
"""

from __future__ import annotations

from .errors import ConfigError

_PHASE = lambda depth, omega_m: {"kind": "phase", "depth": depth,
                                 "omega_m": omega_m}

PRESETS: dict[str, dict] = {
    # Signal spectrum, depth 2: modulation slow / fast vs unit bandwidth.
    "fig2a": {
        "scenario": "spectrum",
        "model": {"kind": "rectangular"},
        "modulator_s": _PHASE(2.0, 0.1),
    },
    "fig2b": {
        "scenario": "spectrum",
        "model": {"kind": "rectangular"},
        "modulator_s": _PHASE(2.0, 10.0),
    },
    # Quantum comb, slow modulation: cumulative drive and cancellation.
    "fig3a": {
        "scenario": "correlate",
        "model": {"kind": "rectangular"},
        "modulator_s": _PHASE(2.0, 0.1),
        "modulator_i": _PHASE(2.0, 0.1),
    },
    "fig3b": {
        "scenario": "correlate",
        "model": {"kind": "rectangular"},
        "modulator_s": _PHASE(2.0, 0.1),
        "modulator_i": _PHASE(-2.0, 0.1),
    },
    # Quantum comb, fast modulation: cumulative effects wash out.
    "fig4a": {
        "scenario": "correlate",
        "model": {"kind": "rectangular"},
        "modulator_s": _PHASE(2.0, 10.0),
        "modulator_i": _PHASE(2.0, 10.0),
    },
    "fig4b": {
        "scenario": "correlate",
        "model": {"kind": "rectangular"},
        "modulator_s": _PHASE(2.0, 10.0),
        "modulator_i": _PHASE(-2.0, 10.0),
    },
    # Fourier waveform measurement of a delayed Gaussian wavepacket.  The
    # sweep reaches 12 so the Gaussian envelope of the swept curve decays
    # below 1e-3 of its peak.
    "fig6a": {
        "scenario": "measure",
        "model": {"kind": "gaussian", "duration": 1.0, "delay": 8.0},
        "measure": {"delta_s": 0.2, "delta_i": 0.2, "omega_m_max": 12.0,
                    "n_samples": 241, "tau_max": 16.0, "n_tau": 321},
    },
}
# Part (b) is the transform of the same sweep.
PRESETS["fig6b"] = PRESETS["fig6a"]

PRESET_NAMES = tuple(sorted(PRESETS))


def preset_config(name: str) -> dict:
    try:
        return dict(PRESETS[name])
    except KeyError:
        raise ConfigError(
            f"unknown preset '{name}' (choose from "
            f"{', '.join(PRESET_NAMES)})") from None
