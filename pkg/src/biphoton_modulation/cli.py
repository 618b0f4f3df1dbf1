"""Command-line front end: scenario dispatch and CSV/SVG serialization.

Usage:

    biphoton-sim <scenario> [preset] [--config FILE] [--out PREFIX]
                 [--format csv|csv+svg] [flag overrides]

Exit codes: 0 success, 2 configuration error, 3 numerical-domain error.
Identical configurations produce byte-identical CSV files.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import charts
from .biphoton import (BiphotonModel, make_gaussian_delayed,
                       make_rectangular, pair_rate)
from .config import RunConfig, SCENARIOS, parse_config
from .correlation import classical_curve, quantum_comb, sum_rules
from .errors import BiphotonError, ConfigError, NumericalDomainError
from .measurement import measured_curve, recover_waveform
from .modulator import (ModulatorSpec, amplitude_modulator,
                        identity_modulator, phase_modulator)
from .numerics import FrequencyGrid
from .presets import preset_config
from .spectra import idler_spectrum, signal_spectrum


def _write_csv(path: str, header: tuple[str, str], xs, ys,
               x_int: bool = False):
    lines = [",".join(header)]
    for x, y in zip(xs, ys):
        xtxt = str(int(x)) if x_int else f"{x:.17g}"
        lines.append(f"{xtxt},{y:.17g}")
    with open(path, "w", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def _write_svg(path: str, svg: str):
    with open(path, "w", newline="\n") as fh:
        fh.write(svg)


def _build_model(config: RunConfig) -> BiphotonModel:
    half_width, n_points = config.grid
    grid = FrequencyGrid(0.0 if config.model.kind == "gaussian"
                         else config.model.center, half_width, n_points)
    if config.model.kind == "gaussian":
        return make_gaussian_delayed(config.model.duration,
                                     config.model.delay, grid)
    return make_rectangular(config.model.center, grid)


def _build_modulator(cfg, tol: float, partner_omega_m: float
                     ) -> ModulatorSpec:
    if cfg.kind == "phase":
        return phase_modulator(cfg.depth, cfg.omega_m, tol)
    if cfg.kind == "amplitude":
        return amplitude_modulator(cfg.depth, cfg.omega_m)
    return identity_modulator(partner_omega_m)


def _modulator_pair(config: RunConfig) -> tuple[ModulatorSpec, ModulatorSpec]:
    omega_s = config.modulator_s.omega_m
    omega_i = config.modulator_i.omega_m
    mod_s = _build_modulator(config.modulator_s, config.tol, omega_i)
    mod_i = _build_modulator(config.modulator_i, config.tol, omega_s)
    return mod_s, mod_i


def _run_spectrum(config: RunConfig) -> list[str]:
    model = _build_model(config)
    mod_s, mod_i = _modulator_pair(config)
    written = []
    for tag, result in (("spectrum", signal_spectrum(model, mod_s, config.T)),
                        ("spectrum_idler",
                         idler_spectrum(model, mod_i, config.T))):
        path = f"{config.output}_{tag}.csv"
        _write_csv(path, ("omega", "counts"), result.grid.points,
                   result.values)
        written.append(path)
        if config.format == "csv+svg":
            svg = charts.line_chart(result.grid.points, result.values,
                                    f"{tag} ({model.label})", "omega",
                                    "counts per bandwidth")
            _write_svg(f"{config.output}_{tag}.svg", svg)
            written.append(f"{config.output}_{tag}.svg")
    return written


def _run_correlate(config: RunConfig) -> list[str]:
    model = _build_model(config)
    mod_s, mod_i = _modulator_pair(config)
    comb = quantum_comb(model, mod_s, mod_i, config.T)
    norm = 2.0 * np.pi * pair_rate(model)
    zs = np.array(list(comb.sidebands()))
    path = f"{config.output}_comb.csv"
    _write_csv(path, ("z", "f_normalized"), zs, comb.weights / norm,
               x_int=True)
    written = [path]
    if config.format == "csv+svg":
        svg = charts.stem_chart(zs, comb.weights / norm,
                                f"quantum comb ({model.label})",
                                "sideband number z", "f(z) / (2 pi R)")
        _write_svg(f"{config.output}_comb.svg", svg)
        written.append(f"{config.output}_comb.svg")
    return written


def _run_sumrules(config: RunConfig) -> list[str]:
    model = _build_model(config)
    mod_s, mod_i = _modulator_pair(config)
    comb = quantum_comb(model, mod_s, mod_i, config.T)
    half_width, n_points = config.delta_axis
    curve = classical_curve(model, mod_s, mod_i, config.T,
                            FrequencyGrid(0.0, half_width, n_points))
    report = sum_rules(comb, curve, model)
    rt = report.pair_rate * report.gatewidth
    print(f"quantum_sum/RT = {report.quantum_sum / rt:.6f}")
    print(f"classical_integral/(RT)^2 = "
          f"{report.classical_integral / rt ** 2:.6f}")
    if report.gating_marginal:
        print("warning: RT >= 0.1, single-pair gating condition is marginal")

    rows = [
        ("quantum_sum", report.quantum_sum),
        ("classical_integral", report.classical_integral),
        ("pair_rate", report.pair_rate),
        ("gatewidth", report.gatewidth),
        ("quantum_rel_dev", report.quantum_rel_dev),
        ("classical_rel_dev", report.classical_rel_dev),
        ("gating_marginal", 1.0 if report.gating_marginal else 0.0),
    ]
    path = f"{config.output}_sumrules.csv"
    lines = ["quantity,value"] + [f"{k},{v:.17g}" for k, v in rows]
    with open(path, "w", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")
    written = [path]

    cpath = f"{config.output}_classical.csv"
    _write_csv(cpath, ("delta", "c"), curve.delta_grid.points, curve.values)
    written.append(cpath)
    if config.format == "csv+svg":
        svg = charts.line_chart(curve.delta_grid.points, curve.values,
                                f"classical correlation ({model.label})",
                                "delta", "c")
        _write_svg(f"{config.output}_classical.svg", svg)
        written.append(f"{config.output}_classical.svg")
    return written


def _run_measure(config: RunConfig) -> list[str]:
    model = _build_model(config)
    m = config.measure
    curve = measured_curve(model, m.delta_s, m.delta_i, m.omega_m_max,
                           m.n_samples)
    waveform = recover_waveform(curve, m.tau_max, m.n_tau)
    path_curve = f"{config.output}_curve.csv"
    _write_csv(path_curve, ("omega_m", "F"), curve.omega_m_values,
               curve.mean_subtracted())
    path_wave = f"{config.output}_waveform.csv"
    _write_csv(path_wave, ("tau", "intensity"), waveform.tau_values,
               waveform.intensity)
    written = [path_curve, path_wave]
    if config.format == "csv+svg":
        _write_svg(f"{config.output}_curve.svg",
                   charts.line_chart(curve.omega_m_values,
                                     curve.mean_subtracted(),
                                     f"measured curve ({model.label})",
                                     "omega_m", "coincidence counts"))
        _write_svg(f"{config.output}_waveform.svg",
                   charts.line_chart(waveform.tau_values, waveform.intensity,
                                     f"recovered waveform ({model.label})",
                                     "tau", "normalized intensity"))
        written += [f"{config.output}_curve.svg",
                    f"{config.output}_waveform.svg"]
    return written


def run(config: RunConfig) -> list[str]:
    """Execute one scenario; returns the list of files written."""
    if config.scenario == "figure-preset":
        raw = preset_config(config.preset)
        raw["output"] = f"{config.output}_{config.preset}"
        raw["format"] = config.format
        return run(parse_config(raw))
    handler = {
        "spectrum": _run_spectrum,
        "correlate": _run_correlate,
        "sumrules": _run_sumrules,
        "measure": _run_measure,
    }[config.scenario]
    return handler(config)


def _load_config_file(path: str) -> dict:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError("config file must contain a JSON object")
    return data


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="biphoton-sim",
        description="Simulate modulated time-energy entangled photon pairs")
    parser.add_argument("scenario", choices=SCENARIOS)
    parser.add_argument("preset", nargs="?", default=None,
                        help="preset name (figure-preset scenario only)")
    parser.add_argument("--config", help="JSON configuration file")
    parser.add_argument("--out", help="output path prefix")
    parser.add_argument("--format", choices=("csv", "csv+svg"))
    parser.add_argument("--T", type=float, help="gatewidth override")
    parser.add_argument("--half-width", type=float,
                        help="grid half-width override")
    parser.add_argument("--n-points", type=int,
                        help="grid point-count override")
    args = parser.parse_args(argv)

    try:
        raw = _load_config_file(args.config) if args.config else {}
        raw["scenario"] = args.scenario
        if args.preset is not None:
            raw["preset"] = args.preset
        if args.out is not None:
            raw["output"] = args.out
        if args.format is not None:
            raw["format"] = args.format
        if args.T is not None:
            raw["T"] = args.T
        if args.half_width is not None or args.n_points is not None:
            grid = dict(raw.get("grid", {}))
            if args.half_width is not None:
                grid["half_width"] = args.half_width
            if args.n_points is not None:
                grid["n_points"] = args.n_points
            raw["grid"] = grid
        config = parse_config(raw)
        run(config)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except NumericalDomainError as exc:
        print(f"numerical-domain error: {exc}", file=sys.stderr)
        return 3
    except BiphotonError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
