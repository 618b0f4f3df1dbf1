"""Acceptance suite: one check per acceptance criterion, each printing a
single PASS/FAIL line (run with ``pytest -s`` to see the lines for passing
checks too).

Checks 5 and 6 encode idealized large-drive-frequency limits that the exact
dynamics only approaches at the few-percent level, because the rectangular
model's sinc tails decay slowly; they are expected to fail at the stated
tolerances.  See the repository README for the quantitative analysis.
"""

import numpy as np
import pytest

from biphoton_modulation import (FrequencyGrid, amplitude_modulator,
                                 bessel_j, classical_curve,
                                 make_gaussian_delayed, make_rectangular,
                                 measured_curve, pair_rate, phase_modulator,
                                 quantum_comb, recover_waveform,
                                 signal_spectrum, sum_rules,
                                 truncation_order)
from biphoton_modulation.cli import run
from biphoton_modulation.config import parse_config
from biphoton_modulation.presets import PRESET_NAMES, preset_config
from oracles import bessel_series, time_intensity


def report(number: int, ok: bool, detail: str) -> None:
    print(f"[criterion {number}] {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {number}: {detail}"


@pytest.fixture(scope="module")
def rect_default():
    return make_rectangular(0.0, FrequencyGrid(0.0, 200.0, 16001))


@pytest.fixture(scope="module")
def rect_wide():
    # wide window at the default spacing: the slowly decaying sinc tails
    # limit the quantum-sum accuracy, and 1e-6 relative needs +/-1600
    return make_rectangular(0.0, FrequencyGrid(0.0, 1600.0, 128001))


def normalized_weights(comb, rate):
    return {z: comb.weight(z) / (2 * np.pi * rate)
            for z in comb.sidebands()}


def test_criterion_1_sum_rules(rect_wide):
    rate = pair_rate(rect_wide)
    delta_axis = FrequencyGrid(0.0, 2.0, 5)
    worst_q = worst_c = 0.0
    for delta_s, delta_i in ((0.0, 0.0), (2.0, 2.0), (2.0, -2.0),
                             (4.0, 1.0)):
        for omega_m in (0.1, 10.0):
            mod_s = phase_modulator(delta_s, omega_m)
            mod_i = phase_modulator(delta_i, omega_m)
            comb = quantum_comb(rect_wide, mod_s, mod_i, T=1.0)
            curve = classical_curve(rect_wide, mod_s, mod_i, 1.0, delta_axis)
            rep = sum_rules(comb, curve, rect_wide)
            worst_q = max(worst_q, abs(rep.quantum_sum / rate - 1.0))
            worst_c = max(worst_c,
                          abs(rep.classical_integral / rate ** 2 - 1.0))
    ok = worst_q <= 1e-6 and worst_c <= 1e-4
    report(1, ok, f"quantum sum rel dev {worst_q:.2e} (tol 1e-6), "
                  f"classical integral rel dev {worst_c:.2e} (tol 1e-4)")


def test_criterion_2_pair_rate_normalization(rect_default):
    err_default = abs(pair_rate(rect_default) - 1.0)
    errors = [err_default]
    for half_width, n_points in ((400.0, 32001), (800.0, 64001)):
        model = make_rectangular(0.0, FrequencyGrid(0.0, half_width,
                                                    n_points))
        errors.append(abs(pair_rate(model) - 1.0))
    halves = all(errors[i + 1] <= 0.55 * errors[i]
                 for i in range(len(errors) - 1))
    ok = err_default <= 1e-2 and halves
    report(2, ok, f"|R-1| = {err_default:.2e} at default grid (tol 1e-2); "
                  f"errors under doubling: {[f'{e:.2e}' for e in errors]}")


def test_criterion_3_cumulative_modulation(rect_default):
    rate = pair_rate(rect_default)
    distances = []
    for omega_m in (0.1, 0.03):
        comb = quantum_comb(rect_default, phase_modulator(2.0, omega_m),
                            phase_modulator(2.0, omega_m))
        weights = normalized_weights(comb, rate)
        distances.append(max(abs(v - bessel_series(z, 4.0) ** 2)
                             for z, v in weights.items()))
    ok = distances[0] <= 0.02 and distances[1] < distances[0]
    report(3, ok, f"max dev from J_z(4)^2: {distances[0]:.2e} at drive 0.1 "
                  f"(tol 0.02), {distances[1]:.2e} at 0.03")


def test_criterion_4_cancellation(rect_default):
    fractions = []
    for omega_m in (0.1, 0.03):
        comb = quantum_comb(rect_default, phase_modulator(2.0, omega_m),
                            phase_modulator(-2.0, omega_m))
        total = float(np.sum(comb.weights))
        fractions.append((total - comb.weight(0)) / total)
    ok = fractions[0] <= 0.02 and fractions[1] < fractions[0]
    report(4, ok, f"off-center fraction {fractions[0]:.2e} at drive 0.1 "
                  f"(tol 0.02), {fractions[1]:.2e} at 0.03")


def test_criterion_5_fast_modulation_decoherence(rect_default):
    # expected to FAIL: the residual coherent overlap of sinc tails shifted
    # by multiples of the drive frequency decays only as a sinc of the
    # shift, leaving few-percent deviations even at drive frequency 10
    rate = pair_rate(rect_default)
    weights = {}
    for sign in (+1.0, -1.0):
        comb = quantum_comb(rect_default, phase_modulator(2.0, 10.0),
                            phase_modulator(sign * 2.0, 10.0))
        weights[sign] = normalized_weights(comb, rate)
    worst_conv = 0.0
    for sign in (+1.0, -1.0):
        for z, value in weights[sign].items():
            incoherent = sum(bessel_series(n, 2.0) ** 2
                             * bessel_series(z - n, sign * 2.0) ** 2
                             for n in range(-12, 13))
            worst_conv = max(worst_conv, abs(value - incoherent))
    sidebands = sorted(set(weights[1.0]) | set(weights[-1.0]))
    sign_dev = max(abs(weights[1.0].get(z, 0.0) - weights[-1.0].get(z, 0.0))
                   for z in sidebands)
    ok = worst_conv <= 0.01 and sign_dev <= 1e-6
    report(5, ok, f"max dev from incoherent convolution {worst_conv:.2e} "
                  f"(tol 0.01); depth-sign comb difference {sign_dev:.2e} "
                  f"(tol 1e-6)")


def test_criterion_6_spectrum_conservation_and_sidebands(rect_default):
    # the conservation clause holds exactly; the sideband-height clause is
    # expected to FAIL marginally because the tails of neighboring shifted
    # sinc^2 lines contaminate each peak at the few-percent level
    rate = pair_rate(rect_default)
    worst_total = 0.0
    for depth in (0.0, 2.0, 4.0):
        for omega_m in (0.1, 10.0):
            spectrum = signal_spectrum(rect_default,
                                       phase_modulator(depth, omega_m), 1.0)
            worst_total = max(worst_total,
                              abs(spectrum.total_counts / rate - 1.0))
    spectrum = signal_spectrum(rect_default, phase_modulator(2.0, 10.0), 1.0)
    points = rect_default.grid.points
    locations, heights = [], []
    for n in range(4):
        window = np.abs(points - 10.0 * n) <= 4.0
        idx = np.argmax(np.where(window, spectrum.values, -np.inf))
        locations.append(points[idx])
        heights.append(spectrum.values[idx])
    loc_dev = max(abs(loc - 10.0 * n) for n, loc in enumerate(locations))
    heights = np.array(heights)
    expected = np.array([bessel_series(n, 2.0) ** 2 for n in range(4)])
    height_dev = float(np.max(np.abs(heights / heights.sum()
                                     - expected / expected.sum())))
    # location tolerance: 5% of the sideband spacing (tail interference
    # displaces the weak peaks by up to ~0.25)
    ok = worst_total <= 1e-6 and loc_dev <= 0.5 and height_dev <= 0.02
    report(6, ok, f"total-counts rel dev {worst_total:.2e} (tol 1e-6); "
                  f"peak location dev {loc_dev:.2f} (tol 0.5); normalized "
                  f"height dev {height_dev:.2e} (tol 0.02)")


def test_criterion_7_waveform_round_trip():
    model = make_gaussian_delayed(1.0, 8.0, FrequencyGrid(0.0, 40.0, 8001))
    curve = measured_curve(model, 0.2, 0.2, 12.0, 241)
    waveform = recover_waveform(curve, 16.0, 321)
    step = waveform.tau_values[1] - waveform.tau_values[0]
    peak = waveform.tau_values[int(np.argmax(waveform.intensity))]
    nrmse = float(np.sqrt(np.mean(
        (waveform.intensity - time_intensity(model, waveform.tau_values))
        ** 2)))
    # oscillation period from linearly interpolated zero crossings over the
    # region where the envelope is still well above the crossing noise
    mask = curve.omega_m_values <= 6.0
    f, w = curve.F_values[mask], curve.omega_m_values[mask]
    crossings = [w[i] + f[i] / (f[i] - f[i + 1]) * (w[i + 1] - w[i])
                 for i in range(len(f) - 1) if f[i] * f[i + 1] < 0]
    period = 2.0 * float(np.mean(np.diff(crossings)))
    period_dev = abs(period / (2 * np.pi / 8.0) - 1.0)
    ok = abs(peak - 8.0) <= step and nrmse <= 0.02 and period_dev <= 0.02
    report(7, ok, f"peak at tau={peak:.3f} (target 8 +/- {step:.3f}); "
                  f"NRMSE {nrmse:.2e} (tol 0.02); period rel dev "
                  f"{period_dev:.2e} (tol 0.02)")


def test_criterion_8_bessel_identities():
    worst_norm = 0.0
    for delta in (0.5, 2.0, 4.0):
        order = truncation_order(delta, 1e-12)
        total = sum(bessel_j(n, delta) ** 2
                    for n in range(-order, order + 1))
        worst_norm = max(worst_norm, abs(total - 1.0))
    worst_add = 0.0
    for a in (-2.0, 2.0):
        for b in (-2.0, 2.0):
            reach = truncation_order(abs(a), 1e-12) \
                + truncation_order(abs(b), 1e-12)
            for z in range(9):
                total = sum(bessel_j(n, a) * bessel_j(z - n, b)
                            for n in range(-reach, reach + 1))
                worst_add = max(worst_add, abs(total - bessel_j(z, a + b)))
    ok = worst_norm <= 1e-10 and worst_add <= 1e-8
    report(8, ok, f"normalization dev {worst_norm:.2e} (tol 1e-10); "
                  f"addition-theorem dev {worst_add:.2e} (tol 1e-8)")


def test_criterion_9_preset_determinism(tmp_path):
    # there is no internal parallelism to toggle, so determinism reduces to
    # repeated runs producing byte-identical CSV
    mismatches = []
    for name in PRESET_NAMES:
        outputs = []
        for attempt in ("a", "b"):
            directory = tmp_path / f"{name}_{attempt}"
            directory.mkdir()
            document = dict(preset_config(name))
            document["output"] = str(directory / "run")
            written = run(parse_config(document))
            outputs.append({p.rsplit("/", 1)[-1]: open(p, "rb").read()
                            for p in written if p.endswith(".csv")})
        if outputs[0] != outputs[1]:
            mismatches.append(name)
    ok = not mismatches
    report(9, ok, f"{len(PRESET_NAMES)} presets run twice; "
                  f"mismatches: {mismatches or 'none'}")
