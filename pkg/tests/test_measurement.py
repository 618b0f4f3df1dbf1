import numpy as np
import pytest

from biphoton_modulation import (ConfigError, FrequencyGrid,
                                 GridCoverageError, cosine_transform,
                                 integrate, make_gaussian_delayed,
                                 measured_curve, recover_waveform,
                                 wavefunction)
from oracles import time_intensity


@pytest.fixture(scope="module")
def gauss_grid():
    return FrequencyGrid(0.0, 40.0, 8001)


@pytest.fixture(scope="module")
def delayed(gauss_grid):
    return make_gaussian_delayed(1.0, 8.0, gauss_grid)


@pytest.fixture(scope="module")
def delayed_curve(delayed):
    return measured_curve(delayed, 0.2, 0.2, 12.0, 241)


class TestMeasuredCurve:
    def test_value_at_zero_shift(self, delayed, delayed_curve):
        kappa = 0.2 * 0.2 / (2 * np.pi)
        norm = integrate(np.abs(wavefunction(delayed)) ** 2, delayed.grid)
        assert delayed_curve.F_values[0] == pytest.approx(2 * kappa *
                                                          float(norm.real))
        assert delayed_curve.kappa == pytest.approx(kappa)

    def test_autocorrelation_bound(self, delayed_curve):
        assert np.all(np.abs(delayed_curve.F_values)
                      <= delayed_curve.F_values[0] + 1e-12)

    def test_matches_analytic_gaussian(self, delayed_curve):
        # analytic curve: 2 kappa sqrt(2 pi) exp(-wm^2/8) cos(8 wm)
        kappa = delayed_curve.kappa
        wm = delayed_curve.omega_m_values
        expected = (2 * kappa * np.sqrt(2 * np.pi) * np.exp(-wm ** 2 / 8)
                    * np.cos(8 * wm))
        assert np.allclose(delayed_curve.F_values, expected, atol=1e-8)

    def test_linear_in_depth_product(self, delayed, delayed_curve):
        doubled = measured_curve(delayed, 0.4, 0.2, 12.0, 241)
        assert np.allclose(doubled.F_values, 2 * delayed_curve.F_values,
                           rtol=1e-12)

    def test_mean_subtraction_is_serialization_only(self, delayed_curve):
        shifted = delayed_curve.mean_subtracted()
        assert np.mean(shifted) == pytest.approx(0.0, abs=1e-15)
        assert delayed_curve.F_values[0] != pytest.approx(shifted[0])

    def test_large_depth_product_warns(self, delayed):
        with pytest.warns(UserWarning):
            measured_curve(delayed, 0.5, 0.5, 12.0, 41)

    def test_coverage_error(self, delayed):
        with pytest.raises(GridCoverageError):
            measured_curve(delayed, 0.2, 0.2, 100.0, 41)

    def test_bad_sample_count(self, delayed):
        with pytest.raises(ConfigError):
            measured_curve(delayed, 0.2, 0.2, 12.0, 1)


class TestRecovery:
    def test_peak_at_delay(self, delayed_curve):
        waveform = recover_waveform(delayed_curve, 16.0, 321)
        step = waveform.tau_values[1] - waveform.tau_values[0]
        peak = waveform.tau_values[np.argmax(waveform.intensity)]
        assert abs(peak - 8.0) <= step
        assert np.max(waveform.intensity) == pytest.approx(1.0)

    def test_round_trip_zero_delay(self, gauss_grid):
        model = make_gaussian_delayed(1.0, 0.0, gauss_grid)
        curve = measured_curve(model, 0.2, 0.2, 12.0, 241)
        waveform = recover_waveform(curve, 8.0, 161)
        assert np.argmax(waveform.intensity) == 0
        # the cosine transform is even in tau by construction
        taus = np.linspace(-4.0, 4.0, 81)
        raw = cosine_transform(curve, taus)
        assert np.allclose(raw, raw[::-1], rtol=1e-12)

    @pytest.mark.parametrize("duration", [0.5, 1.0, 2.0])
    @pytest.mark.parametrize("delay", [0.0, 4.0, 8.0])
    def test_round_trip_fidelity(self, gauss_grid, duration, delay):
        model = make_gaussian_delayed(duration, delay, gauss_grid)
        curve = measured_curve(model, 0.2, 0.2, 12.0 / duration, 481)
        tau_max = delay + 6.0
        waveform = recover_waveform(curve, tau_max, 481)
        oracle = time_intensity(model, waveform.tau_values)
        nrmse = np.sqrt(np.mean((waveform.intensity - oracle) ** 2))
        assert nrmse <= 0.02

    def test_delay_covariance(self, gauss_grid):
        near = make_gaussian_delayed(1.0, 4.0, gauss_grid)
        far = make_gaussian_delayed(1.0, 8.0, gauss_grid)
        curve_near = measured_curve(near, 0.2, 0.2, 12.0, 241)
        curve_far = measured_curve(far, 0.2, 0.2, 12.0, 241)
        wf_near = recover_waveform(curve_near, 16.0, 321)
        wf_far = recover_waveform(curve_far, 16.0, 321)
        step = wf_near.tau_values[1] - wf_near.tau_values[0]
        peak_near = wf_near.tau_values[np.argmax(wf_near.intensity)]
        peak_far = wf_far.tau_values[np.argmax(wf_far.intensity)]
        assert abs((peak_far - peak_near) - 4.0) <= step
        # the delay only changes the oscillation, not the envelope magnitude
        assert np.max(np.abs(curve_far.F_values)) == pytest.approx(
            np.max(np.abs(curve_near.F_values)), rel=1e-2)

    def test_normalized_result_is_depth_independent(self, delayed):
        weak = recover_waveform(measured_curve(delayed, 0.1, 0.1, 12.0, 241),
                                16.0, 321)
        strong = recover_waveform(measured_curve(delayed, 0.3, 0.2, 12.0,
                                                 241), 16.0, 321)
        assert np.allclose(weak.intensity, strong.intensity, atol=1e-10)

    def test_clipping_is_reported_and_small(self, delayed_curve):
        waveform = recover_waveform(delayed_curve, 16.0, 321)
        assert 0.0 <= waveform.clipped_fraction < 0.05

    def test_nyquist_guard(self, delayed):
        coarse = measured_curve(delayed, 0.2, 0.2, 12.0, 41)
        with pytest.raises(ConfigError):
            recover_waveform(coarse, 16.0, 321)
