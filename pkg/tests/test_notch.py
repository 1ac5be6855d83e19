"""Biquad notch design and block-wise filtering."""

import numpy as np
import pytest

from rpt.notch import design_notch, filter_block, filter_blocked


@pytest.fixture(scope="module")
def coeffs():
    return design_notch(50.0, 360.0, 1.0)


class TestDesign:
    def test_null_at_f0(self, coeffs):
        assert coeffs.magnitude(50.0) < 1e-12

    def test_unity_at_dc_and_nyquist(self, coeffs):
        assert abs(coeffs.magnitude(0.0) - 1.0) < 1e-9
        assert abs(coeffs.magnitude(180.0) - 1.0) < 1e-9

    def test_stable(self, coeffs):
        assert -1.0 < coeffs.a2 < 1.0
        poles = np.roots(coeffs.a)
        assert np.abs(poles).max() < 1.0

    def test_bandwidth(self, coeffs):
        # dense sweep of the sampled magnitude response
        f = np.linspace(0.01, 179.99, 200001)
        mag = np.array([coeffs.magnitude(x) for x in f])
        below = f[mag < 1.0 / np.sqrt(2.0)]
        width = below.max() - below.min()
        assert abs(width - 50.0) <= 5.0
        assert below.min() < 50.0 < below.max()

    def test_rejects_bad_f0(self):
        with pytest.raises(ValueError):
            design_notch(0.0, 360.0, 1.0)
        with pytest.raises(ValueError):
            design_notch(180.0, 360.0, 1.0)
        with pytest.raises(ValueError):
            design_notch(50.0, 360.0, 0.0)


class TestFilterBlock:
    def test_zero_in_zero_out(self, coeffs):
        assert not filter_block(coeffs, np.zeros(100)).any()

    def test_steady_state_tone_rejection(self, coeffs):
        fs = 360.0
        n = np.arange(int(40 * fs))
        x = np.sin(2 * np.pi * 50.0 * n / fs)
        y = filter_block(coeffs, x)
        tail = y[len(y) // 2 :]
        in_rms = np.sqrt(np.mean(x**2))
        assert np.sqrt(np.mean(tail**2)) < 1e-6 * in_rms

    def test_impulse_response_head(self, coeffs):
        y = filter_block(coeffs, np.array([1.0, 0.0, 0.0]))
        b0, b1, b2 = coeffs.b0, coeffs.b1, coeffs.b2
        a1, a2 = coeffs.a1, coeffs.a2
        want = [b0, b1 - b0 * a1, b2 - b1 * a1 - b0 * (a2 - a1 * a1)]
        assert np.abs(y - want).max() < 1e-12

    def test_linearity(self, coeffs):
        rng = np.random.default_rng(11)
        x = rng.normal(size=300)
        y = rng.normal(size=300)
        lhs = filter_block(coeffs, 2.0 * x - 3.0 * y)
        rhs = 2.0 * filter_block(coeffs, x) - 3.0 * filter_block(coeffs, y)
        assert np.abs(lhs - rhs).max() < 1e-12 * max(np.abs(rhs).max(), 1.0)

    def test_time_invariance(self, coeffs):
        rng = np.random.default_rng(12)
        x = rng.normal(size=200)
        delayed = np.concatenate([np.zeros(10), x])
        y = filter_block(coeffs, x)
        yd = filter_block(coeffs, delayed)
        assert np.abs(yd[10:] - y).max() < 1e-12


class TestFilterBlocked:
    def test_state_reset_differs_from_single_pass(self, coeffs):
        rng = np.random.default_rng(13)
        x = rng.normal(size=72)
        single = filter_block(coeffs, x)
        blocked = filter_blocked(coeffs, x, 36)
        assert np.abs(single - blocked).max() > 1e-6

    def test_blocked_equals_independent_blocks(self, coeffs):
        rng = np.random.default_rng(14)
        x = rng.normal(size=108)
        blocked = filter_blocked(coeffs, x, 36)
        for i in range(3):
            blk = filter_block(coeffs, x[i * 36 : (i + 1) * 36])
            assert np.abs(blocked[i * 36 : (i + 1) * 36] - blk).max() < 1e-12

    def test_partial_final_block(self, coeffs):
        rng = np.random.default_rng(15)
        x = rng.normal(size=50)
        out = filter_blocked(coeffs, x, 36)
        assert len(out) == 50
        tail = filter_block(coeffs, np.concatenate([x[36:], np.zeros(22)]))
        assert np.abs(out[36:] - tail[:14]).max() < 1e-12
