import numpy as np
import pytest

from topostream.kernels import SIGMA_MIN, cim, cim_to_many, estimate_bandwidth, gaussian_kernel


class TestGaussianKernel:
    def test_zero_distance_is_one(self):
        for a in [0.0, -3.5, 17.2]:
            for sigma in [0.1, 1.0, 10.0]:
                assert gaussian_kernel(a, a, sigma) == 1.0

    def test_hand_values(self):
        # direct evaluation of exp(-(x-y)^2 / (2 sigma^2))
        assert gaussian_kernel(0.0, 1.0, 1.0) == pytest.approx(np.exp(-0.5), rel=1e-9)
        assert gaussian_kernel(0.0, 3.0, 1.0) == pytest.approx(np.exp(-4.5), rel=1e-9)

    def test_invalid_inputs(self):
        with pytest.raises(ValueError):
            gaussian_kernel(0.0, 1.0, 0.0)
        with pytest.raises(ValueError):
            gaussian_kernel(0.0, 1.0, -1.0)
        with pytest.raises(ValueError):
            gaussian_kernel(np.nan, 1.0, 1.0)
        with pytest.raises(ValueError):
            gaussian_kernel(0.0, np.inf, 1.0)


class TestCim:
    def test_identity(self):
        x = np.array([0.3, -1.2, 4.0])
        assert cim(x, x, 0.7) == 0.0

    def test_hand_values(self):
        expected = np.sqrt(1.0 - np.exp(-0.5))
        assert cim([0, 0], [1, 1], 1.0) == pytest.approx(expected, rel=1e-9)
        expected2 = np.sqrt(1.0 - (np.exp(-0.5) + np.exp(-4.5)) / 2.0)
        assert cim([0, 0], [1, 3], 1.0) == pytest.approx(expected2, rel=1e-9)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            cim([0, 0], [1, 1, 1], 1.0)

    def test_bounds_symmetry_identity_random(self):
        # 10^4 random cases: range, symmetry (bit-exact), zero iff equal
        rng = np.random.default_rng(7)
        for _ in range(100):
            d = rng.integers(1, 6)
            xs = rng.normal(size=(100, d)) * 10
            ys = rng.normal(size=(100, d)) * 10
            sigma = float(rng.uniform(0.05, 5.0))
            for x, y in zip(xs, ys):
                v = cim(x, y, sigma)
                assert 0.0 <= v <= 1.0
                assert v == cim(y, x, sigma)
                assert (v == 0.0) == bool(np.all(x == y))

    def test_monotone_in_sigma(self):
        sigmas = np.linspace(0.1, 10.0, 50)
        vals = [cim([0.0], [1.0], s) for s in sigmas]
        assert all(a > b for a, b in zip(vals, vals[1:]))

    def test_cim_to_many_matches_scalar(self):
        rng = np.random.default_rng(0)
        w = rng.normal(size=(20, 3))
        x = rng.normal(size=3)
        vals = cim_to_many(x, w, 0.8)
        for i in range(20):
            assert vals[i] == cim(x, w[i], 0.8)


class TestEstimateBandwidth:
    def test_unit_std_2d(self):
        # population std exactly 1 per attribute, 64 samples, d = 2:
        # H = (4/4)^(1/6) * 1 * 64^(-1/6) = 0.5 for each attribute
        base = np.array([[1.0, 1.0], [-1.0, -1.0]])
        samples = np.tile(base, (32, 1))
        assert estimate_bandwidth(samples) == pytest.approx(0.5, rel=1e-9)

    def test_1d_two_samples(self):
        # {0, 2}: population std 1, n = 2, d = 1
        expected = (4.0 / 3.0) ** 0.2 * 2.0 ** -0.2
        assert estimate_bandwidth([[0.0], [2.0]]) == pytest.approx(expected, rel=1e-9)

    def test_degenerate_samples(self):
        samples = np.tile([[0.3, 0.7]], (10, 1))
        assert estimate_bandwidth(samples) == SIGMA_MIN

    def test_empty(self):
        with pytest.raises(ValueError):
            estimate_bandwidth(np.empty((0, 2)))

    def test_scale_covariance(self):
        rng = np.random.default_rng(3)
        samples = rng.normal(size=(40, 3))
        base = estimate_bandwidth(samples)
        for c in [0.5, 2.0, 117.0]:
            assert estimate_bandwidth(samples * c) == pytest.approx(c * base, rel=1e-12)
