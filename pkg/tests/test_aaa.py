import numpy as np
import pytest
from numpy.testing import assert_allclose

from aaafit.aaa import aaa_fit, cleanup
from aaafit.barycentric import BarycentricRational
from aaafit.spectra import poles, residues


def roots_of_unity(n):
    return np.exp(2j * np.pi * np.arange(1, n + 1) / n)


class TestBasics:
    def test_constant_data_one_support_point(self):
        Z = np.linspace(0, 1, 12)
        res = aaa_fit(Z, np.full(12, 3.5))
        assert len(res.approximant) == 1
        assert res.final_error == 0.0
        assert res.converged

    def test_exact_degree_one_rational(self):
        Z = roots_of_unity(64)
        F = 1.0 / (Z - 2.0)
        res = aaa_fit(Z, F)
        assert len(res.approximant) == 2
        assert res.converged
        assert res.final_error <= 1e-14 * np.max(np.abs(F))
        pl = poles(res.approximant)
        assert len(pl) == 1
        assert abs(pl[0] - 2.0) <= 1e-12

    def test_exp_on_roots_of_unity(self):
        Z = roots_of_unity(100)
        res = aaa_fit(Z, np.exp(Z))
        # reference behavior: degree 7, error around 2.8e-15 on the disk
        assert res.converged
        assert res.approximant.degree <= 8
        assert res.final_error <= 1e-13 * np.e

    def test_support_points_are_samples(self):
        Z = roots_of_unity(50)
        res = aaa_fit(Z, np.tan(Z))
        for s in res.approximant.nodes:
            assert s in Z

    def test_history_and_final_error_consistency(self):
        Z = roots_of_unity(80)
        F = np.exp(Z) / (Z - 1.5)
        res = aaa_fit(Z, F)
        assert len(res.error_history) == len(res.support_indices)
        recomputed = np.max(np.abs(F - res.approximant(Z)))
        assert abs(recomputed - res.final_error) <= 1e-15 + 1e-12 * recomputed

    def test_degree_cap_reports_not_converged(self):
        Z = roots_of_unity(64)
        res = aaa_fit(Z, np.tan(2 * Z), max_support=4)
        assert not res.converged
        assert len(res.approximant) <= 4

    def test_sample_exhaustion(self):
        rng = np.random.default_rng(0)
        Z = np.arange(4).astype(complex)
        F = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        res = aaa_fit(Z, F, rel_tol=1e-16, max_support=10)
        assert not res.converged
        assert len(res.support_indices) == 3  # stops with one row left


class TestValidation:
    def test_duplicate_points_rejected(self):
        with pytest.raises(ValueError, match="duplicate"):
            aaa_fit([1, 2, 1], [1, 2, 3])

    def test_too_few_samples(self):
        with pytest.raises(ValueError, match="two"):
            aaa_fit([1], [1])

    def test_bad_tolerance(self):
        with pytest.raises(ValueError, match="rel_tol"):
            aaa_fit([1, 2], [1, 2], rel_tol=0)

    def test_bad_max_support(self):
        with pytest.raises(ValueError, match="max_support"):
            aaa_fit([1, 2], [1, 2], max_support=0)

    def test_non_finite_values(self):
        with pytest.raises(ValueError, match="finite"):
            aaa_fit([1, 2, 3], [1, np.inf, 3])


class TestExactRecovery:
    # a random barycentric function of degree d is recovered essentially
    # exactly from >= 4d samples by m = d+1 support points
    @pytest.mark.parametrize("d", [1, 2, 3, 5, 7, 10])
    def test_random_rational(self, d):
        rng = np.random.default_rng(100 + d)
        m = d + 1
        nodes = rng.standard_normal(m) + 1j * rng.standard_normal(m)
        vals = rng.standard_normal(m) + 1j * rng.standard_normal(m)
        wts = np.exp(1j * rng.uniform(0, 2 * np.pi, m)) * rng.uniform(0.5, 2.0, m)
        target = BarycentricRational(nodes, vals, wts)
        Z = 3.0 * roots_of_unity(max(4 * d, 16))
        F = target(Z)
        res = aaa_fit(Z, F)
        assert len(res.approximant) <= m
        assert res.final_error <= 1e-12 * np.max(np.abs(F))
        # pointwise agreement at fresh points away from poles
        probe = 2.5 * roots_of_unity(37)
        assert_allclose(res.approximant(probe), target(probe),
                        rtol=1e-11, atol=1e-11 * np.max(np.abs(F)))


class TestCleanup:
    def test_idempotent_when_clean(self):
        Z = roots_of_unity(64)
        F = 1.0 / (Z - 2.0)
        res = aaa_fit(Z, F, cleanup_spurious=False)
        out = cleanup(res, Z, F)
        assert out is res  # nothing to remove: unchanged object

    def test_single_node_unchanged(self):
        Z = np.linspace(0, 1, 8)
        F = np.ones(8)
        res = aaa_fit(Z, F, cleanup_spurious=False)
        assert len(res.approximant) == 1
        assert cleanup(res, Z, F) is res

    def test_removes_forced_doublets(self):
        # push far beyond convergence so spurious pole-zero pairs appear
        Z = roots_of_unity(100)
        F = np.exp(Z)
        raw = aaa_fit(Z, F, rel_tol=1e-16, max_support=20, cleanup_spurious=False)
        pl = poles(raw.approximant)
        rs = residues(raw.approximant, pl)
        spacing = 2 * np.pi / 100
        tiny = np.abs(rs) < 1e-13 * np.e * spacing
        cleaned = cleanup(raw, Z, F)
        if tiny.any():
            cleaned_poles = poles(cleaned.approximant)
            for p in pl[tiny]:
                assert np.min(np.abs(cleaned_poles - p)) > 1e-8, \
                    "tiny-residue pole survived cleanup"
        assert cleaned.final_error <= 10 * max(raw.final_error, 2.3e-15)
