import numpy as np
import pytest
from numpy.testing import assert_allclose

from aaafit.aaa import aaa_fit
from aaafit.barycentric import BarycentricRational
from aaafit.geometry import circle_curve
from aaafit.spectra import (pole_zero_report, poles, residues, split_poles,
                            zeros)


def one_over_z():
    return BarycentricRational([1, -1], [1, -1], [1, 1])


def circle_samples(n=64, radius=1.0):
    return radius * np.exp(2j * np.pi * np.arange(1, n + 1) / n)


class TestPoles:
    def test_inverse_function(self):
        pl = poles(one_over_z())
        assert len(pl) == 1
        assert abs(pl[0]) <= 1e-14

    def test_constant_has_none(self):
        assert len(poles(BarycentricRational([2], [3], [1]))) == 0

    def test_count_bound(self):
        Z = circle_samples(80)
        res = aaa_fit(Z, np.exp(Z) / (Z - 1.3))
        r = res.approximant
        assert len(poles(r)) <= len(r) - 1
        assert len(zeros(r)) <= len(r) - 1


class TestZeros:
    def test_inverse_has_no_finite_zeros(self):
        assert len(zeros(one_over_z())) == 0

    def test_exact_rational_zero_recovered(self):
        Z = circle_samples(64)
        F = (Z - 3.0) / (Z - 2.0)
        res = aaa_fit(Z, F)
        zr = zeros(res.approximant)
        assert len(zr) == 1
        assert abs(zr[0] - 3.0) <= 1e-12


class TestResidues:
    def test_inverse_residue_is_one(self):
        r = one_over_z()
        pl = poles(r)
        assert_allclose(residues(r, pl), [1.0], rtol=1e-13)

    def test_scaled_pole(self):
        Z = circle_samples(64)
        F = 5.0 / (Z - 2.0)
        res = aaa_fit(Z, F)
        pl = poles(res.approximant)
        k = int(np.argmin(np.abs(pl - 2.0)))
        rs = residues(res.approximant, pl)
        assert abs(rs[k] - 5.0) <= 1e-12 * 5.0

    def test_exact_rational_residue_value(self):
        # (z-3)/(z-2) has residue (2-3) = -1 at the pole 2
        Z = circle_samples(64)
        res = aaa_fit(Z, (Z - 3.0) / (Z - 2.0))
        pl = poles(res.approximant)
        k = int(np.argmin(np.abs(pl - 2.0)))
        assert_allclose(residues(res.approximant, pl)[k], -1.0, rtol=1e-11)

    def test_near_multiple_warns(self):
        r = one_over_z()
        with pytest.warns(RuntimeWarning, match="multiple"):
            residues(r, np.array([0.5, 0.5 + 1e-15]))

    def test_weight_scale_invariance(self):
        rng = np.random.default_rng(17)
        Z = circle_samples(64)
        res = aaa_fit(Z, np.exp(Z) / (Z - 1.5))
        r = res.approximant
        c = (rng.standard_normal() + 1j * rng.standard_normal()) or 1.0
        scaled = BarycentricRational(r.nodes, r.values, c * r.weights)
        for get in (poles, zeros):
            a = np.sort_complex(get(r))
            b = np.sort_complex(get(scaled))
            assert_allclose(a, b, rtol=1e-12, atol=1e-12)
        pl = np.sort_complex(poles(r))
        ra, rb = residues(r, pl), residues(scaled, pl)
        # relative comparison is only meaningful above the cancellation floor
        big = np.abs(ra) > 1e-8 * np.max(np.abs(ra))
        assert_allclose(ra[big], rb[big], rtol=1e-11)
        assert_allclose(ra[~big], rb[~big], atol=1e-11 * np.max(np.abs(ra)))

    def test_local_expansion(self):
        # near a well-separated simple pole p with residue rho, (z-p) r(z) ~ rho
        rng = np.random.default_rng(23)
        Z = circle_samples(96)
        res = aaa_fit(Z, 5.0 / (Z - 1.4) + 2.0 / (Z + 1.8j))
        r = res.approximant
        pl = poles(r)
        rs = residues(r, pl)
        genuine = np.abs(rs) > 1e-8
        assert genuine.sum() == 2
        for p, rho in zip(pl[genuine], rs[genuine]):
            direction = np.exp(2j * np.pi * rng.random())
            z = p + 1e-7 * (1 + abs(p)) * direction
            assert abs((z - p) * r(z) - rho) <= 1e-6 * abs(rho)


class TestProductForm:
    def test_eval_matches_pole_zero_factorization(self):
        Z = circle_samples(64)
        F = (Z - 3.0) * (Z + 0.5j) / ((Z - 2.0) * (Z + 1.7))
        res = aaa_fit(Z, F)
        r = res.approximant
        rep = pole_zero_report(r)
        probe = 1.3 * circle_samples(11)
        # leading coefficient from one probe point
        def product(z):
            num = np.prod([z - zr for zr in rep.zeros])
            den = np.prod([z - p for p in rep.poles])
            return num / den
        c = r(probe[0]) / product(probe[0])
        for z in probe[1:]:
            assert abs(c * product(z) - r(z)) <= 1e-8 * abs(r(z))


class TestSplitPoles:
    def test_origin_inside_unit_circle(self):
        curve = circle_curve(n_vertices=512)
        inside, outside = split_poles(np.array([0j]), curve)
        assert list(inside) == [0j]
        assert len(outside) == 0

    def test_two_outside(self):
        curve = circle_curve(n_vertices=512)
        inside, outside = split_poles(np.array([2.0 + 0j]), curve)
        assert len(inside) == 0
        assert list(outside) == [2.0 + 0j]

    def test_mixed_partition(self):
        curve = circle_curve(n_vertices=512)
        pl = np.array([0.5 + 0j, 3.0 + 0j, -2j])
        inside, outside = split_poles(pl, curve)
        assert_allclose(inside, [0.5 + 0j])
        assert_allclose(np.sort_complex(outside), np.sort_complex([3.0, -2j]))

    def test_near_curve_goes_outside_with_warning(self):
        curve = circle_curve(n_vertices=512)
        p = curve.vertices[0]  # exactly on the polyline
        with pytest.warns(RuntimeWarning, match="diameter"):
            inside, outside = split_poles(np.array([p]), curve)
        assert len(inside) == 0
        assert len(outside) == 1
