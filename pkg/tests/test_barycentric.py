import numpy as np
import pytest
from numpy.testing import assert_allclose

from aaafit.barycentric import (BarycentricRational, build_loewner,
                                min_singular_vector)


def one_over_z():
    # symbolic check: with nodes +-1, values +-1, unit weights,
    # n(z) = 1/(z-1) - 1/(z+1) = 2/(z^2-1), d(z) = 2z/(z^2-1), so r(z) = 1/z
    return BarycentricRational([1, -1], [1, -1], [1, 1])


class TestEval:
    def test_constant_single_node(self):
        r = BarycentricRational([0], [1], [1])
        assert r(5) == 1
        assert r(-3 + 2j) == 1

    def test_inverse_at_two(self):
        assert_allclose(one_over_z()(2), 0.5, rtol=1e-15)

    def test_support_point_branch(self):
        r = one_over_z()
        assert r(1) == 1
        assert r(-1) == -1

    def test_pole_gives_infinite_sentinel(self):
        # d(0) = 0 exactly by symmetry, n(0) = -2
        val = one_over_z()(0)
        assert np.isinf(abs(val))

    def test_vectorized_shapes(self):
        r = one_over_z()
        z = np.array([[2.0, 4.0], [0.5, -2.0]])
        out = r(z)
        assert out.shape == (2, 2)
        assert_allclose(out, 1.0 / z, rtol=1e-14)

    def test_interpolation_exact_at_nodes(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            m = rng.integers(1, 9)
            nodes = rng.standard_normal(m) + 1j * rng.standard_normal(m)
            values = rng.standard_normal(m) + 1j * rng.standard_normal(m)
            weights = rng.standard_normal(m) + 1j * rng.standard_normal(m)
            weights[np.abs(weights) < 0.1] += 0.5
            r = BarycentricRational(nodes, values, weights)
            for s, f in zip(r.nodes, r.values):
                assert r(s) == f


class TestConstruction:
    def test_zero_weight_pruned(self):
        r = BarycentricRational([0, 1, 2], [5, 6, 7], [1, 0, 1])
        assert len(r) == 2
        assert 1.0 + 0j not in r.nodes

    def test_tiny_weight_pruned(self):
        r = BarycentricRational([0, 1], [5, 6], [1, 1e-16])
        assert len(r) == 1

    def test_all_zero_weights_rejected(self):
        with pytest.raises(ValueError, match="zero"):
            BarycentricRational([0, 1], [1, 2], [0, 0])

    def test_duplicate_nodes_rejected(self):
        with pytest.raises(ValueError, match="distinct"):
            BarycentricRational([1, 1], [1, 2], [1, 1])

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError, match="length"):
            BarycentricRational([1, 2], [1], [1, 1])

    def test_degree(self):
        assert one_over_z().degree == 1


class TestLoewner:
    def test_single_entry_by_hand(self):
        # (F_0 - f(1)) / (Z_0 - 1) = (4 - 1) / (2 - 1) = 3
        L = build_loewner([2, 1], [4, 1], [1])
        assert L.entries.shape == (1, 1)
        assert_allclose(L.entries[0, 0], 3.0)
        assert L.row_points[0] == 2
        assert L.row_indices[0] == 0

    def test_constant_data_gives_zero_matrix(self):
        L = build_loewner([0, 1, 2, 3], [5, 5, 5, 5], [0, 2])
        assert_allclose(L.entries, 0)

    def test_two_column_row(self):
        # entries (1-0)/(1-0) and (1-2)/(1-2)
        L = build_loewner([0, 1, 2], [0, 1, 2], [0, 2])
        assert L.entries.shape == (1, 2)
        assert_allclose(L.entries[0], [1.0, 1.0])

    def test_rejects_empty_and_full_support(self):
        with pytest.raises(ValueError):
            build_loewner([0, 1], [1, 2], [])
        with pytest.raises(ValueError):
            build_loewner([0, 1], [1, 2], [0, 1])
        with pytest.raises(ValueError):
            build_loewner([0, 1, 2], [1, 2, 3], [1, 1])

    def test_residual_identity(self):
        # A @ w must equal d(Z_i) * (F_i - r(Z_i)) entrywise at non-support rows
        rng = np.random.default_rng(3)
        for _ in range(10):
            n = 24
            Z = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            F = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            support = rng.choice(n, size=5, replace=False)
            L = build_loewner(Z, F, support)
            w = min_singular_vector(L.entries)
            r = BarycentricRational(Z[support], F[support], w)
            assert len(r) == len(w), "pruning would invalidate the identity"
            d = np.zeros(len(L.row_points), dtype=complex)
            for s, wj in zip(Z[support], w):
                d += wj / (L.row_points - s)
            lhs = L.entries @ w
            rhs = d * (F[L.row_indices] - r(L.row_points))
            assert_allclose(lhs, rhs, rtol=1e-12, atol=1e-12 * np.max(np.abs(lhs)))


class TestMinSingularVector:
    def test_rank_one_null_vector(self):
        w = min_singular_vector(np.array([[1.0, 0.0], [0.0, 0.0]]))
        assert_allclose(w, [0, 1], atol=1e-15)

    def test_zero_matrix_canonical_tie_break(self):
        w = min_singular_vector(np.zeros((2, 2)))
        assert_allclose(w, [1, 0], atol=1e-15)

    def test_randomized_optimality(self):
        rng = np.random.default_rng(11)
        A = rng.standard_normal((10, 3)) + 1j * rng.standard_normal((10, 3))
        w = min_singular_vector(A)
        target = np.linalg.norm(A @ w)
        for _ in range(1000):
            v = rng.standard_normal(3) + 1j * rng.standard_normal(3)
            v /= np.linalg.norm(v)
            assert target <= np.linalg.norm(A @ v) + 1e-12

    def test_unit_norm(self):
        rng = np.random.default_rng(4)
        for _ in range(25):
            A = rng.standard_normal((8, 5)) + 1j * rng.standard_normal((8, 5))
            w = min_singular_vector(A)
            assert abs(np.linalg.norm(w) - 1.0) <= 1e-14

    def test_phase_convention(self):
        rng = np.random.default_rng(5)
        A = rng.standard_normal((6, 4)) + 1j * rng.standard_normal((6, 4))
        w = min_singular_vector(A)
        i = int(np.argmax(np.abs(w)))
        assert w[i].imag == pytest.approx(0.0, abs=1e-15)
        assert w[i].real > 0

    def test_underdetermined_zero_padding(self):
        # 1 x 3: conceptual padding with zero rows; answer is in the null space
        A = np.array([[1.0, 1.0, 1.0]])
        w = min_singular_vector(A)
        assert abs(A @ w)[0] <= 1e-14

    def test_non_finite_rejected(self):
        with pytest.raises(ValueError, match="finite"):
            min_singular_vector(np.array([[np.nan, 1.0], [0.0, 1.0]]))
