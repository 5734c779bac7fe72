import numpy as np
import pytest

from gsvdkit import gsvd, quotient
from gsvdkit.errors import NeedsAugmentation, NoAugmentationNeeded

from conftest import random_pair

DIAG34 = np.diag([3.0, 4.0])
ROW11 = np.array([[1.0, 1.0]])


def rank_deficient_b(rng, m1, m2, n, n_zero_rows):
    a = rng.standard_normal((m1, n))
    b = rng.standard_normal((m2, n))
    kill = rng.choice(m2, size=n_zero_rows, replace=False)
    b[kill] = 0.0
    return a, b


class TestTrigTable:
    def test_equal_pair_cosines(self):
        f = gsvd.gsvd_decompose(np.eye(2), np.eye(2))
        table = quotient.trig_table(f, np.eye(2), np.eye(2))
        cos_row = table.row("cos")
        assert cos_row.applicable
        np.testing.assert_allclose(cos_row.computed, np.full(2, 1 / np.sqrt(2)),
                                   atol=1e-12)
        assert cos_row.max_dev <= 1e-12

    def test_cot_not_applicable_with_infinite_values(self):
        f = gsvd.gsvd_decompose(DIAG34, ROW11)
        table = quotient.trig_table(f, DIAG34, ROW11)
        assert not table.row("cot").applicable
        assert table.row("tan").applicable  # r = r_a = 2 here

    def test_cot_matches_when_b_full_rank(self, rng):
        for _ in range(10):
            a = rng.standard_normal((5, 3))
            b = rng.standard_normal((4, 3))
            f = gsvd.gsvd_decompose(a, b)
            table = quotient.trig_table(f, a, b)
            assert table.row("cos").max_dev <= 1e-9
            assert table.row("sin").max_dev <= 1e-9
            cot_row = table.row("cot")
            assert cot_row.applicable
            assert cot_row.max_dev <= 1e-9


class TestHorizontalProjector:
    def test_full_column_rank_b_gives_identity(self, rng):
        a = rng.standard_normal((4, 3))
        b = rng.standard_normal((5, 3))
        f = gsvd.gsvd_decompose(a, b)
        proj = quotient.horizontal_projector(f, a, b)
        np.testing.assert_allclose(proj.p, np.eye(4), atol=1e-12)

    def test_worked_example(self):
        # N = [1;-1]/sqrt2, AN along [3;-4], left-null direction [4;3]/5
        f = gsvd.gsvd_decompose(DIAG34, ROW11)
        proj = quotient.horizontal_projector(f, DIAG34, ROW11)
        v = np.array([0.8, 0.6])
        np.testing.assert_allclose(proj.p, np.outer(v, v), atol=1e-12)
        assert proj.kept_dim == 1

    def test_r_equals_rb_gives_identity(self, rng):
        # null(B) inside null(A): build both inside the same 2-dim row space
        a, b = random_pair(rng, 4, 3, 5, rank_a=2, rank_b=2, common_null=3)
        f = gsvd.gsvd_decompose(a, b)
        assert f.r == f.r_b
        proj = quotient.horizontal_projector(f, a, b)
        np.testing.assert_allclose(proj.p, np.eye(4), atol=1e-10)

    def test_projector_properties(self, rng):
        for _ in range(20):
            a, b = rank_deficient_b(rng, 6, 5, 4, 2)
            f = gsvd.gsvd_decompose(a, b)
            proj = quotient.horizontal_projector(f, a, b)
            assert np.linalg.norm(proj.p @ proj.p - proj.p) <= 1e-12
            assert np.linalg.norm(proj.p - proj.p.T) <= 1e-12
            for i in range(f.r):
                u_i = f.u[:, i]
                if f.c[i] == 1.0:
                    assert np.linalg.norm(proj.p @ u_i) <= 1e-10
                else:
                    assert np.linalg.norm(proj.p @ u_i - u_i) <= 1e-10


class TestQuotientCheck:
    def test_worked_example(self):
        gsv, sv_pab, sv_ab = quotient.quotient_check(DIAG34, ROW11)
        np.testing.assert_allclose(gsv, [2.4], atol=1e-12)
        np.testing.assert_allclose(sv_pab, [2.4], atol=1e-10)
        np.testing.assert_allclose(sv_ab, [2.5], atol=1e-12)

    def test_scalar_ratio(self):
        gsv, sv_pab, sv_ab = quotient.quotient_check([[3.0]], [[4.0]])
        for values in (gsv, sv_pab, sv_ab):
            np.testing.assert_allclose(values, [0.75], atol=1e-14)

    def test_full_column_rank_b_all_agree(self, rng):
        for _ in range(10):
            a = rng.standard_normal((6, 3))
            b = rng.standard_normal((5, 3))
            gsv, sv_pab, sv_ab = quotient.quotient_check(a, b)
            np.testing.assert_allclose(sv_pab, gsv, rtol=1e-8)
            np.testing.assert_allclose(sv_ab, gsv, rtol=1e-8)

    def test_theorem_on_rank_deficient_b(self, rng):
        for _ in range(30):
            m1 = int(rng.integers(3, 9))
            m2 = int(rng.integers(3, 8))
            n = int(rng.integers(2, 7))
            a, b = rank_deficient_b(rng, m1, m2, n, int(rng.integers(1, m2 - 1)))
            gsv, sv_pab, _ = quotient.quotient_check(a, b)
            assert gsv.size == sv_pab.size
            if gsv.size:
                np.testing.assert_allclose(sv_pab, gsv, rtol=1e-8)


class TestLimitCurve:
    def test_no_infinite_values_fixed_point(self, rng):
        a = rng.standard_normal((4, 3))
        b = rng.standard_normal((5, 3))
        f = gsvd.gsvd_decompose(a, b)
        assert f.n_infinite == 0
        curve = quotient.limit_curve(f, 1e-2)
        np.testing.assert_allclose(curve.a_eps, a, atol=1e-12 * np.linalg.norm(a))
        np.testing.assert_allclose(curve.b_eps, b, atol=1e-12 * np.linalg.norm(b))

    def test_curve_removes_infinite_values(self):
        baug = quotient.augment_rows(ROW11, 2)
        f = gsvd.gsvd_decompose(DIAG34, baug)
        for eps in (1e-2, 1e-3):
            curve = quotient.limit_curve(f, eps)
            fe = gsvd.gsvd_decompose(curve.a_eps, curve.b_eps)
            assert fe.n_infinite == 0
            values = np.sort(fe.cotangents())
            assert abs(values[0] - 2.4) <= 1e-10
            assert abs(values[1] - 1 / np.tan(eps)) <= 1e-6 / eps

    def test_needs_augmentation(self):
        f = gsvd.gsvd_decompose(DIAG34, ROW11)
        with pytest.raises(NeedsAugmentation):
            quotient.limit_curve(f, 1e-2)

    def test_extra_sine_rows_beyond_rank(self):
        # m2 > r: the fresh sines land in the completion block of V
        b3 = np.array([[1.0, 1.0], [0.0, 0.0], [0.0, 0.0]])
        f = gsvd.gsvd_decompose(DIAG34, b3)
        curve = quotient.limit_curve(f, 1e-2)
        fe = gsvd.gsvd_decompose(curve.a_eps, curve.b_eps)
        assert fe.n_infinite == 0
        values = np.sort(fe.cotangents())
        assert abs(values[0] - 2.4) <= 1e-10
        assert abs(values[1] - 1 / np.tan(1e-2)) <= 1e-6

    def test_epsilon_domain(self):
        baug = quotient.augment_rows(ROW11, 2)
        f = gsvd.gsvd_decompose(DIAG34, baug)
        for bad in (0.0, -1e-3, np.pi / 4, 1.0):
            with pytest.raises(ValueError):
                quotient.limit_curve(f, bad)

    def test_angle_continuity_under_refinement(self):
        # max adjacent angle jump shrinks as the epsilon grid refines
        baug = quotient.augment_rows(ROW11, 2)
        f = gsvd.gsvd_decompose(DIAG34, baug)

        def max_jump(grid):
            thetas = []
            for eps in grid:
                curve = quotient.limit_curve(f, eps)
                fe = gsvd.gsvd_decompose(curve.a_eps, curve.b_eps)
                thetas.append(np.sort(fe.theta()))
            thetas = np.array(thetas)
            return float(np.max(np.abs(np.diff(thetas, axis=0))))

        coarse = max_jump(np.linspace(1e-3, 0.2, 6))
        fine = max_jump(np.linspace(1e-3, 0.2, 48))
        assert fine < coarse / 4


class TestDirectPerturbation:
    # the explicitly perturbed pair (B gains the row [0, eps]); its values
    # behave as 2.4 + O(eps^2) and 5/eps + O(eps)
    def test_scaling_orders(self):
        eps_grid = np.array([1e-2, 1e-3, 1e-4])
        finite_dev = []
        for eps in eps_grid:
            b_eps = np.array([[1.0, 1.0], [0.0, eps]])
            f = gsvd.gsvd_decompose(DIAG34, b_eps)
            values = np.sort(f.cotangents())
            finite_dev.append(abs(values[0] - 2.4))
            assert abs(values[1] - 5 / eps) / (5 / eps) <= 1e-3
        slope = np.polyfit(np.log(eps_grid), np.log(finite_dev), 1)[0]
        assert abs(slope - 2.0) <= 0.2


class TestAugmentRows:
    def test_pads_with_zero_rows(self):
        np.testing.assert_array_equal(quotient.augment_rows(ROW11, 2),
                                      [[1.0, 1.0], [0.0, 0.0]])

    def test_error_when_not_needed(self):
        with pytest.raises(NoAugmentationNeeded):
            quotient.augment_rows(ROW11, 1)

    def test_factors_unchanged(self):
        f0 = gsvd.gsvd_decompose(DIAG34, ROW11)
        f1 = gsvd.gsvd_decompose(DIAG34, quotient.augment_rows(ROW11, 2))
        np.testing.assert_allclose(f0.c, f1.c, atol=1e-12)
        np.testing.assert_allclose(f0.s, f1.s, atol=1e-12)
        np.testing.assert_allclose(f0.u, f1.u, atol=1e-12)
        np.testing.assert_allclose(f0.h, f1.h, atol=1e-12)
