import math
from dataclasses import replace

import numpy as np
import pytest

from opfourier.groups import make_group
from opfourier.inequalities import (
    CLARKSON_VARIANTS,
    check_bhatia_kittaneh,
    check_clarkson,
    check_hausdorff_young,
    check_main,
    check_main_sup,
    check_weighted,
    conjugate_exponent,
)
from opfourier.sampling import complex_gaussian, random_field, random_spd, trial_rng
from opfourier.schatten import matrix_power
from opfourier.transform import OperatorField


def _delta_field(group, dim, seed, position=0):
    values = np.zeros((group.order, dim, dim), dtype=complex)
    values[position] = complex_gaussian(trial_rng(seed, 0), (dim, dim))
    return OperatorField(group, values)


class TestConjugateExponent:
    def test_values(self):
        assert conjugate_exponent(2.0) == pytest.approx(2.0)
        assert conjugate_exponent(1.5) == pytest.approx(3.0)
        assert conjugate_exponent(1.25) == pytest.approx(5.0)
        assert conjugate_exponent(1.0) == math.inf

    def test_rejects_below_one(self):
        with pytest.raises(ValueError):
            conjugate_exponent(0.9)


class TestCheckMain:
    def test_p2_is_equality_for_any_field(self):
        group = make_group([4, 3])
        for trial in range(10):
            field = random_field(group, 3, trial_rng(50, trial))
            report = check_main(field, 2.0)
            assert abs(report.ratio - 1.0) <= 1e-12

    def test_delta_field_equality_counting_measure(self):
        group = make_group([6], 1.0)
        for p in (1.1, 1.5, 2.0):
            report = check_main(_delta_field(group, 3, seed=51, position=2), p)
            assert abs(report.ratio - 1.0) <= 1e-10

    def test_delta_field_equality_any_weight(self):
        group = make_group([4, 2], 0.37)
        report = check_main(_delta_field(group, 2, seed=52, position=5), 1.3)
        assert abs(report.ratio - 1.0) <= 1e-10

    def test_random_field_respects_bound(self):
        group = make_group([4, 3])
        field = random_field(group, 5, trial_rng(9, 0))
        report = check_main(field, 1.5)
        assert report.ratio <= 1.0 + 1e-9
        assert report.passed
        assert report.q == pytest.approx(3.0)

    def test_haar_scale_invariance(self):
        factors, dim, p = [4, 3], 3, 1.5
        values = random_field(make_group(factors), dim, trial_rng(53, 0)).values
        base = check_main(OperatorField(make_group(factors, 1.0), values), p).ratio
        for s in (0.1, 10.0):
            scaled = check_main(OperatorField(make_group(factors, s), values), p).ratio
            assert abs(scaled - base) <= 1e-10

    def test_zero_field_trivially_passes(self):
        group = make_group([4])
        report = check_main(OperatorField(group, np.zeros((4, 2, 2))), 1.5)
        assert report.lhs == 0.0 and report.rhs == 0.0
        assert report.ratio == 0.0
        assert report.passed

    def test_rejects_p_out_of_range(self):
        group = make_group([2])
        field = random_field(group, 2, trial_rng(54, 0))
        for bad in (1.0, 0.5, 2.5):
            with pytest.raises(ValueError):
                check_main(field, bad)

    def test_report_fields(self):
        group = make_group([3])
        field = random_field(group, 2, trial_rng(55, 0))
        report = check_main(field, 1.5, params={"group": "Z3"})
        assert report.name == "main"
        assert report.constant == 1.0
        assert report.margin == pytest.approx(report.rhs - report.lhs)
        assert report.params["group"] == "Z3"


class TestCheckMainSup:
    def test_single_support_is_equality(self):
        group = make_group([5], 1.0)
        report = check_main_sup(_delta_field(group, 2, seed=56, position=3))
        assert abs(report.ratio - 1.0) <= 1e-12
        assert report.q == math.inf

    def test_two_equal_values_on_z2(self):
        group = make_group([2], 1.0)
        a = complex_gaussian(trial_rng(57, 0), (3, 3))
        report = check_main_sup(OperatorField(group, np.stack([a, a])))
        assert abs(report.ratio - 1.0) <= 1e-12

    def test_random_field(self):
        group = make_group([8])
        field = random_field(group, 3, trial_rng(4, 0))
        report = check_main_sup(field)
        assert report.ratio <= 1.0 + 1e-9


class TestClarkson:
    def test_b_zero_closed_forms(self):
        a = complex_gaussian(trial_rng(58, 0), (3, 3))
        zero = np.zeros((3, 3))
        cases = {
            ("upper_ge2", 2.5): 2.0 ** (2 - 2.5),
            ("lower_ge2", 2.5): 1.0,
            ("alt_ge2", 2.5): 1.0,
            ("upper_le2", 1.3): 1.0,
            ("lower_le2", 1.3): 2.0 ** (1.3 - 2),
            ("dual_le2", 1.3): 2.0 ** (2 - conjugate_exponent(1.3)),
        }
        for (variant, p), expected in cases.items():
            report = check_clarkson(a, zero, p, variant)
            assert report.ratio == pytest.approx(expected, abs=1e-12), variant
            assert report.passed

    def test_a_equals_b_closed_forms(self):
        a = complex_gaussian(trial_rng(58, 1), (3, 3))
        cases = {
            ("upper_ge2", 2.5): 1.0,
            ("lower_ge2", 2.5): 2.0 ** (2 - 2.5),
            ("alt_ge2", 2.5): 1.0,
            ("upper_le2", 1.3): 2.0 ** (1.3 - 2),
            ("lower_le2", 1.3): 1.0,
            ("dual_le2", 1.3): 2.0 ** (2 - conjugate_exponent(1.3)),
        }
        for (variant, p), expected in cases.items():
            report = check_clarkson(a, a.copy(), p, variant)
            assert report.ratio == pytest.approx(expected, abs=1e-12), variant

    def test_random_pairs_all_variants(self):
        for trial in range(50):
            rng = trial_rng(21, trial)
            a = complex_gaussian(rng, (4, 4))
            b = complex_gaussian(rng, (4, 4))
            for variant in CLARKSON_VARIANTS:
                p = float(rng.uniform(2.0, 4.0)) if variant.endswith("ge2") else float(rng.uniform(1.05, 2.0))
                report = check_clarkson(a, b, p, variant)
                assert report.passed, (variant, p, report.ratio)

    def test_example_dual_le2(self):
        rng = trial_rng(21, 100)
        a = complex_gaussian(rng, (4, 4))
        b = complex_gaussian(rng, (4, 4))
        assert check_clarkson(a, b, 1.3, "dual_le2").ratio <= 1.0

    def test_rejects_out_of_range(self):
        a = np.eye(2)
        with pytest.raises(ValueError):
            check_clarkson(a, a, 1.5, "upper_ge2")
        with pytest.raises(ValueError):
            check_clarkson(a, a, 3.0, "dual_le2")
        with pytest.raises(ValueError):
            check_clarkson(a, a, 1.5, "bogus")


class TestBhatiaKittaneh:
    def test_equal_tuple_p2_equality(self):
        a = complex_gaussian(trial_rng(59, 0), (3, 3))
        for n in (2, 3, 5):
            report = check_bhatia_kittaneh([a.copy() for _ in range(n)], 2.0)
            assert abs(report.ratio - 1.0) <= 1e-12

    def test_pair_reduces_to_conjugate_power_bound(self):
        # n = 2 gives the same left side as the two-operator conjugate-power
        # check but with constant 2 instead of 2^(q-1), a stronger bound.
        rng = trial_rng(59, 1)
        a = complex_gaussian(rng, (3, 3))
        b = complex_gaussian(rng, (3, 3))
        p = 1.4
        bk = check_bhatia_kittaneh([a, b], p)
        cl = check_clarkson(a, b, p, "dual_le2")
        assert bk.lhs == pytest.approx(cl.lhs, rel=1e-12)
        assert bk.constant * bk.rhs <= cl.constant * cl.rhs * (1 + 1e-12)
        assert bk.passed

    def test_cross_check_against_main_on_cyclic(self):
        for trial in range(20):
            rng = trial_rng(60, trial)
            n = int(rng.integers(2, 8))
            d = int(rng.integers(1, 4))
            p = float(rng.uniform(1.05, 2.0))
            mats = [rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d)) for _ in range(n)]
            bk = check_bhatia_kittaneh(mats, p)
            group = make_group([n], 1.0)
            main = check_main(OperatorField(group, np.stack(mats)), p)
            assert bk.lhs == pytest.approx(n * main.lhs, rel=1e-10)
            assert bk.constant * bk.rhs == pytest.approx(n * main.rhs, rel=1e-12)

    def test_random_triples(self):
        for trial in range(30):
            rng = trial_rng(30, trial)
            mats = [rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3)) for _ in range(3)]
            report = check_bhatia_kittaneh(mats, 1.7)
            assert report.passed

    def test_rejects_short_tuple(self):
        with pytest.raises(ValueError):
            check_bhatia_kittaneh([np.eye(2)], 1.5)


class TestHausdorffYoung:
    def test_matches_main_numerically(self):
        group = make_group([32])
        field = random_field(group, 1, trial_rng(61, 0))
        hy = check_hausdorff_young(field, 1.2)
        main = check_main(field, 1.2)
        assert hy.lhs == main.lhs and hy.rhs == main.rhs and hy.ratio == main.ratio
        assert hy.name == "hausdorff_young"
        assert hy.passed

    def test_p2_equality(self):
        group = make_group([8])
        field = random_field(group, 1, trial_rng(61, 1))
        assert abs(check_hausdorff_young(field, 2.0).ratio - 1.0) <= 1e-12

    def test_delta_equality(self):
        group = make_group([9], 1.0)
        assert abs(check_hausdorff_young(_delta_field(group, 1, seed=62, position=4), 1.5).ratio - 1.0) <= 1e-10

    def test_rejects_matrix_fields(self):
        group = make_group([4])
        field = random_field(group, 2, trial_rng(61, 2))
        with pytest.raises(ValueError):
            check_hausdorff_young(field, 1.5)


class TestWeighted:
    def test_identity_weights_reduce_to_main(self):
        group = make_group([6])
        field = random_field(group, 3, trial_rng(17, 0))
        eye = np.eye(3)
        main = check_main(field, 1.5)
        for t in (0.0, 0.4, 1.0):
            for direction in ("a_to_gamma", "gamma_to_a"):
                report = check_weighted(field, 1.5, eye, eye, t, direction)
                assert report.constant == pytest.approx(1.0, abs=1e-12)
                assert report.lhs == pytest.approx(main.lhs, rel=1e-12)
                assert report.rhs == pytest.approx(main.rhs, rel=1e-12)

    def test_t_zero_reduces_to_a_weighted_main(self):
        group = make_group([6])
        rng = trial_rng(17, 1)
        field = random_field(group, 3, rng)
        a = random_spd(3, rng)
        b = random_spd(3, rng)
        inv_sqrt = matrix_power(a, -0.5)
        congruent = OperatorField(group, inv_sqrt @ field.values @ inv_sqrt)
        main = check_main(congruent, 1.5)
        for direction in ("a_to_gamma", "gamma_to_a"):
            report = check_weighted(field, 1.5, a, b, 0.0, direction)
            assert report.constant == 1.0
            assert report.lhs == pytest.approx(main.lhs, rel=1e-10)
            assert report.rhs == pytest.approx(main.rhs, rel=1e-10)

    def test_equal_weights_reduce_to_weighted_main(self):
        group = make_group([4, 2])
        rng = trial_rng(17, 2)
        field = random_field(group, 2, rng)
        a = random_spd(2, rng)
        for t in (0.25, 0.75):
            for direction in ("a_to_gamma", "gamma_to_a"):
                report = check_weighted(field, 1.25, a, a.copy(), t, direction)
                assert report.constant == pytest.approx(1.0, abs=1e-9)
                assert report.passed

    def test_random_weights_both_directions(self):
        group = make_group([6])
        for trial in range(25):
            rng = trial_rng(17, 100 + trial)
            field = random_field(group, 3, rng)
            a = random_spd(3, rng)
            b = random_spd(3, rng)
            t = float(rng.uniform(0, 1))
            p = float(rng.uniform(1.05, 2.0))
            for direction in ("a_to_gamma", "gamma_to_a"):
                report = check_weighted(field, p, a, b, t, direction)
                assert report.passed, (direction, t, p, report.ratio)

    def test_scalar_delta_field_saturates_bound(self):
        # commuting 1x1 weights with a delta field reach the constant exactly
        group = make_group([4], 1.0)
        values = np.zeros((4, 1, 1), dtype=complex)
        values[1] = 2.0 - 1.0j
        field = OperatorField(group, values)
        a = np.array([[4.0]])
        b = np.array([[1.0]])
        for t in (0.25, 0.5, 1.0):
            for direction in ("a_to_gamma", "gamma_to_a"):
                report = check_weighted(field, 1.5, a, b, t, direction)
                assert abs(report.ratio - 1.0) <= 1e-10, (direction, t)

    def test_rejects_bad_inputs(self):
        group = make_group([4])
        field = random_field(group, 2, trial_rng(17, 3))
        eye = np.eye(2)
        with pytest.raises(ValueError):
            check_weighted(field, 1.5, eye, eye, 1.5, "a_to_gamma")
        with pytest.raises(ValueError):
            check_weighted(field, 1.5, np.eye(3), np.eye(3), 0.5, "a_to_gamma")
        with pytest.raises(ValueError):
            check_weighted(field, 1.5, eye, eye, 0.5, "sideways")
        with pytest.raises(ValueError):
            check_weighted(field, 2.5, eye, eye, 0.5, "a_to_gamma")


def test_report_pass_flag_respects_tolerance():
    group = make_group([3])
    field = random_field(group, 2, trial_rng(63, 0))
    report = check_main(field, 1.5)
    assert report.passed
    squeezed = replace(report, ratio=1.0 + 1e-6)
    assert not squeezed.passed
