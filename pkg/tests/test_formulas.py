"""Closed formulas, the join-cut recurrence, and exact series arithmetic."""

from fractions import Fraction
from math import comb, factorial

import pytest

from starfact import Partition, partitions_of
from starfact.factorisations import count_monotone_double, count_star
from starfact.formulas import (
    RationalSeries,
    agreement_row,
    b_relation_check,
    base_series,
    catalan,
    central_factorial,
    feray_count,
    md_full_cycle,
    md_identity,
    recurrence_md_identity_check,
    recurrence_star,
    stirling2,
)
from starfact.perms import class_representative

from oracles import central_factorial_direct, stirling_direct


class TestSpecialNumbers:
    def test_stirling_values(self):
        assert stirling2(5, 2) == 15
        for m in range(7):
            assert stirling2(m, m) == 1
        for m in range(1, 7):
            assert stirling2(m, 0) == 0

    def test_stirling_against_set_partitions(self):
        for m in range(7):
            for k in range(m + 2):
                assert stirling2(m, k) == stirling_direct(m, k)

    def test_central_factorial_values(self):
        assert central_factorial(3, 2) == 5
        assert central_factorial(2, 1) == 1
        for m in range(6):
            assert central_factorial(m, m) == 1

    def test_central_factorial_against_paired_partitions(self):
        for m in range(6):
            for k in range(m + 2):
                assert central_factorial(m, k) == central_factorial_direct(m, k)

    def test_catalan(self):
        assert [catalan(k) for k in range(6)] == [1, 1, 2, 5, 14, 42]


class TestSeries:
    def test_constant_and_coefficient(self):
        s = RationalSeries.constant(3, 4)
        assert s.coefficient(0) == 3
        assert s.coefficient(4) == 0
        with pytest.raises(IndexError):
            s.coefficient(5)

    def test_immutable(self):
        s = RationalSeries.constant(1, 2)
        with pytest.raises(AttributeError):
            s.order = 5

    def test_order_mismatch(self):
        with pytest.raises(ValueError):
            RationalSeries.constant(1, 2) + RationalSeries.constant(1, 3)

    def test_product_truncates(self):
        t = RationalSeries([0, 1, 0], 2)
        assert (t * t).coeffs == (Fraction(0), Fraction(0), Fraction(1))
        assert (t * t * t).coeffs == (Fraction(0),) * 3

    def test_power(self):
        t = RationalSeries([1, 1, 0, 0], 3)
        cube = t**3
        assert [cube.coefficient(k) for k in range(4)] == [1, 3, 3, 1]
        assert t**0 == RationalSeries.constant(1, 3)

    def test_negative_power_is_inverse(self):
        t = RationalSeries([1, 2, 3], 2)
        assert t**-1 == t.inverse()
        assert (t * t.inverse()) == RationalSeries.constant(1, 2)

    def test_inverse_needs_a_unit(self):
        with pytest.raises(ZeroDivisionError):
            RationalSeries([0, 1], 1).inverse()

    def test_substitute_scaled(self):
        t = RationalSeries([1, 1, 1], 2)
        assert t.substitute_scaled(2).coeffs == (
            Fraction(1),
            Fraction(2),
            Fraction(4),
        )

    def test_base_series_coefficients(self):
        s = base_series(6)
        for k in range(4):
            assert s.coefficient(2 * k) == Fraction(1, 4**k * factorial(2 * k + 1))
        assert s.coefficient(1) == 0 and s.coefficient(3) == 0


class TestClosedForms:
    def test_feray_values(self):
        assert feray_count(Partition((2,)), 0) == 1
        assert feray_count(Partition((2, 1)), 0) == 2
        assert feray_count(Partition((3,)), 1) == 5

    def test_single_fixed_point_is_genus_zero_only(self):
        assert feray_count(Partition((1,)), 0) == 1
        for genus in (1, 2, 3):
            assert feray_count(Partition((1,)), genus) == 0

    def test_feray_matches_dynamic_programme(self):
        for n in range(1, 5):
            for lam in partitions_of(n):
                rep = class_representative(lam)
                for genus in (0, 1, 2):
                    assert feray_count(lam, genus) == count_star(rep, genus, n), (
                        lam,
                        genus,
                    )

    def test_full_cycle_values(self):
        assert md_full_cycle(3, 0) == 1
        assert md_full_cycle(3, 1) == 5
        assert md_full_cycle(2, 0) == 1

    def test_full_cycle_is_a_scaled_stirling_number(self):
        for n in (2, 3, 4, 5):
            for genus in (0, 1, 2):
                expected, rem = divmod(stirling2(2 * genus + n, n - 1), comb(n, 2))
                assert rem == 0
                assert md_full_cycle(n, genus) == expected

    def test_identity_values(self):
        assert md_identity(3, 0) == 4
        assert md_identity(3, 1) == 20
        assert md_identity(1, 0) == 1

    def test_closed_forms_match_enumeration(self):
        for n in (2, 3, 4):
            for genus in (0, 1):
                cycle = class_representative(Partition((n,)))
                assert md_full_cycle(n, genus) == count_monotone_double(cycle, genus)
                ident = class_representative(Partition((1,) * n))
                assert md_identity(n, genus) == count_monotone_double(ident, genus)


class TestRecurrence:
    def test_base_cases(self):
        assert recurrence_star(1, Partition(()), 0) == 1
        assert recurrence_star(2, Partition(()), 0) == 1
        assert recurrence_star(1, Partition((1,)), 0) == 1

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            recurrence_star(0, Partition(()), 0)
        with pytest.raises(ValueError):
            recurrence_star(1, Partition(()), -1)

    def test_matches_dynamic_programme(self):
        # key (i, alpha): root cycle of length i, remaining cycles alpha
        from starfact.perms import Permutation

        for total in range(1, 7):
            for i in range(1, total + 1):
                for alpha in partitions_of(total - i):
                    # build a target whose root cycle has length i
                    rest = list(range(1, total - i + 1))
                    cyc = []
                    at = 0
                    for part in alpha.parts:
                        cyc.append(tuple(rest[at : at + part]))
                        at += part
                    cyc.append(tuple(range(total - i + 1, total + 1)))
                    target = Permutation.from_cycles(total, cyc)
                    for genus in (0, 1, 2):
                        assert recurrence_star(i, alpha, genus) == count_star(
                            target, genus, total
                        ), (i, alpha, genus)

    def test_identity_recurrence(self):
        assert recurrence_md_identity_check(3, 1)  # 60 = 48 + 12
        assert recurrence_md_identity_check(2, 0)  # 2 = 0 + 2
        for n in (2, 3, 4, 5):
            for genus in (0, 1, 2, 3):
                assert recurrence_md_identity_check(n, genus)
        with pytest.raises(ValueError):
            recurrence_md_identity_check(1, 0)


class TestHurwitzRelation:
    def test_transposition_class(self):
        assert b_relation_check(Partition((2,)), 0)

    def test_two_fixed_points(self):
        assert b_relation_check(Partition((1, 1)), 0)

    def test_rejects_small_or_negative(self):
        with pytest.raises(ValueError):
            b_relation_check(Partition((1,)), 0)
        with pytest.raises(ValueError):
            b_relation_check(Partition((2,)), -1)


class TestAgreementTable:
    def test_row_shape(self):
        row = agreement_row(Partition((3,)), 1)
        assert row == {
            "partition": "[3]",
            "genus": 1,
            "count_star": 5,
            "md_count": 5,
            "feray": 5,
            "closed_form": 5,
            "all_agree": True,
        }

    def test_closed_form_absent_for_mixed_classes(self):
        row = agreement_row(Partition((2, 1)), 0)
        assert row["closed_form"] == ""
        assert row["all_agree"] is True
