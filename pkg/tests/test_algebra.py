"""Group algebra: deferred-slot elements, symmetric polynomials in them,
and the transitivity operator.

The frozen fourth-power table guards against sign or convention drift; the
oracle recomputes it by expanding words of star transpositions literally.
"""

import pytest

from starfact import Partition, Permutation, partitions_of
from starfact.algebra import (
    AlgebraElement,
    NotCentralError,
    class_sum,
    e,
    evaluate,
    format_class_decomposition,
    h,
    jm_element,
    jm_var,
    p,
    transitive_evaluate,
    transitive_power,
    verify_corollary_1_6,
    verify_elementary_class_sums,
)
from starfact.factorisations import count_star, star_length
from starfact.perms import class_representative, conjugacy_classes, symmetric_group

from oracles import jm_power_table


def perm(text, n=None):
    return Permutation.parse(text, n)


class TestElements:
    def test_first_slot_is_zero(self):
        assert jm_element(4, 1) == AlgebraElement.zero(4)

    def test_slot_three(self):
        j3 = jm_element(3, 3)
        assert j3.coefficient(perm("(1 3)", 3)) == 1
        assert j3.coefficient(perm("(2 3)", 3)) == 1
        assert j3.support_size() == 2

    def test_slot_bounds(self):
        with pytest.raises(ValueError):
            jm_element(3, 0)
        with pytest.raises(ValueError):
            jm_element(3, 4)

    def test_slots_commute(self):
        els = {k: jm_element(5, k) for k in range(2, 6)}
        for i in range(2, 6):
            for j in range(2, 6):
                assert els[i] * els[j] == els[j] * els[i]

    def test_arithmetic(self):
        x = jm_element(3, 3)
        zero = AlgebraElement.zero(3)
        one = AlgebraElement.one(3)
        assert x * zero == zero and zero * x == zero
        assert x * one == x and one * x == x
        assert x - x == zero
        assert 2 * x == x + x
        assert x**0 == one and x**2 == x * x
        with pytest.raises(ValueError):
            x ** (-1)

    def test_degree_mismatch(self):
        with pytest.raises(ValueError):
            jm_element(3, 2) * jm_element(4, 2)

    def test_class_sum_decomposition_is_trivial(self):
        for n in (2, 3, 4):
            for lam in partitions_of(n):
                assert class_sum(n, lam).decompose() == {lam: 1}

    def test_class_sum_degree_check(self):
        with pytest.raises(ValueError):
            class_sum(3, Partition((2,)))


class TestFourthPowerTable:
    def setup_method(self):
        self.j44 = jm_element(4, 4) ** 4

    def test_frozen_coefficients(self):
        expected = {
            "(1)(2)(3)(4)": 15,
            "(1 2 3)(4)": 3,
            "(1 3 2)(4)": 3,
            "(1 2 4)(3)": 8,
            "(1 4 2)(3)": 8,
            "(1 3 4)(2)": 8,
            "(1 4 3)(2)": 8,
            "(2 3 4)(1)": 8,
            "(2 4 3)(1)": 8,
            "(1 2)(3 4)": 4,
            "(1 3)(2 4)": 4,
            "(1 4)(2 3)": 4,
            "(1 2)(3)(4)": 0,
            "(1 2 3 4)": 0,
        }
        for text, coeff in expected.items():
            assert self.j44.coefficient(perm(text, 4)) == coeff, text

    def test_total_weight(self):
        assert sum(self.j44.terms.values()) == 3**4

    def test_matches_word_expansion(self):
        table = jm_power_table(4, 4, 4)
        for w in symmetric_group(4):
            assert self.j44.coefficient(w) == table.get(w, 0)

    def test_not_central(self):
        assert not self.j44.is_central()
        witness = self.j44.central_witness()
        assert witness is not None
        a, b = witness
        assert a.cycle_type() == b.cycle_type()
        assert self.j44.coefficient(a) != self.j44.coefficient(b)
        with pytest.raises(NotCentralError, match="not central: coefficient"):
            self.j44.decompose()

    def test_power_sum_is_central(self):
        p4 = evaluate(p(4), 4)
        assert p4.decompose() == {
            Partition((1, 1, 1, 1)): 22,
            Partition((3, 1)): 8,
            Partition((2, 2)): 4,
        }
        assert (
            format_class_decomposition(p4.decompose())
            == "22*K[1,1,1,1] + 8*K[3,1] + 4*K[2,2]"
        )


class TestSymbolicEvaluation:
    def test_empty_products_are_one(self):
        for n in (1, 2, 3):
            assert evaluate(e(), n) == AlgebraElement.one(n)
            assert evaluate(e(0), n) == AlgebraElement.one(n)
            assert evaluate(h(0), n) == AlgebraElement.one(n)

    def test_degree_zero_power_sum_counts_slots(self):
        # p_0 is the number of variables, here the n - 1 usable slots
        assert evaluate(p(0), 4) == 3 * AlgebraElement.one(4)

    def test_too_high_elementary_vanishes(self):
        assert evaluate(e(5), 3) == AlgebraElement.zero(3)
        assert evaluate(e(3), 3) == AlgebraElement.zero(3)

    def test_slot_variable(self):
        assert evaluate(jm_var(3), 3) == jm_element(3, 3)
        assert evaluate(jm_var(3) ** 2, 4) == jm_element(4, 3) ** 2
        with pytest.raises(ValueError):
            jm_var(1)
        with pytest.raises(ValueError):
            evaluate(jm_var(4), 3)

    def test_expression_arithmetic_matches_algebra(self):
        n = 4
        lhs = evaluate((e(1) + 2) * h(1) - p(2), n)
        rhs = (
            (evaluate(e(1), n) + 2 * AlgebraElement.one(n)) * evaluate(h(1), n)
            - evaluate(p(2), n)
        )
        assert lhs == rhs

    def test_newton_identity_degree_two(self):
        # p_2 = e_1^2 - 2 e_2 holds after evaluation
        for n in (2, 3, 4):
            assert evaluate(p(2), n) == evaluate(e(1) ** 2 - 2 * e(2), n)

    def test_elementary_class_sums(self):
        for n in range(1, 6):
            for k in range(n + 1):
                assert verify_elementary_class_sums(n, k)

    def test_elementary_decomposition_by_cycle_count(self):
        for n in (3, 4, 5):
            for k in range(n):
                got = evaluate(e(k), n).decompose()
                expected = {
                    lam: 1 for lam in partitions_of(n) if lam.length == n - k
                }
                assert got == expected

    @pytest.mark.parametrize("basis", [e, h, p], ids=["e", "h", "p"])
    def test_symmetric_values_are_central(self, basis):
        for n in (2, 3, 4):
            for weight in range(1, 5):
                for lam in partitions_of(weight):
                    assert evaluate(basis(*lam.parts), n).is_central(), (n, lam)


class TestTransitivityOperator:
    def test_kills_non_spanning_words(self):
        assert transitive_evaluate(e(1), 3) == AlgebraElement.zero(3)

    def test_keeps_spanning_words(self):
        t = transitive_evaluate(e(2), 3)
        assert t == evaluate(e(2), 3)
        assert t == class_sum(3, Partition((3,)))

    def test_worked_power(self):
        got = transitive_power(4, 4)
        assert got.decompose() == {Partition((3, 1)): 3, Partition((2, 2)): 4}
        assert format_class_decomposition(got.decompose()) == "3*K[3,1] + 4*K[2,2]"

    def test_methods_agree(self):
        exprs = [e(2, 1), h(3), p(2, 2), (e(1) + h(2)) * p(1), jm_var(3) ** 2]
        for n in (3, 4):
            for expr in exprs:
                assert transitive_evaluate(expr, n, method="dp") == transitive_evaluate(
                    expr, n, method="expand"
                )
        with pytest.raises(ValueError):
            transitive_evaluate(e(1), 3, method="fast")

    def test_linear_over_expansion(self):
        n = 4
        assert transitive_evaluate(e(2) + h(3), n) == transitive_evaluate(
            e(2), n
        ) + transitive_evaluate(h(3), n)

    def test_powers_are_central(self):
        for n in (2, 3, 4):
            for t in range(n + 5):
                assert transitive_power(n, t).is_central(), (n, t)

    def test_power_coefficients_count_star_factorisations(self):
        for n in (2, 3, 4):
            for lam in partitions_of(n):
                w = class_representative(lam)
                for genus in (0, 1):
                    m = star_length(w, genus)
                    assert transitive_power(n, m).coefficient(w) == count_star(
                        w, genus, n
                    ), (lam, genus)

    def test_fixed_point_free_targets_need_no_filter(self):
        # words landing on a fixed-point-free permutation already span
        for n in (2, 3, 4):
            free = [w for w in symmetric_group(n) if all(w.apply(s) != s for s in range(1, n + 1))]
            for length in range(n + 3):
                plain = evaluate(jm_var(n) ** length, n) if n >= 2 else None
                filtered = transitive_power(n, length)
                for w in free:
                    assert filtered.coefficient(w) == plain.coefficient(w)

    @pytest.mark.parametrize("n", [3, 4])
    def test_not_multiplicative(self, n):
        # the operator annihilates each factor yet not their product
        joint = transitive_evaluate(e(n - 1) * e(1), n)
        assert joint != AlgebraElement.zero(n)
        left = transitive_evaluate(e(n - 1), n)
        right = transitive_evaluate(e(1), n)
        assert left * right == AlgebraElement.zero(n)

    def test_negative_power_rejected(self):
        with pytest.raises(ValueError):
            transitive_power(3, -1)


class TestTopPowerClosedForm:
    def test_small_cases(self):
        for n in (2, 3, 4):
            for k in (0, 1, 2):
                assert verify_corollary_1_6(n, k), (n, k)

    def test_worked_base_case(self):
        # degree n - 1 already forces every slot to appear exactly once
        assert transitive_power(3, 2) == jm_element(3, 2) * jm_element(3, 3)
        assert transitive_power(3, 2) == evaluate(e(2), 3)
        assert transitive_power(2, 1) == AlgebraElement.from_permutation(perm("(1 2)"))
