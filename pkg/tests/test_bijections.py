"""Hurwitz moves and the constructive maps between factorisation families.

Each map is checked three ways on small degrees: round trips compose to the
identity, image sets coincide with direct enumeration of the codomain, and
every recorded move preserves the running product.  Degree 4 sweeps live in
the verify suites.
"""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from starfact import Permutation, TotalOrder, Transposition, symmetric_group
from starfact.bijections import (
    TraceStep,
    centrality_witness,
    delta,
    gamma,
    gamma_inverse,
    lambda_j,
    lambda_j_inverse,
    lambda_order,
    lambda_order_inverse,
    lhm,
    replay,
    reroot,
    rhm,
    theta,
)
from starfact.factorisations import (
    MonotoneFactorisation,
    StarFactorisation,
    enumerate_monotone,
    enumerate_monotone_double,
    enumerate_star,
)
from starfact.perms import (
    all_transpositions,
    conjugacy_classes,
    order_from_conjugator,
    sort_swaps,
)


def perm(text, n=None):
    return Permutation.parse(text, n)


def orders_of(n):
    from itertools import permutations

    return [TotalOrder(seq) for seq in permutations(range(1, n + 1))]


def products_agree(trace, n):
    for step in trace:
        before = step.before[0].as_permutation(n) * step.before[1].as_permutation(n)
        after = step.after[0].as_permutation(n) * step.after[1].as_permutation(n)
        if before != after:
            return False
    return True


transposition_pairs = st.integers(2, 5).flatmap(
    lambda n: st.tuples(
        st.sampled_from(all_transpositions(n)),
        st.sampled_from(all_transpositions(n)),
        st.just(n),
    )
)


class TestMoves:
    @given(transposition_pairs)
    def test_moves_preserve_products_and_invert(self, pair_n):
        t, u, n = pair_n
        for move in (rhm, lhm):
            a, b = move((t, u))
            assert a.as_permutation(n) * b.as_permutation(n) == t.as_permutation(
                n
            ) * u.as_permutation(n)
        assert lhm(rhm((t, u))) == (t, u)
        assert rhm(lhm((t, u))) == (t, u)

    def test_disjoint_pairs_commute(self):
        assert rhm((Transposition(1, 2), Transposition(3, 4))) == (
            Transposition(3, 4),
            Transposition(1, 2),
        )

    def test_overlapping_pair(self):
        # (1 2)(2 3) = (2 3)^{(1 2)} (1 2) = (1 3)(1 2)
        assert rhm((Transposition(1, 2), Transposition(2, 3))) == (
            Transposition(1, 3),
            Transposition(1, 2),
        )

    def test_step_rendering(self):
        step = TraceStep(
            2,
            "RHM",
            (Transposition(1, 3), Transposition(1, 2)),
            (Transposition(2, 3), Transposition(1, 3)),
        )
        assert str(step) == "pos=2 move=RHM before=(1 3)(1 2) after=(2 3)(1 3)"


class TestReplay:
    def test_replays_a_recorded_trace(self):
        f = StarFactorisation(3, 3, (1, 2, 1), perm("(1 2)(3)"), 0)
        trace = []
        gamma(f, trace)
        # replaying the recorded moves must retrace the same states and
        # leave the product unchanged
        replayed = replay(f.factors, trace)
        prod = Permutation.identity(3)
        for t in replayed:
            prod = prod * t.as_permutation(3)
        assert prod == f.target

    def test_rejects_mismatched_state(self):
        steps = [
            TraceStep(
                1,
                "RHM",
                (Transposition(1, 2), Transposition(2, 3)),
                (Transposition(1, 3), Transposition(1, 2)),
            )
        ]
        with pytest.raises(ValueError, match="trace step does not match state"):
            replay((Transposition(2, 3), Transposition(1, 2)), steps)


class TestAdjacentSwap:
    def test_no_movers_is_a_no_op(self):
        f = MonotoneFactorisation(
            3, TotalOrder.natural(3), (Transposition(1, 2),), perm("(1 2)", 3), 0
        )
        trace = []
        out = lambda_j(f, 2, trace)
        assert out.factors == f.factors
        assert out.order == TotalOrder.parse("1<3<2")
        assert trace == []

    def test_position_bounds(self):
        f = enumerate_monotone(perm("(1 2)", 3), 0)[0]
        with pytest.raises(ValueError):
            lambda_j(f, 0)
        with pytest.raises(ValueError):
            lambda_j(f, 3)

    @pytest.mark.parametrize("genus", [0, 1])
    def test_bijection_by_exhaustion_in_s3(self, genus):
        for order in orders_of(3):
            for j in (1, 2):
                swapped = order.swapped(j)
                for target in symmetric_group(3):
                    src = enumerate_monotone(target, genus, order)
                    dst = enumerate_monotone(target, genus, swapped)
                    image = []
                    for f in src:
                        trace = []
                        out = lambda_j(f, j, trace)
                        assert out.order == swapped
                        assert out.target == target and out.genus == genus
                        assert products_agree(trace, 3)
                        back = lambda_j_inverse(out, j)
                        assert back == f
                        image.append(out)
                    assert {g.factors for g in image} == {g.factors for g in dst}
                    for g in dst:
                        assert lambda_j(lambda_j_inverse(g, j), j) == g

    def test_stage_two_moves_are_tagged(self):
        # a factorisation containing the swapped pair itself exercises S2
        seen = set()
        for order in orders_of(3):
            for target in symmetric_group(3):
                for f in enumerate_monotone(target, 1, order):
                    for j in (1, 2):
                        trace = []
                        lambda_j(f, j, trace)
                        seen.update(step.move for step in trace)
        assert "S2" in seen and "RHM" in seen


class TestOrderChange:
    def test_worked_example(self):
        f = MonotoneFactorisation(
            3,
            TotalOrder.parse("3<2<1"),
            (Transposition(2, 3), Transposition(1, 2)),
            perm("(1 2 3)"),
            0,
        )
        trace = []
        out = lambda_order(f, trace)
        assert out.order.is_natural
        assert out.target == f.target
        assert [str(s) for s in trace] == [
            "pos=1 move=RHM before=(2 3)(1 2) after=(1 3)(2 3)"
        ]
        assert lambda_order_inverse(out, TotalOrder.parse("3<2<1")) == f

    @pytest.mark.parametrize("genus", [0, 1])
    def test_round_trips_in_s3(self, genus):
        for order in orders_of(3):
            for target in symmetric_group(3):
                for f in enumerate_monotone(target, genus, order):
                    trace = []
                    nat = lambda_order(f, trace)
                    assert nat.order.is_natural
                    assert products_agree(trace, 3)
                    assert lambda_order_inverse(nat, order) == f

    def test_inverse_requires_natural_input(self):
        order = TotalOrder.parse("3<2<1")
        f = MonotoneFactorisation(
            3, order, (Transposition(2, 3), Transposition(1, 2)), perm("(1 2 3)"), 0
        )
        with pytest.raises(ValueError, match="natural-monotone"):
            lambda_order_inverse(f, order)


class TestConjugationTransport:
    def test_identity_conjugator_fixes_everything(self):
        for target in symmetric_group(3):
            for f in enumerate_monotone(target, 0):
                assert delta(f, Permutation.identity(3)) == f
        for target in symmetric_group(3):
            for md in enumerate_monotone_double(target, 0):
                assert theta(md, Permutation.identity(3)) == md

    def test_delta_lands_on_the_conjugated_target(self):
        d = perm("(1 2 3)")
        for target in symmetric_group(3):
            expected_target = target.relabel(d.inverse())
            for f in enumerate_monotone(target, 0):
                out = delta(f, d)
                assert out.target == expected_target
                assert out.order.is_natural
                assert out.genus == f.genus

    @pytest.mark.parametrize("genus", [0, 1])
    def test_delta_image_sets_in_s3(self, genus):
        for d in symmetric_group(3):
            for target in symmetric_group(3):
                src = enumerate_monotone(target, genus)
                dst = enumerate_monotone(target.relabel(d.inverse()), genus)
                image = {delta(f, d).factors for f in src}
                assert image == {g.factors for g in dst}

    @pytest.mark.parametrize("genus", [0, 1])
    def test_theta_image_sets_in_s3(self, genus):
        for d in symmetric_group(3):
            for target in symmetric_group(3):
                src = enumerate_monotone_double(target, genus)
                dst = enumerate_monotone_double(target.relabel(d.inverse()), genus)
                image = {(theta(md, d).sigma.images, theta(md, d).factors) for md in src}
                assert image == {(g.sigma.images, g.factors) for g in dst}

    def test_conjugator_order_convention(self):
        d = perm("(1 3 2)")
        order = order_from_conjugator(d)
        dinv = d.inverse()
        assert order.sequence == tuple(dinv.apply(i) for i in range(1, 4))


class TestStarToCycleForm:
    def test_worked_example(self):
        f = StarFactorisation(3, 3, (1, 2, 1), perm("(1 2)(3)"), 0)
        md = gamma(f)
        assert str(md.sigma) == "(1 2 3)"
        assert md.factors == (Transposition(1, 3),)
        assert gamma_inverse(md) == f

    @pytest.mark.parametrize("genus", [0, 1])
    def test_bijection_from_any_root_in_s3(self, genus):
        for target in symmetric_group(3):
            dst = enumerate_monotone_double(target, genus)
            dst_keys = {(g.sigma.images, g.factors) for g in dst}
            for root in (1, 2, 3):
                image = set()
                for f in enumerate_star(target, genus, root):
                    trace = []
                    md = gamma(f, trace)
                    assert products_agree(trace, 3)
                    assert md.target == target and md.genus == genus
                    image.add((md.sigma.images, md.factors))
                assert image == dst_keys

    @pytest.mark.parametrize("genus", [0, 1])
    def test_round_trips_at_root_n(self, genus):
        for target in symmetric_group(3):
            for f in enumerate_star(target, genus, 3):
                assert gamma_inverse(gamma(f)) == f
            for md in enumerate_monotone_double(target, genus):
                assert gamma(gamma_inverse(md)) == md


class TestReroot:
    def test_same_root_is_the_identity(self):
        for target in symmetric_group(3):
            for f in enumerate_star(target, 0, 2):
                assert reroot(f, 2) == f

    @pytest.mark.parametrize("genus", [0, 1])
    def test_bijection_between_root_classes(self, genus):
        for target in symmetric_group(3):
            by_root = {
                r: enumerate_star(target, genus, r) for r in (1, 2, 3)
            }
            for r in (1, 2, 3):
                for s in (1, 2, 3):
                    image = set()
                    for f in by_root[r]:
                        trace = []
                        out = reroot(f, s, trace)
                        assert out.root == s
                        assert out.target == target and out.genus == genus
                        assert products_agree(trace, 3)
                        assert reroot(out, r) == f
                        image.add(out.legs)
                    assert image == {g.legs for g in by_root[s]}


class TestCentralityWitness:
    def test_worked_pair(self):
        src = perm("(1 2)(3)")
        dst = perm("(1)(2 3)")
        image = {centrality_witness(f, dst).legs for f in enumerate_star(src, 0, 3)}
        assert image == {f.legs for f in enumerate_star(dst, 0, 3)}
        assert image == {(1, 1, 2), (2, 1, 1)}

    @pytest.mark.parametrize("genus", [0, 1])
    def test_bijection_across_whole_classes(self, genus):
        for members in conjugacy_classes(3).values():
            for src in members:
                for dst in members:
                    expected = {f.legs for f in enumerate_star(dst, genus, 3)}
                    image = set()
                    for f in enumerate_star(src, genus, 3):
                        trace = []
                        out = centrality_witness(f, dst, trace)
                        assert out.target == dst and out.root == 3
                        assert products_agree(trace, 3)
                        image.add(out.legs)
                    assert image == expected

    def test_keeps_the_root(self):
        f = enumerate_star(perm("(1 2)(3)"), 0, 1)[0]
        out = centrality_witness(f, perm("(1 3)(2)"))
        assert out.root == 1
