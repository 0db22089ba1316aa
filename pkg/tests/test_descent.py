import random
import warnings
from fractions import Fraction

import pytest

from helpers import all_signatures, random_ic

from lpackets import (
    HCParameter,
    InfinitesimalCharacter,
    PlacedParameter,
    RestrictionClass,
    Signature,
    Weight,
    classify_restriction,
    descent_chain,
    dual_parameter,
    enumerate_packet,
    expected_fraction,
    isomorphism_fraction,
    min_entry_in_a,
    min_entry_in_a_everywhere,
    noncompact_support_matches,
    restrict_parameter,
    restriction_is_discrete_series,
    well_spaced,
    well_spaced_everywhere,
)

HALF = Fraction(1, 2)


def spaced_ic(rng, n):
    return random_ic(rng, n, strict=True)


class TestWellSpaced:
    def test_examples(self):
        assert well_spaced((5, 2, -1))
        assert not well_spaced((5, 4, -1))
        assert well_spaced(())
        assert well_spaced((3,))

    def test_everywhere(self):
        good = PlacedParameter([(Signature(2, 1), HCParameter((5, 2), (-1,)))])
        bad = PlacedParameter([(Signature(2, 1), HCParameter((5, 2), (1,)))])
        assert well_spaced_everywhere(good)
        assert not well_spaced_everywhere(bad)


class TestRestrictParameter:
    def test_worked_example(self):
        rp = restrict_parameter(Signature(2, 1), HCParameter((5, 2), (-1,)))
        assert rp.prime_a == (Fraction(9, 2),)
        assert rp.prime_b == (-HALF,)
        assert rp.u1_weight == 2

    def test_min_entry_case(self):
        rp = restrict_parameter(Signature(2, 1), HCParameter((5, 2), (3,)))
        assert rp.prime_a == (Fraction(9, 2),)
        assert rp.prime_b == (Fraction(7, 2),)
        assert rp.u1_weight == 2

    def test_empty_base(self):
        rp = restrict_parameter(Signature(1, 0), HCParameter((4,), ()))
        assert rp.prime_a == ()
        assert rp.prime_b == ()
        assert rp.u1_weight == 4

    def test_rejects_r_zero(self):
        with pytest.raises(ValueError):
            restrict_parameter(Signature(0, 2), HCParameter((), (3, 1)))

    def test_u1_is_coherent_tail(self):
        rng = random.Random(47)
        for n in range(1, 7):
            for sig in all_signatures(n):
                if sig.r == 0:
                    continue
                for m in enumerate_packet(spaced_ic(rng, n), sig):
                    rp = restrict_parameter(sig, m.hc)
                    assert rp.u1_weight == m.coherent[sig.r - 1]


class TestDiscreteSeriesCheck:
    def test_regular_descent(self):
        rp = restrict_parameter(Signature(2, 1), HCParameter((5, 2), (-1,)))
        assert restriction_is_discrete_series(rp, 3)

    def test_collision_fails(self):
        rp = restrict_parameter(Signature(2, 1), HCParameter((3, 1), (2,)))
        assert rp.prime_a == rp.prime_b == (Fraction(5, 2),)
        assert not restriction_is_discrete_series(rp, 3)
        with pytest.raises(ValueError):
            rp.prime_hc()

    def test_holds_under_spacing(self):
        rng = random.Random(53)
        for n in range(1, 7):
            for sig in all_signatures(n):
                if sig.r == 0:
                    continue
                for m in enumerate_packet(spaced_ic(rng, n), sig):
                    rp = restrict_parameter(sig, m.hc)
                    assert restriction_is_discrete_series(rp, n)


class TestMinEntryCondition:
    def test_examples(self):
        assert min_entry_in_a(HCParameter((5, 2), (3,))) is True
        assert min_entry_in_a(HCParameter((5, 2), (-1,))) is False
        assert min_entry_in_a(HCParameter((5, -1), (2,))) is True

    def test_compact_base_always_true(self):
        assert min_entry_in_a(HCParameter((4, 1, 0), ())) is True

    def test_empty_a_block_false(self):
        assert min_entry_in_a(HCParameter((), (4, 1))) is False

    def test_everywhere(self):
        good = PlacedParameter([
            (Signature(2, 1), HCParameter((5, -1), (2,))),
            (Signature(1, 2), HCParameter((0,), (7, 3))),
        ])
        assert min_entry_in_a_everywhere(good)
        mixed = PlacedParameter([
            (Signature(2, 1), HCParameter((5, -1), (2,))),
            (Signature(1, 2), HCParameter((4,), (7, 3))),
        ])
        assert not min_entry_in_a_everywhere(mixed)


class TestSupportRoute:
    def test_matches_when_min_in_a(self):
        sig = Signature(2, 1)
        hc = HCParameter((5, -1), (2,))
        assert noncompact_support_matches(sig, hc, restrict_parameter(sig, hc))

    def test_differs_when_min_elsewhere(self):
        sig = Signature(2, 1)
        hc = HCParameter((5, 2), (-1,))
        assert not noncompact_support_matches(sig, hc, restrict_parameter(sig, hc))

    def test_equivalence_under_spacing(self):
        rng = random.Random(59)
        checked = 0
        for n in range(1, 7):
            for sig in all_signatures(n):
                if sig.r == 0:
                    continue
                for m in enumerate_packet(spaced_ic(rng, n), sig):
                    rp = restrict_parameter(sig, m.hc)
                    assert noncompact_support_matches(sig, m.hc, rp) \
                        == min_entry_in_a(m.hc)
                    checked += 1
        assert checked >= 120

    def test_gap_one_divergence(self):
        # a_1 = b_1 + 1: the minimum condition holds but the shifted blocks
        # collide, so the support route drops a pair and the two diverge
        sig = Signature(2, 1)
        hc = HCParameter((3, 1), (2,))
        assert not well_spaced((3, 2, 1))
        assert min_entry_in_a(hc) is True
        rp = restrict_parameter(sig, hc)
        assert noncompact_support_matches(sig, hc, rp) is False

        # off the hypothesis the routes can still agree
        hc2 = HCParameter((3, 2), (1,))
        rp2 = restrict_parameter(sig, hc2)
        assert min_entry_in_a(hc2) is False
        assert noncompact_support_matches(sig, hc2, rp2) is False


class TestClassify:
    def test_isomorphism(self):
        p = PlacedParameter([(Signature(2, 1), HCParameter((5, -1), (2,)))])
        assert classify_restriction(p) is RestrictionClass.ISOMORPHISM

    def test_zero(self):
        p = PlacedParameter([(Signature(2, 1), HCParameter((5, 2), (-1,)))])
        assert classify_restriction(p) is RestrictionClass.ZERO

    def test_two_places(self):
        one_bad = PlacedParameter([
            (Signature(2, 1), HCParameter((5, -1), (2,))),
            (Signature(2, 1), HCParameter((7, 4), (0,))),
        ])
        assert classify_restriction(one_bad) is RestrictionClass.ZERO
        both_good = PlacedParameter([
            (Signature(2, 1), HCParameter((5, -1), (2,))),
            (Signature(2, 1), HCParameter((7, 0), (4,))),
        ])
        assert classify_restriction(both_good) is RestrictionClass.ISOMORPHISM

    def test_r_zero_rejected(self):
        p = PlacedParameter([(Signature(0, 2), HCParameter((), (3, 1)))])
        with pytest.raises(ValueError):
            classify_restriction(p)

    def test_off_hypothesis_warns_once(self):
        p = PlacedParameter([(Signature(2, 1), HCParameter((3, 2), (1,)))])
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            got = classify_restriction(p)
        assert got is RestrictionClass.ZERO
        assert len(caught) == 1
        assert "spacing hypothesis" in str(caught[0].message)

    def test_warning_suppressible(self):
        p = PlacedParameter([(Signature(2, 1), HCParameter((3, 2), (1,)))])
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            classify_restriction(p, warn=False)
        assert caught == []

    def test_no_warning_on_hypothesis(self):
        p = PlacedParameter([(Signature(2, 1), HCParameter((5, -1), (2,)))])
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            classify_restriction(p)
        assert caught == []


class TestFraction:
    def test_worked_example(self):
        places = [(Signature(2, 1), InfinitesimalCharacter(Weight((5, 2, -1))))]
        assert isomorphism_fraction(places) == Fraction(2, 3)
        assert expected_fraction([Signature(2, 1)]) == Fraction(2, 3)

    def test_compact_place(self):
        places = [(Signature(3, 0), InfinitesimalCharacter(Weight((6, 3, 0))))]
        assert isomorphism_fraction(places) == 1
        assert expected_fraction([Signature(3, 0)]) == 1

    def test_two_places(self):
        ic1 = InfinitesimalCharacter(Weight((5, 2, -1)))
        ic2 = InfinitesimalCharacter(Weight((7, 4, 0)))
        places = [(Signature(2, 1), ic1), (Signature(1, 2), ic2)]
        assert isomorphism_fraction(places) == Fraction(2, 9)
        assert expected_fraction([Signature(2, 1), Signature(1, 2)]) == Fraction(2, 9)

    def test_matches_closed_form(self):
        rng = random.Random(61)
        for n in range(1, 7):
            for sig in all_signatures(n):
                places = [(sig, spaced_ic(rng, n))]
                assert isomorphism_fraction(places) == expected_fraction([sig])

    def test_unequal_rank_rejected(self):
        with pytest.raises(ValueError):
            isomorphism_fraction([
                (Signature(2, 1), InfinitesimalCharacter(Weight((5, 2, -1)))),
                (Signature(1, 1), InfinitesimalCharacter(Weight((3, 0)))),
            ])


class TestChain:
    def test_isomorphism_chain(self):
        p = PlacedParameter([(Signature(2, 1), HCParameter((5, -1), (2,)))])
        chain = descent_chain(p, 2)
        assert [step.classification for step in chain] == [
            RestrictionClass.ISOMORPHISM, RestrictionClass.ZERO]
        first = chain[0].parameter.places[0][1]
        assert first == HCParameter((Fraction(9, 2),), (Fraction(5, 2),))
        assert chain[0].u1_weights == (-1,)

    def test_zero_chain_dual_flag(self):
        p = PlacedParameter([(Signature(2, 1), HCParameter((5, 2), (-1,)))])
        chain = descent_chain(p, 1)
        assert chain[0].classification is RestrictionClass.ZERO
        assert dual_parameter(p.places[0][1]) == HCParameter((-2, -5), (1,))
        assert chain[0].dual_min_in_a is True

    def test_depth_clamped(self):
        p = PlacedParameter([(Signature(1, 0), HCParameter((4,), ()))])
        assert descent_chain(p, 10) == []
        p3 = PlacedParameter([(Signature(2, 1), HCParameter((5, -1), (2,)))])
        assert len(descent_chain(p3, 10)) == 2

    def test_pending_r_zero_raises(self):
        p = PlacedParameter([(Signature(1, 2), HCParameter((5,), (2, -1)))])
        chain = descent_chain(p, 1)
        assert chain[0].parameter.places[0][0] == Signature(0, 2)
        with pytest.raises(ValueError):
            descent_chain(p, 2)

    def test_depth_clamp_beats_pending_r_zero(self):
        # n = 2 clamps to one step, so the r = 0 place is never restricted
        p = PlacedParameter([(Signature(1, 1), HCParameter((3,), (0,)))])
        chain = descent_chain(p, 5)
        assert len(chain) == 1
        assert chain[0].parameter.places[0][0] == Signature(0, 1)

    def test_u1_sum_identity(self):
        # split-off weights plus the residual coherent sum reconstruct the
        # original coherent trace at each place
        rng = random.Random(67)
        for _ in range(20):
            n = rng.randint(2, 6)
            r = rng.randint(1, n)
            sig = Signature(r, n - r)
            m = enumerate_packet(spaced_ic(rng, n), sig)[0]
            p = PlacedParameter([(sig, m.hc)])
            chain = descent_chain(p, r, warn=False)
            total = sum(step.u1_weights[0] for step in chain)
            last_sig, last_hc = chain[-1].parameter.places[0]
            residual = sum((last_hc.weight - rho_weight(last_hc.n)).entries)
            original = sum((m.hc.weight - rho_weight(n)).entries)
            assert total + residual == original

    def test_levels_descend(self):
        p = PlacedParameter([(Signature(3, 1), HCParameter((9, 5, 1), (3,)))])
        chain = descent_chain(p, 3, warn=False)
        assert [step.level for step in chain] == [3, 2, 1]


def rho_weight(n):
    from lpackets import rho
    return rho(n)
