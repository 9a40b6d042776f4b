"""
Unit tests for the representation algebra.
"""

import random
from fractions import Fraction

import pytest

from collatzlab.core.exceptions import (
    DegenerateDenominator,
    EvenStart,
    InputValidationError,
    NotDivisible,
    NotMonotone,
    NotPositive,
)
from collatzlab.core.repcore import (
    CrandallRep,
    SmoothRep,
    WirschingSeq,
    canonical_rep,
    cycle_lower_bound_check,
    cycle_search,
    cycle_solve,
    enumerate_smooth_special,
    prop1_witness,
    rep_contract,
    rep_evaluate,
    rep_expand,
    rep_from_trajectory,
    seed_chain,
    seed_chain_steps,
    smooth_special_rep,
    trivial_cycle_profile,
    wirsching_concat,
    wirsching_encode,
    wirsching_eval,
    wirsching_unwind,
)
from collatzlab.core.trajectory import parity_counts


class TestCrandallRep:
    """Test exponent vectors and their values."""

    @pytest.mark.parametrize(
        "m, exponents", [(3, (0, 1, 5)), (5, (0, 4)), (17, (0, 2, 5, 9)), (1, (0, 2))]
    )
    def test_from_trajectory(self, m: int, exponents: tuple):
        """Test least-terms vectors of small odd numbers."""
        rep = rep_from_trajectory(m)
        assert rep.exponents == exponents
        assert rep_evaluate(rep) == m

    def test_roundtrip(self):
        """Test evaluate after extract for odd m."""
        for m in range(3, 5001, 2):
            assert rep_evaluate(rep_from_trajectory(m)) == m

    def test_non_canonical_vector(self):
        """Test that a non-canonical vector of 1 still evaluates."""
        assert rep_evaluate(CrandallRep((0, 2, 4, 6))) == 1

    def test_not_monotone(self):
        """Test that exponents must increase."""
        with pytest.raises(NotMonotone):
            CrandallRep((0, 3, 3))
        with pytest.raises(NotMonotone):
            CrandallRep((0,))

    def test_not_positive(self):
        """Test a vector with a negative numerator."""
        with pytest.raises(NotPositive):
            rep_evaluate(CrandallRep((0, 1, 2)))

    def test_not_divisible(self):
        """Test a vector whose numerator is not a multiple of 3^(k+1)."""
        with pytest.raises(NotDivisible):
            rep_evaluate(CrandallRep((0, 1, 4)))

    def test_even_start(self):
        """Test that only odd m have least-terms vectors."""
        with pytest.raises(EvenStart):
            rep_from_trajectory(6)


class TestExpansion:
    """Test expansion and contraction."""

    def test_expand(self):
        """Test the expansion of the vector of 3."""
        expanded = rep_expand(CrandallRep((0, 1, 5)))
        assert expanded.exponents == (0, 1, 5, 7)
        assert rep_evaluate(expanded) == 3

    def test_contract(self):
        """Test that contraction undoes expansion only."""
        assert rep_contract(CrandallRep((0, 1, 5, 7))) == CrandallRep((0, 1, 5))
        assert rep_contract(CrandallRep((0, 1, 5))) is None
        assert rep_contract(CrandallRep((0, 2))) is None

    def test_random_expansions(self):
        """Test value invariance over random expansions."""
        rng = random.Random(7)
        for _ in range(200):
            m = rng.randrange(3, 100_000) | 1
            rep = rep_from_trajectory(m)
            expanded = rep
            for _ in range(rng.randint(1, 5)):
                expanded = rep_expand(expanded)
            assert rep_evaluate(expanded) == m
            assert canonical_rep(expanded) == rep


class TestSmoothSpecial:
    """Test 3-smooth special representations."""

    def test_nineteen(self):
        """Test that 19 is special exactly at levels 1 and 2."""
        assert smooth_special_rep(19, 1) == SmoothRep((0, 4))
        assert smooth_special_rep(19, 2) == SmoothRep((0, 1, 2))
        assert smooth_special_rep(19, 3) is None
        assert smooth_special_rep(19, 0) is None

    def test_value(self):
        """Test the value of a special representation."""
        assert SmoothRep((0, 1, 2)).value == 19

    def test_against_enumeration(self):
        """Test agreement with exhaustive exponent search."""
        limit = 2000
        for k in range(7):
            found = {}
            for rep in enumerate_smooth_special(limit, k):
                assert rep.value not in found
                found[rep.value] = rep
            for n in range(1, limit + 1):
                assert smooth_special_rep(n, k) == found.get(n)

    def test_enumeration_respects_limit(self):
        """Test that the enumerator stays below its limit."""
        assert list(enumerate_smooth_special(2, 1)) == []
        assert [r.value for r in enumerate_smooth_special(19, 1)] == [5, 7, 11, 19]

    def test_rejects_bad_input(self):
        """Test the input domain."""
        with pytest.raises(InputValidationError):
            smooth_special_rep(0, 1)


class TestProp1Witness:
    """Test 2^a = 3^k x + n splits."""

    @pytest.mark.parametrize(
        "x, a, k, n, exps",
        [(3, 5, 2, 5, (0, 1)), (5, 4, 1, 1, (0,)), (17, 9, 3, 53, (0, 2, 5))],
    )
    def test_known_witnesses(self, x: int, a: int, k: int, n: int, exps: tuple):
        """Test witnesses of small odd numbers."""
        witness = prop1_witness(x)
        assert (witness.a, witness.k, witness.n) == (a, k, n)
        assert witness.rep.exponents == exps

    def test_identity(self):
        """Test the defining identity for odd x."""
        for x in range(3, 2000, 2):
            w = prop1_witness(x)
            assert (1 << w.a) == 3**w.k * x + w.n


class TestCycles:
    """Test cycle profiles."""

    def test_trivial_profile(self):
        """Test that (0, 2) solves to 1."""
        candidate = cycle_solve((0, 2))
        assert candidate.q_star == 1
        assert candidate.is_trivial
        assert not candidate.is_nontrivial_cycle

    def test_non_integral(self):
        """Test a profile with a fractional solution."""
        candidate = cycle_solve((0, 1, 4))
        assert candidate.q_star == Fraction(5, 7)
        assert not candidate.is_integral

    def test_degenerate(self):
        """Test that 2^{a_{k+1}} <= 3^{k+1} raises with q*."""
        with pytest.raises(DegenerateDenominator) as exc_info:
            cycle_solve((0, 1))
        assert exc_info.value.q_star == -1

    def test_search_finds_only_trivial(self):
        """Test that the exhaustive search finds only the trivial cycle."""
        report = cycle_search(3, 16)
        assert report.only_trivial
        assert sorted(report.trivial) == [trivial_cycle_profile(k) for k in range(4)]
        assert report.profiles > report.degenerate > 0

    def test_trivial_cycle_profile(self):
        """Test the expansions of the trivial cycle."""
        assert trivial_cycle_profile(0) == (0, 2)
        assert trivial_cycle_profile(2) == (0, 2, 4, 6)

    def test_lower_bound(self):
        """Test the lower bound on nontrivial cycle elements."""
        report = cycle_lower_bound_check(2, 16)
        assert report.holds
        assert report.lower_bound == 3
        assert report.trivial == 1

    def test_lower_bound_needs_k(self):
        """Test that the bound needs k >= 1."""
        with pytest.raises(InputValidationError):
            cycle_lower_bound_check(0, 10)


class TestSeedChains:
    """Test 4m+1 seed chains."""

    @pytest.mark.parametrize(
        "m, chain", [(3, [3, 13, 53]), (1, [1, 5]), (17, [17, 69])]
    )
    def test_chain(self, m: int, chain: list):
        """Test chains of small starts."""
        assert seed_chain(m, len(chain)) == chain

    def test_steps_differ_by_two(self):
        """Test that each member takes two more steps than the last."""
        for m in range(1, 100, 2):
            steps = seed_chain_steps(m, 4)
            assert [b - a for a, b in zip(steps, steps[1:])] == [2, 2, 2]


class TestWirsching:
    """Test admissible sequences and their affine maps."""

    def test_encode_three(self):
        """Test the sequence of 3 and its measures."""
        s = wirsching_encode(3)
        assert s.alphas == (0, 0, 3)
        assert (s.length, s.absolute, s.norm) == (2, 3, 5)
        assert wirsching_eval(s, Fraction(1)) == 3

    @pytest.mark.parametrize("m, alphas", [(1, (0, 1)), (5, (0, 3))])
    def test_encode_small(self, m: int, alphas: tuple):
        """Test sequences of 1 and 5."""
        assert wirsching_encode(m).alphas == alphas

    def test_eval_examples(self):
        """Test maps of hand-built sequences."""
        assert wirsching_eval(WirschingSeq((0, 0, 3, 1)), Fraction(1)) == 3
        assert wirsching_eval(WirschingSeq((0,)), Fraction(7)) == 7

    def test_concat(self):
        """Test that concatenation composes the maps."""
        left, right = WirschingSeq((0, 2)), WirschingSeq((0, 1))
        joined = wirsching_concat(left, right)
        assert joined.alphas == (0, 2, 1)
        inner = wirsching_eval(right, Fraction(1))
        assert wirsching_eval(joined, Fraction(1)) == wirsching_eval(left, inner) == Fraction(7, 3)

    def test_eval_against_unwind(self):
        """Test the closed form against step-by-step composition."""
        for m in range(1, 1000, 2):
            s = wirsching_encode(m)
            assert wirsching_eval(s, Fraction(1)) == wirsching_unwind(s, Fraction(1)) == m
            assert s.norm == parity_counts(m).e

    def test_is_small(self):
        """Test the small-sequence bound."""
        assert WirschingSeq((0, 1)).is_small
        assert not WirschingSeq((1,)).is_small

    def test_rejects_negative(self):
        """Test that entries are non-negative."""
        with pytest.raises(InputValidationError):
            WirschingSeq((0, -1))

    @pytest.mark.parametrize("m", [2, 4, 6, 1024])
    def test_encode_rejects_even(self, m: int):
        """Test that only odd starts have an admissible sequence."""
        with pytest.raises(EvenStart):
            wirsching_encode(m)
