"""
Unit tests for asymptotic statistics and record scans.
"""

import math
from fractions import Fraction

import pytest

from collatzlab.core.asymptotics import (
    BIG_COMPLETENESS_WITNESS,
    big_completeness_check,
    completeness_floor,
    completeness_floor_holds,
    eq18_check,
    gamma_limit_table,
    merge_records,
    records_from_counts,
    records_in_smallest_list,
    res_limit_table,
    scan_range,
    scan_records,
    smallest_with_k_odds,
    smallest_with_k_odds_table,
    stat_value,
    theorem_t3_trend,
)
from collatzlab.core.exceptions import InputValidationError, ResourceCap
from collatzlab.core.trajectory import COMPLETENESS_LIMIT, ParityCounts, parity_counts
from collatzlab.models.domain import CornerFamily, StatKind


class TestCompletenessFloor:
    """Test the exact lower bound on even steps."""

    @pytest.mark.parametrize("o, expected", [(1, 3), (2, 5), (10, 18)])
    def test_values(self, o: int, expected: int):
        """Test ceil(log2(3^{o+1} - 2^{o+1}))."""
        assert completeness_floor(o) == expected

    def test_holds_for_odd_m(self):
        """Test e(m) >= floor(o(m)) for odd m."""
        for m in range(3, 3000, 2):
            assert completeness_floor_holds(m)

    def test_domain(self):
        """Test that the floor needs o >= 1 and odd m >= 3."""
        with pytest.raises(InputValidationError):
            completeness_floor(0)
        with pytest.raises(InputValidationError):
            completeness_floor_holds(1)


class TestTrends:
    """Test the corner-family trends."""

    def test_gamma_table(self):
        """Test Gamma along the even corner seeds."""
        table = gamma_limit_table(4)
        assert [k for k, _ in table] == [0, 1, 2, 3, 4]
        assert table[0][1] == pytest.approx(5 / math.log(3), abs=1e-9)
        assert table[1][1] == pytest.approx(12 / math.log(151), abs=1e-9)
        assert all(g > 1 / math.log(2) for _, g in table)

    def test_res_table(self):
        """Test Res along the even corner seeds."""
        values = [r for _, r in res_limit_table(3)]
        assert all(b < a for a, b in zip(values, values[1:]))
        assert all(r > 1 for r in values)

    def test_completeness_even(self):
        """Test the even-family completeness trend."""
        table = theorem_t3_trend(CornerFamily.EVEN, 5)
        assert table[0] == (0, Fraction(2, 5))
        assert table[1] == (1, Fraction(1, 4))
        assert table[-1] == (5, Fraction(7, 736))

    def test_completeness_odd_starts_at_one(self):
        """Test that the odd trend skips the degenerate k = 0 seed."""
        table = theorem_t3_trend(CornerFamily.ODD, 3)
        assert [k for k, _ in table] == [1, 2, 3]
        assert table[0][1] == Fraction(3, 16)
        assert all(c < COMPLETENESS_LIMIT for _, c in table)

    def test_cap(self):
        """Test the trend cap."""
        with pytest.raises(ResourceCap):
            theorem_t3_trend(CornerFamily.EVEN, 8, cap=7)
        with pytest.raises(InputValidationError):
            gamma_limit_table(-1)


class TestRecordScans:
    """Test record scans."""

    def test_gamma_records(self):
        """Test the first Gamma records."""
        assert [r.m for r in scan_records(30, StatKind.GAMMA)] == [2, 3, 7, 9, 27]

    def test_completeness_records(self):
        """Test that the first completeness record is 3 at 0.4."""
        records = scan_records(1000, StatKind.COMPLETENESS)
        assert records[0].m == 3
        assert records[0].value_text == "0.400000"
        assert all(r.value < COMPLETENESS_LIMIT for r in records)

    def test_res_peak(self):
        """Test that Res peaks at 993 below 2000."""
        records = scan_records(2000, StatKind.RES)
        assert records[-1].m == 993
        assert records[-1].value_text == "1.253142"

    @pytest.mark.slow
    def test_completeness_records_to_a_million(self):
        """Test the completeness records up to 10^6."""
        records = scan_records(10**6, StatKind.COMPLETENESS)
        assert records[0].m == 3
        assert records[0].value_text == "0.400000"
        assert all(r.value < COMPLETENESS_LIMIT for r in records)

    @pytest.mark.slow
    def test_res_peak_below_100000(self):
        """Test that no Res record follows 993 below 10^5."""
        records = scan_records(10**5, StatKind.RES)
        assert records[-1].m == 993
        assert records[-1].value_text == "1.253142"

    @pytest.mark.parametrize("stat", list(StatKind))
    def test_sharded_merge(self, stat: StatKind):
        """Test that merging shard-local records equals a full scan."""
        shards = [scan_range(2, 99, stat), scan_range(100, 250, stat), scan_range(251, 400, stat)]
        assert merge_records(reversed(shards)) == scan_records(400, stat)

    def test_records_from_counts(self):
        """Test rebuilding records from stored counts."""
        records = scan_range(2, 200, StatKind.RES)
        counts = [ParityCounts(m=r.m, e=r.e, o=r.o, g1=r.g1) for r in records]
        assert records_from_counts(StatKind.RES, counts) == records

    def test_stat_value(self):
        """Test exact statistics."""
        counts = parity_counts(3)
        assert stat_value(StatKind.COMPLETENESS, counts) == Fraction(2, 5)
        assert stat_value(StatKind.RES, counts) == Fraction(32, 27)

    def test_bad_range(self):
        """Test the scan range bounds."""
        with pytest.raises(InputValidationError):
            scan_range(1, 10, StatKind.GAMMA)
        with pytest.raises(InputValidationError):
            scan_records(2, StatKind.GAMMA)


class TestSmallestWithKOdds:
    """Test least starting values with a given odd count."""

    def test_single(self):
        """Test the direct search."""
        assert smallest_with_k_odds(1, 100) == 5
        assert smallest_with_k_odds(3, 100) == 17
        assert smallest_with_k_odds(200, 100) is None

    def test_table(self):
        """Test the one-pass table."""
        table = smallest_with_k_odds_table(100)
        assert (table[1], table[2], table[3]) == (5, 3, 17)

    def test_records_in_list(self):
        """Test the membership observation for Gamma records."""
        result = records_in_smallest_list(scan_records(30, StatKind.GAMMA))
        assert set(result) == {3, 7, 9, 27}
        assert result[3] is True


class TestBigValues:
    """Test statistics of big starting values."""

    def test_big_completeness(self):
        """Test the completeness of the 22-digit witness."""
        assert BIG_COMPLETENESS_WITNESS == 7219136416377236271195
        assert big_completeness_check() == pytest.approx(0.606061, abs=5e-7)

    @pytest.mark.parametrize("k", [1, 10, 100])
    def test_log_identity(self, k: int):
        """Test the exponent identity and its brackets."""
        assert eq18_check(k)
