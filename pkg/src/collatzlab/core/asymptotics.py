"""
Asymptotic statistics and records.

Covers the exact completeness floor, the stopping-time and completeness
trends along the corner families, record scans for Gamma, completeness and
Res, and the smallest starting values with a given number of odd terms.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from ..models.domain import CornerFamily, StatKind
from ..utils.numtheory import INV_LN2, LN2, LN3, ceil_log2, ln_big
from .eolevels import corner_even, corner_odd
from .exceptions import InputValidationError, ResourceCap, VerificationFailure
from .trajectory import (
    COMPLETENESS_LIMIT,
    DEFAULT_MAX_STEPS,
    ParityCounts,
    parity_counts,
)

logger = logging.getLogger(__name__)

DEFAULT_TREND_CAP = 7

# C(BIG_COMPLETENESS_WITNESS) rounds to 0.606061
BIG_COMPLETENESS_WITNESS = 7219136416377236271195

StatValue = Union[Fraction, float]


@dataclass(frozen=True)
class RecordEntry:
    """A starting value whose statistic beats every smaller one in the scan."""

    m: int
    stat_kind: StatKind
    value: StatValue
    o: int
    e: int
    g1: int

    @property
    def value_text(self) -> str:
        return f"{float(self.value):.6f}"


def completeness_floor(o: int) -> int:
    """ceil(log2(3^{o+1} - 2^{o+1})), computed from the bit length."""
    if o < 1:
        raise InputValidationError(f"completeness floor needs o >= 1, got {o}")
    return ceil_log2(3 ** (o + 1) - 2 ** (o + 1))


def completeness_floor_holds(m: int, max_steps: int = DEFAULT_MAX_STEPS) -> bool:
    """e(m) >= completeness_floor(o(m)) for odd m >= 3."""
    if m < 3 or not m & 1:
        raise InputValidationError(f"floor check needs odd m >= 3, got {m}")
    counts = parity_counts(m, max_steps)
    return counts.e >= completeness_floor(counts.o)


def check_trend_cap(k_max: int, cap: int) -> None:
    if k_max < 0:
        raise InputValidationError(f"k_max must be non-negative, got {k_max}")
    if k_max > cap:
        raise ResourceCap(f"k_max = {k_max} exceeds the trend cap {cap}")


def _strictly_decreasing(values: Sequence[StatValue]) -> bool:
    return all(b < a for a, b in zip(values, values[1:]))


def gamma_limit_table(
    k_max: int, cap: int = DEFAULT_TREND_CAP, max_steps: int = DEFAULT_MAX_STEPS
) -> List[Tuple[int, float]]:
    """Gamma of the even corner seeds m*_k; decreases strictly and stays above 1/ln2."""
    check_trend_cap(k_max, cap)
    table = []
    for k in range(k_max + 1):
        m = corner_even(k)
        counts = parity_counts(m, max_steps)
        table.append((k, counts.e / ln_big(m)))
    values = [g for _, g in table]
    if not _strictly_decreasing(values) or any(g <= INV_LN2 for g in values):
        raise VerificationFailure(
            "Gamma along the even corner seeds is not a strictly decreasing sequence above 1/ln2",
            failures=[f"k={k}: {g}" for k, g in table],
        )
    return table


def res_limit_table(
    k_max: int, cap: int = DEFAULT_TREND_CAP, max_steps: int = DEFAULT_MAX_STEPS
) -> List[Tuple[int, Fraction]]:
    """Res of the even corner seeds; decreases strictly toward 1."""
    check_trend_cap(k_max, cap)
    table = []
    for k in range(k_max + 1):
        m = corner_even(k)
        counts = parity_counts(m, max_steps)
        table.append((k, Fraction(2**counts.e, m * 3**counts.o)))
    values = [r for _, r in table]
    if not _strictly_decreasing(values) or any(r <= 1 for r in values):
        raise VerificationFailure(
            "Res along the even corner seeds is not strictly decreasing toward 1",
            failures=[f"k={k}: {float(r)}" for k, r in table],
        )
    return table


def stat_value(stat_kind: StatKind, counts: ParityCounts) -> StatValue:
    """Exact value where the statistic is rational, float for Gamma."""
    if stat_kind is StatKind.GAMMA:
        return counts.e / ln_big(counts.m)
    if stat_kind is StatKind.COMPLETENESS:
        return Fraction(counts.o, counts.e)
    return Fraction(2**counts.e, counts.m * 3**counts.o)


def _eligible(stat_kind: StatKind, counts: ParityCounts) -> bool:
    # completeness and Res degenerate on powers of two
    return stat_kind is StatKind.GAMMA or counts.o > 0


def scan_range(
    lo: int, hi: int, stat_kind: StatKind, max_steps: int = DEFAULT_MAX_STEPS
) -> List[RecordEntry]:
    """Records local to lo <= m <= hi."""
    if lo < 2 or hi < lo:
        raise InputValidationError(f"invalid scan range [{lo}, {hi}]")
    records: List[RecordEntry] = []
    best: Optional[StatValue] = None
    for m in range(lo, hi + 1):
        counts = parity_counts(m, max_steps)
        if not _eligible(stat_kind, counts):
            continue
        value = stat_value(stat_kind, counts)
        if best is None or value > best:
            best = value
            records.append(RecordEntry(m, stat_kind, value, counts.o, counts.e, counts.g1))
    return records


def records_from_counts(
    stat_kind: StatKind, counts: Iterable[ParityCounts]
) -> List[RecordEntry]:
    """Rebuild shard-local records from stored parity counts."""
    return [
        RecordEntry(c.m, stat_kind, stat_value(stat_kind, c), c.o, c.e, c.g1) for c in counts
    ]


def merge_records(shards: Iterable[List[RecordEntry]]) -> List[RecordEntry]:
    """Replay the record condition over shard-local records in ascending m."""
    merged: List[RecordEntry] = []
    for entry in sorted((e for shard in shards for e in shard), key=lambda e: e.m):
        if not merged or entry.value > merged[-1].value:
            merged.append(entry)
    return merged


def scan_records(
    limit: int, stat_kind: StatKind, max_steps: int = DEFAULT_MAX_STEPS
) -> List[RecordEntry]:
    """Every record of the statistic for 2 <= m <= limit."""
    if limit < 3:
        raise InputValidationError(f"limit must be >= 3, got {limit}")
    return merge_records([scan_range(2, limit, stat_kind, max_steps)])


def big_completeness_check(
    m: int = BIG_COMPLETENESS_WITNESS, max_steps: int = DEFAULT_MAX_STEPS
) -> float:
    """Completeness of m by a full big-integer run, rounded to six places."""
    counts = parity_counts(m, max_steps)
    return round(counts.o / counts.e, 6)


def smallest_with_k_odds(
    k: int, search_cap: int, max_steps: int = DEFAULT_MAX_STEPS
) -> Optional[int]:
    """Least 2 <= m <= search_cap with exactly k odd terms."""
    if k < 1:
        raise InputValidationError(f"k must be >= 1, got {k}")
    for m in range(2, search_cap + 1):
        if parity_counts(m, max_steps).o == k:
            return m
    return None


def smallest_with_k_odds_table(
    search_cap: int, max_steps: int = DEFAULT_MAX_STEPS
) -> Dict[int, int]:
    """k -> least m <= search_cap with exactly k odd terms, in one pass."""
    table: Dict[int, int] = {}
    for m in range(2, search_cap + 1):
        o = parity_counts(m, max_steps).o
        if o >= 1 and o not in table:
            table[o] = m
    return table


def records_in_smallest_list(
    records: Sequence[RecordEntry], max_steps: int = DEFAULT_MAX_STEPS
) -> Dict[int, bool]:
    """For each record m > 2, whether it is the least m with its odd count."""
    if not records:
        return {}
    table = smallest_with_k_odds_table(max(r.m for r in records), max_steps)
    return {r.m: table.get(r.o) == r.m for r in records if r.m > 2}


def eq18_check(k: int, rel_tol: float = 1e-12) -> bool:
    """(2^k)^{1 - ln2/ln6} = (3^k)^{ln2/ln6}, compared in log space, plus the brackets."""
    if k < 1:
        raise InputValidationError(f"k must be >= 1, got {k}")
    ratio = LN2 / math.log(6)
    lhs = k * (1 - ratio) * LN2
    rhs = k * ratio * LN3
    identity = math.isclose(lhs, rhs, rel_tol=rel_tol)
    brackets = round(ratio, 6) < 0.40 and round(1 - ratio, 6) > 0.606061
    return identity and brackets


def theorem_t3_trend(
    family: CornerFamily,
    k_max: int,
    cap: int = DEFAULT_TREND_CAP,
    max_steps: int = DEFAULT_MAX_STEPS,
) -> List[Tuple[int, Fraction]]:
    """Completeness of the corner seeds; strictly decreasing and below ln2/ln3.

    The odd family starts at k = 1 since its k = 0 seed is 1.
    """
    check_trend_cap(k_max, cap)
    start, seed_of = (0, corner_even) if family is CornerFamily.EVEN else (1, corner_odd)
    table = []
    for k in range(start, k_max + 1):
        counts = parity_counts(seed_of(k), max_steps)
        table.append((k, Fraction(counts.o, counts.e)))
    values = [c for _, c in table]
    if not _strictly_decreasing(values) or any(c >= COMPLETENESS_LIMIT for c in values):
        raise VerificationFailure(
            f"completeness along the {family.value} corner seeds is not decreasing below ln2/ln3",
            failures=[f"k={k}: {c}" for k, c in table],
        )
    return table
