"""
Sharded record scans.

The range 2..limit is cut into shards aligned to multiples of the shard
size, so a longer scan reuses the cached shards of a shorter one. Shards
run on a thread pool and their local records are merged in ascending m,
which makes the output independent of the thread count.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Tuple

from ..config.settings import ComputeSettings
from ..core.asymptotics import RecordEntry, merge_records, records_from_counts, scan_range
from ..core.exceptions import CacheError, InputValidationError
from ..core.interfaces import IRecordCache, IScanService
from ..core.trajectory import ParityCounts
from ..models.domain import StatKind

logger = logging.getLogger(__name__)


def shard_bounds(limit: int, shard_size: int) -> List[Tuple[int, int]]:
    """[lo, hi] shards covering 2..limit, aligned to multiples of shard_size."""
    shards = []
    start = 0
    while start <= limit:
        lo = max(2, start)
        hi = min(limit, start + shard_size - 1)
        if lo <= hi:
            shards.append((lo, hi))
        start += shard_size
    return shards


class RecordScanService(IScanService):
    """Record scan over thread-pooled shards with an optional file cache."""

    def __init__(self, settings: ComputeSettings, cache: Optional[IRecordCache] = None):
        self.settings = settings
        self.cache = cache

    def scan(self, limit: int, stat_kind: StatKind) -> List[RecordEntry]:
        """Scan 2..limit and return the records in ascending m."""
        if limit < 3:
            raise InputValidationError(f"limit must be >= 3, got {limit}")
        shards = shard_bounds(limit, self.settings.shard_size)
        logger.info(
            f"Scanning {stat_kind.value} records up to {limit} "
            f"in {len(shards)} shard(s) on {self.settings.threads} thread(s)"
        )
        with ThreadPoolExecutor(max_workers=self.settings.threads) as pool:
            results = list(pool.map(lambda s: self._scan_shard(stat_kind, *s), shards))
        records = merge_records(results)
        logger.info(f"Found {len(records)} {stat_kind.value} records up to {limit}")
        return records

    def _scan_shard(self, stat_kind: StatKind, lo: int, hi: int) -> List[RecordEntry]:
        budget = self.settings.step_budget
        if self.cache is not None:
            try:
                cached = self.cache.get(stat_kind, lo, hi, budget)
            except CacheError as e:
                logger.warning(f"Ignoring unreadable cache shard [{lo}, {hi}]: {e}")
                cached = None
            if cached is not None:
                return records_from_counts(stat_kind, cached)

        logger.debug(f"Scanning shard [{lo}, {hi}]")
        records = scan_range(lo, hi, stat_kind, budget)

        if self.cache is not None:
            rows = [ParityCounts(m=r.m, e=r.e, o=r.o, g1=r.g1) for r in records]
            try:
                self.cache.put(stat_kind, lo, hi, budget, rows)
            except CacheError as e:
                logger.warning(f"Could not cache shard [{lo}, {hi}]: {e}")
        return records
