"""
Primitive seed enumeration and export.

Work is split by (branch, u_1); each unit yields its seeds in lexicographic
order and executor.map returns the units in submission order, so the
concatenation is already canonical.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List

from ..config.settings import ComputeSettings
from ..core.eolevels import (
    PrimitiveSeed,
    check_level,
    iter_seeds_with_prefix,
    primitive_seeds,
    upsilon_prefixes,
)
from ..core.exceptions import VerificationFailure
from ..core.interfaces import ISeedService
from ..core.trajectory import parity_counts
from ..models.domain import SeedRecord

logger = logging.getLogger(__name__)


class SeedService(ISeedService):
    """Threaded enumeration of primitive seeds."""

    def __init__(self, settings: ComputeSettings):
        self.settings = settings

    def enumerate(self, level: int) -> List[PrimitiveSeed]:
        """Every primitive seed of a level in canonical order."""
        check_level(level, self.settings.level_cap)
        if self.settings.threads == 1:
            return primitive_seeds(level, self.settings.level_cap)

        units = upsilon_prefixes(level)
        logger.debug(f"Enumerating level {level} in {len(units)} units")
        with ThreadPoolExecutor(max_workers=self.settings.threads) as pool:
            parts = list(pool.map(lambda u: list(iter_seeds_with_prefix(level, *u)), units))
        seeds = [seed for part in parts for seed in part]
        logger.info(f"Enumerated {len(seeds)} primitive seeds at level {level}")
        return seeds

    def to_records(self, seeds: List[PrimitiveSeed], verify: bool = False) -> List[SeedRecord]:
        """Export rows with trajectory counts; verify checks the odd-count law."""
        records = []
        failures = []
        for seed in seeds:
            counts = parity_counts(seed.value, self.settings.step_budget)
            if verify and not seed.expansion_duplicate and counts.o != seed.level:
                failures.append(f"{seed.notation}: o={counts.o}, expected {seed.level}")
            records.append(
                SeedRecord(
                    level=seed.level,
                    branch=seed.branch,
                    c=seed.c,
                    upsilon=list(seed.params.upsilon),
                    value=str(seed.value),
                    e=counts.e,
                    o=counts.o,
                    expansion_duplicate=seed.expansion_duplicate,
                )
            )
        if failures:
            raise VerificationFailure(
                f"{len(failures)} seed(s) break the odd-count law", failures=failures
            )
        return records
