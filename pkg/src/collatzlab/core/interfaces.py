"""
Interface definitions for collatzlab services and repositories.

The CLI depends on these contracts, so tests can swap in small-scale or
in-memory implementations.
"""

from abc import ABC, abstractmethod
from typing import Dict, List, Optional, Sequence

from ..models.domain import SeedRecord, StatKind, SuiteResult
from .asymptotics import RecordEntry
from .eolevels import PrimitiveSeed
from .trajectory import ParityCounts


class IRecordCache(ABC):
    """Storage for shard-local scan records."""

    @abstractmethod
    def get(
        self, stat_kind: StatKind, lo: int, hi: int, budget: int
    ) -> Optional[List[ParityCounts]]:
        """Get the stored records of one shard, or None on a miss."""
        pass

    @abstractmethod
    def put(
        self, stat_kind: StatKind, lo: int, hi: int, budget: int, rows: Sequence[ParityCounts]
    ) -> None:
        """Store the records of one shard."""
        pass


class IScanService(ABC):
    """Record scans over ranges of starting values."""

    @abstractmethod
    def scan(self, limit: int, stat_kind: StatKind) -> List[RecordEntry]:
        """Scan 2..limit and return the records in ascending m."""
        pass


class ISeedService(ABC):
    """Primitive seed enumeration."""

    @abstractmethod
    def enumerate(self, level: int) -> List[PrimitiveSeed]:
        """Every primitive seed of a level in canonical order."""
        pass

    @abstractmethod
    def to_records(self, seeds: List[PrimitiveSeed], verify: bool = False) -> List[SeedRecord]:
        """Export rows with trajectory counts; verify checks the odd-count law."""
        pass


class IVerificationService(ABC):
    """Named property suites."""

    @abstractmethod
    def suite_names(self) -> List[str]:
        """Names accepted by run()."""
        pass

    @abstractmethod
    def run(self, name: str) -> SuiteResult:
        """Run one suite."""
        pass

    @abstractmethod
    def run_many(self, names: Sequence[str]) -> Dict[str, SuiteResult]:
        """Run several suites in order."""
        pass
