"""
CSV file cache for record-scan shards.

One file per (stat, lo, hi, budget) shard, named by a hash of those
parameters. Each row stores m, o, e and g1 of a shard-local record, so the
statistic is recomputed exactly on load.
"""

import csv
import hashlib
import logging
from pathlib import Path
from typing import List, Optional, Sequence

from ..core.exceptions import CacheError
from ..core.interfaces import IRecordCache
from ..core.trajectory import ParityCounts
from ..models.domain import StatKind

logger = logging.getLogger(__name__)

_COLUMNS = ["m", "o", "e", "g1"]


class CsvRecordCache(IRecordCache):
    """Shard cache stored as plain CSV files in one directory."""

    def __init__(self, directory: Path):
        self.directory = Path(directory)

    def shard_path(self, stat_kind: StatKind, lo: int, hi: int, budget: int) -> Path:
        key = f"{stat_kind.value}|{lo}|{hi}|{budget}"
        digest = hashlib.sha256(key.encode("utf-8")).hexdigest()[:16]
        return self.directory / f"{stat_kind.value}-{lo}-{hi}-{digest}.csv"

    def get(
        self, stat_kind: StatKind, lo: int, hi: int, budget: int
    ) -> Optional[List[ParityCounts]]:
        """Get the stored records of one shard, or None on a miss."""
        path = self.shard_path(stat_kind, lo, hi, budget)
        if not path.exists():
            logger.debug(f"Cache miss for {stat_kind.value} shard [{lo}, {hi}]")
            return None
        try:
            with path.open(newline="", encoding="utf-8") as handle:
                reader = csv.DictReader(handle)
                if reader.fieldnames != _COLUMNS:
                    raise CacheError(
                        f"Unexpected columns in {path.name}", details={"columns": reader.fieldnames}
                    )
                rows = [
                    ParityCounts(m=int(r["m"]), e=int(r["e"]), o=int(r["o"]), g1=int(r["g1"]))
                    for r in reader
                ]
        except (OSError, ValueError, KeyError) as e:
            logger.error(f"Error reading cache shard {path}: {e}")
            raise CacheError(f"Cannot read cache shard {path.name}", cause=e) from e
        logger.debug(f"Cache hit for {stat_kind.value} shard [{lo}, {hi}]: {len(rows)} records")
        return rows

    def put(
        self, stat_kind: StatKind, lo: int, hi: int, budget: int, rows: Sequence[ParityCounts]
    ) -> None:
        """Store the records of one shard."""
        path = self.shard_path(stat_kind, lo, hi, budget)
        tmp = path.with_suffix(".tmp")
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            with tmp.open("w", newline="", encoding="utf-8") as handle:
                writer = csv.writer(handle)
                writer.writerow(_COLUMNS)
                for r in rows:
                    writer.writerow([r.m, r.o, r.e, r.g1])
            tmp.replace(path)
        except OSError as e:
            logger.error(f"Error writing cache shard {path}: {e}")
            raise CacheError(f"Cannot write cache shard {path.name}", cause=e) from e
