"""JSONL file-based cache of search results.

One CacheRecord per line, appended as results arrive. Loading keeps the
latest record per (k, ell) of the current engine version and rewrites the
file when anything was dropped.
"""

import json
import logging
from datetime import datetime, timezone
from pathlib import Path

from pydantic import ValidationError

from rado_numbers.domain.equation import find_mono_solution
from rado_numbers.domain.models import CacheRecord, Coloring, Equation, RadoResult
from rado_numbers.exceptions import CacheError
from rado_numbers.utils.file_ops import atomic_write_text

logger = logging.getLogger(__name__)

UTC = timezone.utc  # same object as datetime.UTC, which needs Python 3.11+


def _serialize(record: CacheRecord) -> str:
    return json.dumps(record.model_dump(), ensure_ascii=True)


class JsonlResultCache:
    """Search results keyed by (k, ell) for a single engine version.

    Only the process that owns the cache writes to it.
    """

    def __init__(self, path: Path, engine_version: str):
        """Open the cache, compacting the file if needed.

        Args:
            path: JSONL file; created on first write
            engine_version: Records of other versions are discarded

        Raises:
            CacheError: If the file exists but cannot be read or compacted
        """
        self._path = Path(path)
        self._engine_version = engine_version
        self._records: dict[tuple[int, int], CacheRecord] = {}
        self._load()

    def __len__(self) -> int:
        return len(self._records)

    def get(self, eq: Equation, n_max: int) -> RadoResult | None:
        """Return a result for eq usable under budget ``n_max``, or None.

        Exact values above the budget and lower bounds at or above it are
        served as the lower bound ``n_max + 1`` with the witness cut to n_max.
        """
        record = self._records.get((eq.k, eq.ell))
        if record is None:
            logger.debug(f"Cache miss for {eq}")
            return None
        witness = Coloring(bits=record.witness)
        if not self._revalidate(eq, record, witness):
            logger.warning(f"Discarding cached record for {eq}: witness failed revalidation")
            del self._records[(eq.k, eq.ell)]
            return None

        if record.status == "exact" and record.value <= n_max:
            result = RadoResult(
                k=eq.k, ell=eq.ell, status="exact", value=record.value, witness=witness
            )
        elif record.value - 1 >= n_max:
            result = RadoResult(
                k=eq.k,
                ell=eq.ell,
                status="lower_bound",
                value=n_max + 1,
                witness=witness.prefix(n_max),
            )
        else:
            logger.debug(f"Cached bound for {eq} is below n_max={n_max}")
            return None
        logger.debug(f"Cache hit for {eq}: {result.describe()}")
        return result

    def put(self, result: RadoResult) -> None:
        """Append a result; budget-exhausted results are not stored.

        Raises:
            CacheError: If the file cannot be written
        """
        if result.status == "budget_exhausted" or result.k is None or result.ell is None:
            return
        record = CacheRecord(
            k=result.k,
            ell=result.ell,
            status=result.status,
            value=result.value,
            witness=result.witness.bits,
            engine_version=self._engine_version,
            timestamp=datetime.now(UTC).isoformat(timespec="seconds"),
        )
        try:
            self._path.parent.mkdir(parents=True, exist_ok=True)
            with open(self._path, "a", encoding="utf-8", newline="\n") as f:
                f.write(_serialize(record) + "\n")
        except OSError as e:
            raise CacheError(f"cannot write cache {self._path}: {e}") from e
        self._records[(record.k, record.ell)] = record

    @staticmethod
    def _revalidate(eq: Equation, record: CacheRecord, witness: Coloring) -> bool:
        if witness.n != record.value - 1:
            return False
        return find_mono_solution(witness, eq) is None

    def _load(self) -> None:
        if not self._path.exists():
            return
        try:
            lines = self._path.read_text(encoding="utf-8").splitlines()
        except OSError as e:
            raise CacheError(f"cannot read cache {self._path}: {e}") from e

        kept = 0
        for line_num, line in enumerate(lines, 1):
            if not line.strip():
                continue
            try:
                record = CacheRecord.model_validate_json(line)
            except ValidationError as e:
                logger.warning(f"Skipping invalid cache line {line_num} in {self._path}: {e}")
                continue
            if record.engine_version != self._engine_version:
                continue
            self._records[(record.k, record.ell)] = record
            kept += 1

        if kept != len(lines) or kept != len(self._records):
            self._compact()

    def _compact(self) -> None:
        ordered = sorted(self._records.values(), key=lambda r: (r.k, r.ell))
        text = "".join(_serialize(r) + "\n" for r in ordered)
        try:
            atomic_write_text(self._path, text)
        except OSError as e:
            raise CacheError(f"cannot compact cache {self._path}: {e}") from e
        logger.info(f"Compacted cache {self._path} to {len(ordered)} records")
