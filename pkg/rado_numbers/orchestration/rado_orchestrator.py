"""Orchestrator for cached searches, tables and verification runs.

Single Responsibility: wire the search, FVR and verification services to
the result cache and progress reporting.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from rado_numbers.config.settings import RadoSettings
from rado_numbers.domain.models import (
    Equation,
    RadoResult,
    ResolutionTable,
    SearchBudget,
    TableCell,
)
from rado_numbers.domain.services.backtrack_service import ENGINE_VERSION, BacktrackService
from rado_numbers.domain.services.fvr_service import FvrService
from rado_numbers.domain.services.verification_service import (
    Engine,
    VerificationReport,
    VerificationService,
)
from rado_numbers.infrastructure.jsonl_result_cache import JsonlResultCache
from rado_numbers.progress import NoOpProgressTracker, ProgressTracker

logger = logging.getLogger(__name__)


def _solve_cell(args: tuple[int, int, SearchBudget]) -> RadoResult:
    k, ell, budget = args
    return BacktrackService().rado_number(Equation(k=k, ell=ell), budget)


class RadoOrchestrator:
    """Coordinates searches with caching.

    Cells of a table are independent; with ``workers > 1`` uncached cells are
    spread over a process pool while the cache is written only here.
    """

    def __init__(
        self,
        solver: BacktrackService,
        fvr: FvrService,
        cache: JsonlResultCache | None = None,
        workers: int = 1,
    ):
        """Initialize orchestrator.

        Args:
            solver: Backtracking search service
            fvr: Parametric resolution service
            cache: Optional persistent result cache
            workers: Process pool size for table cells
        """
        self._solver = solver
        self._fvr = fvr
        self._cache = cache
        self._workers = workers

    @classmethod
    def create(cls, settings: RadoSettings) -> "RadoOrchestrator":
        """Factory method building services from settings.

        Args:
            settings: Validated runtime settings

        Returns:
            Configured RadoOrchestrator instance
        """
        cache = None
        if settings.cache_path is not None:
            cache = JsonlResultCache(Path(settings.cache_path), ENGINE_VERSION)
            logger.info(f"Using result cache at: {settings.cache_path} ({len(cache)} records)")
        solver = BacktrackService(workers=settings.workers, split_depth=settings.split_depth)
        return cls(solver=solver, fvr=FvrService(), cache=cache, workers=settings.workers)

    def compute(self, eq: Equation, budget: SearchBudget) -> RadoResult:
        """Return RR for eq, from the cache when possible."""
        if self._cache is not None and (cached := self._cache.get(eq, budget.n_max)):
            return cached
        result = self._solver.rado_number(eq, budget)
        self._store(result)
        return result

    def burr_loo(self, j: int, budget: SearchBudget) -> RadoResult:
        """Return RR(x + y = j*w)."""
        return self._solver.burr_loo_number(j, budget)

    def resolve(self, j: int, n_max: int) -> ResolutionTable:
        """Resolve RR(E(k, j)) for all k."""
        return self._fvr.resolve_all_k(j, n_max)

    def table(
        self,
        k_max: int,
        ell_max: int,
        budget: SearchBudget,
        progress: ProgressTracker | None = None,
    ) -> list[TableCell]:
        """Compute the k_max by ell_max table in row-major order."""
        progress = progress or NoOpProgressTracker()
        keys = [(k, ell) for k in range(1, k_max + 1) for ell in range(1, ell_max + 1)]
        results: dict[tuple[int, int], RadoResult] = {}
        pending: list[tuple[int, int]] = []
        for k, ell in keys:
            cached = self._cache.get(Equation(k=k, ell=ell), budget.n_max) if self._cache else None
            if cached is not None:
                results[(k, ell)] = cached
            else:
                pending.append((k, ell))
        logger.debug(f"Table {k_max}x{ell_max}: {len(results)} cached, {len(pending)} to compute")

        progress.start_stage("table", f"RR table {k_max}x{ell_max}")
        progress.start_cells(len(pending))
        if self._workers > 1 and budget.node_limit is None and len(pending) > 1:
            with ProcessPoolExecutor(max_workers=self._workers) as executor:
                jobs = [(k, ell, budget) for k, ell in pending]
                for i, (key, result) in enumerate(
                    zip(pending, executor.map(_solve_cell, jobs), strict=True), start=1
                ):
                    progress.update_cell(f"k={key[0]} l={key[1]}", i, len(pending))
                    results[key] = result
                    self._store(result)
                    logger.info(f"Cell k={key[0]}, ell={key[1]}: {result.describe()}")
        else:
            for i, (k, ell) in enumerate(pending, start=1):
                progress.update_cell(f"k={k} l={ell}", i, len(pending))
                result = self._solver.rado_number(Equation(k=k, ell=ell), budget)
                results[(k, ell)] = result
                self._store(result)
                logger.info(f"Cell k={k}, ell={ell}: {result.describe()}")
        progress.end_cells()

        cells = [TableCell.from_result(results[key]) for key in keys]
        for cell in cells:
            if cell.status == "budget_exhausted":
                progress.log_warning(
                    f"k={cell.k} l={cell.ell}: node limit reached, RR >= {cell.value}"
                )
        progress.show_summary(
            {
                "cells": len(cells),
                "exact": sum(1 for c in cells if not c.at_least),
                "lower bounds": sum(1 for c in cells if c.at_least),
                "from cache": len(keys) - len(pending),
            }
        )
        progress.end_stage("table")
        return cells

    def verify(
        self,
        theorem: str,
        ks: list[int],
        budget: SearchBudget,
        engine: Engine = "search",
        j: int = 4,
        progress: ProgressTracker | None = None,
    ) -> VerificationReport:
        """Verify a theorem with cached searches."""
        service = VerificationService(solve=self.compute, fvr=self._fvr)
        return service.verify(theorem, ks, budget, engine=engine, j=j, progress=progress)

    def _store(self, result: RadoResult) -> None:
        if self._cache is not None:
            self._cache.put(result)
