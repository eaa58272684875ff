"""Configure tests."""

import os

import pytest

from rado_numbers.domain.models import Coloring, Equation, SearchBudget
from rado_numbers.domain.services.backtrack_service import ENGINE_VERSION, BacktrackService
from rado_numbers.domain.services.fvr_service import FvrService
from rado_numbers.infrastructure.jsonl_result_cache import JsonlResultCache
from rado_numbers.orchestration.rado_orchestrator import RadoOrchestrator

# Top-left block of the published RR(x+y+kz=lw) table, rows k=1..8, columns l=1..8.
PUBLISHED_TABLE = [
    [11, 4, 1, 4, 9, 4, 10, 12],
    [19, 5, 4, 1, 4, 3, 4, 5],
    [29, 8, 5, 4, 1, 4, 3, 4],
    [41, 9, 4, 4, 5, 1, 4, 3],
    [55, 15, 8, 6, 8, 5, 1, 4],
    [71, 17, 9, 5, 6, 6, 5, 1],
    [89, 23, 10, 7, 6, 7, 11, 5],
    [109, 25, 15, 8, 6, 9, 8, 8],
]

# Column l=3 of the same table for k=5..23.
PUBLISHED_ELL3 = {
    5: 8, 6: 9, 7: 10, 8: 15, 9: 15, 10: 16, 11: 22, 12: 24, 13: 26, 14: 34,
    15: 36, 16: 38, 17: 45, 18: 47, 19: 49, 20: 60, 21: 63, 22: 65, 23: 78,
}

# Cells (k, k+5) of the same table where E(k, 5) leaves the default pattern.
PUBLISHED_OFFSET_FIVE = {16: 8, 17: 8, 18: 8, 21: 9, 22: 10, 23: 9}

# Diagonal x+y+mz=mw for m=1..12.
PUBLISHED_DIAGONAL = [11, 5, 5, 4, 8, 6, 11, 8, 14, 10, 17, 12]


def pytest_addoption(parser):
    """Add the --run-slow flag."""
    parser.addoption(
        "--run-slow", action="store_true", default=False, help="run long acceptance checks"
    )


def pytest_collection_modifyitems(config, items):
    """Skip slow tests unless --run-slow is given."""
    if config.getoption("--run-slow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


def coloring(bits: str) -> Coloring:
    """Shorthand for Coloring(bits=...)."""
    return Coloring(bits=bits)


def eq(k: int, ell: int) -> Equation:
    """Shorthand for Equation(k=..., ell=...)."""
    return Equation(k=k, ell=ell)


@pytest.fixture
def isolated_env(monkeypatch, tmp_path):
    """Clear RADO_* variables and run from an empty directory (no .env)."""
    for name in list(os.environ):
        if name.upper().startswith("RADO_"):
            monkeypatch.delenv(name)
    monkeypatch.chdir(tmp_path)


@pytest.fixture
def solver():
    """Single-process search service."""
    return BacktrackService()


@pytest.fixture
def budget():
    """Default search budget used by fast tests."""
    return SearchBudget(n_max=60)


@pytest.fixture
def fvr_service():
    """FVR service."""
    return FvrService()


@pytest.fixture
def cache_path(tmp_path):
    """Path for a fresh JSONL cache."""
    return tmp_path / "cache" / "results.jsonl"


@pytest.fixture
def cached_orchestrator(cache_path):
    """Orchestrator writing to a temporary cache."""
    return RadoOrchestrator(
        solver=BacktrackService(),
        fvr=FvrService(),
        cache=JsonlResultCache(cache_path, ENGINE_VERSION),
    )
