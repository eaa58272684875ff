"""Progress tracking for long table and verify runs.

Services report progress through the ProgressTracker protocol so they stay
independent of any particular progress bar implementation.
"""

import logging
from typing import Any, Protocol

from rich.console import Console
from rich.progress import (
    BarColumn,
    MofNCompleteColumn,
    Progress,
    SpinnerColumn,
    TaskID,
    TextColumn,
)

logger = logging.getLogger(__name__)


class ProgressTracker(Protocol):
    """Protocol for progress tracking implementations."""

    def start_stage(self, stage: str, description: str) -> None:
        """Start a named stage (table, verify, fvr)."""
        ...

    def end_stage(self, stage: str) -> None:
        """End the current stage."""
        ...

    def start_cells(self, total: int) -> None:
        """Start tracking a batch of independent computations."""
        ...

    def update_cell(self, label: str, current: int, total: int) -> None:
        """Report that the computation ``label`` is running as item ``current``."""
        ...

    def end_cells(self) -> None:
        """End batch tracking."""
        ...

    def log_warning(self, message: str) -> None:
        """Log a warning message."""
        ...

    def show_summary(self, summary: dict[str, Any]) -> None:
        """Display final summary statistics."""
        ...


class NoOpProgressTracker:
    """Progress tracker that does nothing.

    Used by tests and library callers.
    """

    def start_stage(self, stage: str, description: str) -> None:
        """Start a stage (no-op)."""

    def end_stage(self, stage: str) -> None:
        """End a stage (no-op)."""

    def start_cells(self, total: int) -> None:
        """Start batch tracking (no-op)."""

    def update_cell(self, label: str, current: int, total: int) -> None:
        """Update batch progress (no-op)."""

    def end_cells(self) -> None:
        """End batch tracking (no-op)."""

    def log_warning(self, message: str) -> None:
        """Log warning message (no-op)."""

    def show_summary(self, summary: dict[str, Any]) -> None:
        """Show summary (no-op)."""


class RichProgressTracker:
    """Progress tracker drawing a Rich spinner and bar."""

    def __init__(self, console: Console | None = None):
        """Initialize the Rich progress tracker.

        Args:
            console: Console to draw on; pass a stderr console when stdout carries data
        """
        self.console = console or Console(stderr=True)
        self._progress: Progress | None = None
        self._task_id: TaskID | None = None
        self.current_stage: str | None = None

    def start_stage(self, stage: str, description: str) -> None:
        """Start a named stage."""
        self.current_stage = stage
        self.console.print(f"[bold cyan]═══ {description} ═══[/bold cyan]")

    def end_stage(self, stage: str) -> None:
        """End the current stage."""
        if stage == self.current_stage:
            self.current_stage = None

    def start_cells(self, total: int) -> None:
        """Start a progress bar over ``total`` computations."""
        if self._progress is None:
            self._progress = Progress(
                SpinnerColumn(),
                TextColumn("[bold blue]{task.description}"),
                BarColumn(bar_width=40),
                MofNCompleteColumn(),
                console=self.console,
                transient=True,
            )
            self._progress.start()
        self._task_id = self._progress.add_task(f"Computing {total} values", total=total)

    def update_cell(self, label: str, current: int, total: int) -> None:
        """Advance the bar to ``current - 1`` done with ``label`` running."""
        if self._progress and self._task_id is not None:
            self._progress.update(
                self._task_id, completed=current - 1, total=total, description=label
            )

    def end_cells(self) -> None:
        """Stop the progress bar."""
        if self._progress is not None:
            self._progress.stop()
        self._progress = None
        self._task_id = None

    def log_warning(self, message: str) -> None:
        """Log a warning message."""
        self.console.print(f"[yellow]⚠ {message}[/yellow]")
        logger.warning(message)

    def show_summary(self, summary: dict[str, Any]) -> None:
        """Display final counts."""
        self.console.print("[bold cyan]═══ Summary ═══[/bold cyan]")
        for key, value in summary.items():
            self.console.print(f"  {key}: {value}")
