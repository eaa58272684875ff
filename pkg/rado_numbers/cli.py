"""Command-line interface for Rado number computations.

Usage:
    rado compute -k 1 -l 2
    rado table --k-max 8 --ell-max 8 --format csv
    rado verify --theorem 8 --k 1..14
    rado fvr --j 3 --n-max 10
    rado burr-loo --j 4
"""

import logging
from enum import Enum
from math import comb
from pathlib import Path

import click
import typer
from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler
from typer.core import TyperGroup

from rado_numbers.config.settings import RadoSettings
from rado_numbers.domain.models import Equation, RadoResult, SearchBudget
from rado_numbers.domain.services.fvr_service import param_sets
from rado_numbers.domain.services.verification_service import THEOREMS
from rado_numbers.exceptions import RadoError
from rado_numbers.infrastructure import table_io
from rado_numbers.progress import RichProgressTracker
from rado_numbers.utils.file_ops import atomic_write_text

EX_USAGE = 64
EX_IOERR = 74
EX_CONFIG = 78


class RadoGroup(TyperGroup):
    """Command group reporting every usage error with exit code 64."""

    def invoke(self, ctx: click.Context):
        """Invoke the selected command, re-coding usage errors."""
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = EX_USAGE
            raise


app = typer.Typer(
    cls=RadoGroup,
    help="Rado numbers - compute and verify RR(x+y+kz=lw)",
    no_args_is_help=True,
)
console = Console(stderr=True)

# Diagnostics go to stderr so tables and results on stdout stay clean.
logging.basicConfig(
    level=logging.WARNING,
    format="%(message)s",
    handlers=[RichHandler(console=console, rich_tracebacks=True, show_path=False)],
)


class TableFormat(str, Enum):
    """Output formats of the table command."""

    csv = "csv"
    json = "json"


class EngineChoice(str, Enum):
    """How family theorems are verified."""

    search = "search"
    fvr = "fvr"


@app.callback()
def configure(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Enable debug logging"),
):
    """Rado numbers of x+y+kz=lw and x+y=jw."""
    if verbose:
        logging.getLogger().setLevel(logging.DEBUG)


def _load_settings(**overrides) -> RadoSettings:
    """Build settings from the environment with CLI overrides."""
    settings_kwargs = {key: value for key, value in overrides.items() if value is not None}
    try:
        settings = RadoSettings(**settings_kwargs)
    except ValidationError as e:
        console.print("[red]Configuration Error:[/red]")
        for error in e.errors():
            field = " → ".join(str(x) for x in error["loc"])
            console.print(f"  {field}: {error['msg']}")
        console.print("\n[yellow]Tip:[/yellow] Check RADO_* variables in the environment or .env")
        raise typer.Exit(EX_CONFIG) from e

    root = logging.getLogger()
    if root.level != logging.DEBUG:
        root.setLevel(settings.log_level_number)
    return settings


def _create_orchestrator(settings: RadoSettings):
    from rado_numbers.orchestration.rado_orchestrator import RadoOrchestrator

    try:
        return RadoOrchestrator.create(settings)
    except RadoError as e:
        console.print(f"[red]Error: {e}[/red]")
        raise typer.Exit(EX_IOERR) from e


def parse_range(text: str) -> list[int]:
    """Parse ``a..b`` (inclusive) or a single integer into a list of positive ints.

    Raises:
        typer.BadParameter: On malformed or empty ranges
    """
    try:
        if ".." in text:
            low, high = (int(part) for part in text.split("..", 1))
        else:
            low = high = int(text)
    except ValueError as e:
        raise typer.BadParameter(f"expected N or A..B, got {text!r}") from e
    if low < 1 or high < low:
        raise typer.BadParameter(f"range {text!r} must satisfy 1 <= A <= B")
    return list(range(low, high + 1))


def _print_result(result: RadoResult, witness: bool) -> None:
    typer.echo(result.describe())
    if witness:
        typer.echo(f"witness: {result.witness.bits}")


@app.command()
def compute(
    k: int = typer.Option(..., "-k", "--k", min=1, help="Coefficient of z"),
    ell: int = typer.Option(..., "-l", "--ell", min=1, help="Coefficient of w"),
    n_max: int = typer.Option(None, "--n-max", min=1, help="Largest interval to search"),
    node_limit: int = typer.Option(None, "--node-limit", min=1, help="Search node cap"),
    cache: Path = typer.Option(None, "--cache", help="JSONL result cache"),
    workers: int = typer.Option(None, "--workers", min=1, help="Worker processes"),
    witness: bool = typer.Option(True, "--witness/--no-witness", help="Print witness coloring"),
):
    """Compute RR(x+y+kz=lw).

    Exits 0 for an exact value and 2 for a lower bound or exhausted budget.

    Examples:
        # Exact value with witness
        rado compute -k 1 -l 2

        # Budget-limited search gives a lower bound
        rado compute -k 1 -l 5 --n-max 8
    """
    settings = _load_settings(
        n_max=n_max, node_limit=node_limit, cache_path=cache, workers=workers
    )
    orchestrator = _create_orchestrator(settings)
    try:
        result = orchestrator.compute(
            Equation(k=k, ell=ell),
            SearchBudget(n_max=settings.n_max, node_limit=settings.node_limit),
        )
    except RadoError as e:
        console.print(f"[red]Error: {e}[/red]")
        raise typer.Exit(1) from e
    _print_result(result, witness)
    if not result.is_exact:
        raise typer.Exit(2)


@app.command()
def table(
    k_max: int = typer.Option(..., "--k-max", min=1, help="Rows k = 1..k_max"),
    ell_max: int = typer.Option(..., "--ell-max", min=1, help="Columns l = 1..ell_max"),
    n_max: int = typer.Option(None, "--n-max", min=1, help="Largest interval to search"),
    node_limit: int = typer.Option(None, "--node-limit", min=1, help="Search node cap"),
    output_format: TableFormat = typer.Option(TableFormat.csv, "--format", help="csv or json"),
    output: Path = typer.Option(None, "--output", "-o", help="Write to file instead of stdout"),
    cache: Path = typer.Option(None, "--cache", help="JSONL result cache"),
    workers: int = typer.Option(None, "--workers", min=1, help="Worker processes"),
):
    """Generate a table of RR(x+y+kz=lw), rows k and columns l.

    Examples:
        # Reproduce the top-left 8x8 block as CSV
        rado table --k-max 8 --ell-max 8

        # JSON with witnesses, cached and written to a file
        rado table --k-max 4 --ell-max 4 --format json --cache rr.jsonl -o rr.json
    """
    settings = _load_settings(
        n_max=n_max, node_limit=node_limit, cache_path=cache, workers=workers
    )
    orchestrator = _create_orchestrator(settings)
    budget = SearchBudget(n_max=settings.n_max, node_limit=settings.node_limit)
    try:
        cells = orchestrator.table(k_max, ell_max, budget, RichProgressTracker(console=console))
    except RadoError as e:
        console.print(f"[red]Error: {e}[/red]")
        raise typer.Exit(1) from e

    if output_format is TableFormat.json:
        text = table_io.to_json(cells)
    else:
        text = table_io.to_csv(cells)
    if output is None:
        typer.echo(text, nl=False)
        return
    try:
        atomic_write_text(output, text)
    except OSError as e:
        console.print(f"[red]Cannot write {output}: {e}[/red]")
        raise typer.Exit(EX_IOERR) from e
    console.print(f"[green]✓[/green] Wrote {len(cells)} cells to {output}")


@app.command()
def verify(
    theorem: str = typer.Option(..., "--theorem", "-t", help=f"One of {', '.join(THEOREMS)}"),
    k_range: str = typer.Option(None, "--k", "-k", help="Range of k, e.g. 1..14"),
    m_range: str = typer.Option(None, "--m", help="Range of m for theorem 3"),
    j: int = typer.Option(4, "--j", min=4, help="Offset for theorem 2"),
    engine: EngineChoice = typer.Option(EngineChoice.search, "--engine", help="search or fvr"),
    n_max: int = typer.Option(None, "--n-max", min=1, help="Largest interval to search"),
    cache: Path = typer.Option(None, "--cache", help="JSONL result cache"),
    workers: int = typer.Option(None, "--workers", min=1, help="Worker processes"),
):
    """Compare a theorem's values with computed Rado numbers.

    Exits 0 when every line passes, 1 on any FAIL, 3 when some lines were
    skipped for lack of budget.

    Examples:
        rado verify --theorem 8 --k 1..14
        rado verify --theorem 3 --m 1..12
        rado verify --theorem 6 --k 1..60 --engine fvr
    """
    if theorem not in THEOREMS:
        raise typer.BadParameter(f"expected one of {', '.join(THEOREMS)}", param_hint="--theorem")
    if engine is EngineChoice.fvr and theorem not in ("2", "4", "5", "6", "7"):
        raise typer.BadParameter(
            f"theorem {theorem} has no fvr verification", param_hint="--engine"
        )
    range_text = m_range or k_range
    if range_text is None:
        raise typer.BadParameter("a range is required", param_hint="--k/--m")
    ks = parse_range(range_text)

    settings = _load_settings(cache_path=cache, workers=workers)
    orchestrator = _create_orchestrator(settings)
    budget = SearchBudget(n_max=n_max or settings.verify_n_max, node_limit=settings.node_limit)
    try:
        report = orchestrator.verify(
            theorem,
            ks,
            budget,
            engine=engine.value,
            j=j,
            progress=RichProgressTracker(console=console),
        )
    except RadoError as e:
        console.print(f"[red]Error: {e}[/red]")
        raise typer.Exit(1) from e

    for line in report.lines:
        typer.echo(line.render())
    typer.echo(
        f"theorem {theorem}: {report.count('PASS')} PASS, "
        f"{report.count('FAIL')} FAIL, {report.count('SKIP')} SKIP"
    )
    if report.exit_code:
        raise typer.Exit(report.exit_code)


@app.command()
def fvr(
    j: int = typer.Option(..., "--j", min=1, help="Offset j of E(k, j)"),
    n_max: int = typer.Option(30, "--n-max", min=1, help="Largest interval to examine"),
    print_sets: bool = typer.Option(False, "--print-sets", help="Render parametric sets"),
):
    """Resolve RR(E(k, j)) for all k by parametric analysis.

    Examples:
        rado fvr --j 3 --n-max 10
        rado fvr --j 1 --n-max 5 --print-sets
    """
    orchestrator = _create_orchestrator(_load_settings())
    resolution = orchestrator.resolve(j, n_max)

    for level in resolution.levels:
        if not level.reports:
            typer.echo(f"n={level.n}: none")
            continue
        typer.echo(f"n={level.n}: {', '.join(c.bits for c in level.colorings)}")
        for report in level.reports:
            typer.echo(f"  {report.describe()}")
            if print_sets:
                for line in param_sets(report.coloring, j).render():
                    typer.echo(f"    {line}")
        if level.resolved:
            typer.echo(f"  resolved at {level.n}: k∈{{{','.join(map(str, level.resolved))}}}")
    typer.echo(resolution.describe())


@app.command("burr-loo")
def burr_loo(
    j: int = typer.Option(..., "--j", min=1, help="Coefficient of w in x+y=jw"),
    n_max: int = typer.Option(None, "--n-max", min=1, help="Largest interval to search"),
    node_limit: int = typer.Option(None, "--node-limit", min=1, help="Search node cap"),
):
    """Compute RR(x+y=jw) and compare with C(j+1,2) for j >= 4.

    Examples:
        rado burr-loo --j 4
    """
    settings = _load_settings(n_max=n_max, node_limit=node_limit)
    orchestrator = _create_orchestrator(settings)
    result = orchestrator.burr_loo(
        j, SearchBudget(n_max=settings.n_max, node_limit=settings.node_limit)
    )
    if not result.is_exact:
        typer.echo(result.describe())
        raise typer.Exit(2)
    if j < 4:
        typer.echo(result.describe())
        return
    expected = comb(j + 1, 2)
    if result.value == expected:
        typer.echo(f"{result.describe()} (= C({j + 1},2): PASS)")
        return
    typer.echo(f"{result.describe()} (!= C({j + 1},2)={expected}: FAIL)")
    raise typer.Exit(1)


def main():
    """Entry point."""
    app()


if __name__ == "__main__":
    main()
