"""CLI application using Typer for verifying universal binary Hermitian lattices."""

import json
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, List, Optional

import typer
from pydantic import ValidationError
from rich.console import Console
from rich.progress import Progress, SpinnerColumn, TextColumn, TimeElapsedColumn
from rich.table import Table

from ..classify.controls import negative_controls as run_negative_controls
from ..classify.driver import verify_classification as run_verification
from ..config.settings import settings
from ..core.catalog import catalog_entries
from ..core.errors import HermitiaError
from ..criteria.certify import certify as run_certify
from ..criteria.certify import check_form
from ..escalate.models import MAX_TREE_RANK, Regime
from ..escalate.tree import default_options, load_or_build_tree
from ..forms.basis import extract_basis
from ..forms.equivalence import distinct_classes
from ..forms.polynomial import format_canonical, format_pretty, parse_form
from ..forms.trace import trace_form as build_trace_form
from ..io.cache import TreeCache
from ..io.lattice_text import parse_form_or_lattice, parse_lattice, resolve_entry
from ..io.paths import resolve_output_dir
from ..io.reports import (
    certification_table,
    check_table,
    controls_table,
    render_classification,
    to_json,
    tree_summary,
    tree_table,
    write_json,
)
from ..representation.enumerate import represented_values, represents as find_witness, truant as find_truant
from ..utils.logging import get_logger

app = typer.Typer(
    name="hermitia",
    help="Verify the classification of universal binary Hermitian forms",
    add_completion=False,
)

console = Console()
# progress goes to stderr so --json output stays clean
err_console = Console(stderr=True)
logger = get_logger(__name__)


@contextmanager
def _input_errors() -> Iterator[None]:
    """Turn invalid input into a red message and exit code 2."""
    try:
        yield
    except (HermitiaError, ValidationError) as exc:
        console.print(f"[red]Error: {exc}[/red]")
        raise typer.Exit(2)


def _echo_json(payload: object) -> None:
    typer.echo(payload if isinstance(payload, str) else json.dumps(payload, indent=2, sort_keys=True))


@contextmanager
def _spinner(description: str) -> Iterator[None]:
    with Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        TimeElapsedColumn(),
        console=err_console,
        transient=True,
    ) as progress:
        progress.add_task(description, total=None)
        yield


@app.command()
def catalog(
    as_json: bool = typer.Option(False, "--json", help="Emit JSON"),
) -> None:
    """List the 25 catalog lattices with their trace forms."""
    rows = []
    for entry in catalog_entries():
        full = build_trace_form(entry.lattice)
        rows.append(
            {
                "label": entry.label,
                "m": entry.m,
                "table": entry.table,
                "trace_form": format_pretty(full),
                "printed": entry.printed,
                "erratum": entry.erratum,
            }
        )
    if as_json:
        _echo_json(rows)
        return
    table = Table(title="Universal Binary Hermitian Lattices")
    table.add_column("Lattice", style="cyan")
    table.add_column("Table", style="magenta")
    table.add_column("Trace form", style="white")
    table.add_column("Printed", style="green")
    for row in rows:
        table.add_row(row["label"], row["table"], row["trace_form"], row["printed"])
    console.print(table)


@app.command("trace-form")
def trace_form(
    lattice: str = typer.Argument(..., help="Catalog label or 'm=<int>; row; row'"),
    canonical: bool = typer.Option(False, "--canonical", help="Print x1..xn coefficients"),
    as_json: bool = typer.Option(False, "--json", help="Emit JSON"),
) -> None:
    """
    Build the quadratic trace form of a Hermitian lattice.

    Examples:
        hermitia trace-form "m=7; 1,0; 0,3"
        hermitia trace-form "Qm23:<1>+[2,w,3]"
    """
    with _input_errors():
        lat = parse_lattice(lattice)
        full = build_trace_form(lat)
        reduced_basis, _ = extract_basis(full)
    printer = format_canonical if canonical else format_pretty
    payload = {
        "label": lat.name,
        "field_m": lat.field.m,
        "trace_form": printer(full),
        "gram2": [list(row) for row in full.gram2],
        "rank": reduced_basis.n,
        "basis_form": printer(reduced_basis),
    }
    if as_json:
        _echo_json(payload)
        return
    console.print(f"[bold]{payload['label']}[/bold] over Q(sqrt(-{lat.field.m}))")
    console.print(f"Trace form: [cyan]{payload['trace_form']}[/cyan]")
    if reduced_basis.n != full.n:
        console.print(f"Rank {reduced_basis.n} basis form: [cyan]{payload['basis_form']}[/cyan]")


@app.command()
def check(
    target: str = typer.Argument(..., help="Polynomial or lattice"),
    criterion: str = typer.Option("290", "--set", "-s", help="Criterion set: 15, 290 or 15h"),
    as_json: bool = typer.Option(False, "--json", help="Emit JSON"),
) -> None:
    """Check that a form represents every value of a criterion set."""
    with _input_errors():
        form, _ = parse_form_or_lattice(target)
        result = check_form(form, criterion)
    if as_json:
        _echo_json(to_json(result))
    else:
        console.print(check_table([result], title=f"{format_pretty(form)}"))
    raise typer.Exit(0 if result.passed else 1)


@app.command()
def certify(
    lattice: str = typer.Argument(..., help="Catalog label or 'm=<int>; row; row'"),
    bound: Optional[int] = typer.Option(None, "--bound", "-b", min=1, help="Empirical sweep bound"),
    as_json: bool = typer.Option(False, "--json", help="Emit JSON"),
) -> None:
    """Route a lattice to a universality certificate and run its checks."""
    with _input_errors():
        lat = parse_lattice(lattice)
        with _spinner(f"Certifying {lat.name}"):
            report = run_certify(lat, bound, entry=resolve_entry(lattice))
    if as_json:
        _echo_json(to_json(report))
    else:
        console.print(certification_table([report]))
        console.print(check_table(report.checks))
        for note in report.notes:
            console.print(f"[dim]{note}[/dim]")
    raise typer.Exit(0 if report.verified else 1)


@app.command()
def truant(
    target: str = typer.Argument(..., help="Polynomial or lattice"),
    cap: Optional[int] = typer.Option(None, "--cap", min=1, help="Largest value searched"),
) -> None:
    """Smallest positive integer the form does not represent."""
    cap = settings.truant_cap if cap is None else cap
    with _input_errors():
        form, _ = parse_form_or_lattice(target)
        found = find_truant(form, cap)
    if found is None:
        console.print(f"[yellow]No truant up to {cap}[/yellow]")
    else:
        console.print(f"Truant: [bold]{found}[/bold]")


@app.command()
def represents(
    form_text: str = typer.Argument(..., metavar="FORM", help="Polynomial"),
    value: int = typer.Argument(..., help="Target value"),
) -> None:
    """Find an integer vector at which the form takes the value."""
    with _input_errors():
        form = parse_form(form_text)
        witness = find_witness(form, value)
    if witness is None:
        console.print(f"[red]{value} is not represented[/red]")
        raise typer.Exit(1)
    console.print(f"{value} = Q{witness.vector}")


@app.command()
def spectrum(
    target: str = typer.Argument(..., help="Polynomial or lattice"),
    bound: int = typer.Option(100, "--bound", "-b", min=0, help="Largest value"),
    as_json: bool = typer.Option(False, "--json", help="Emit JSON"),
) -> None:
    """Values up to a bound that the form represents and misses."""
    with _input_errors():
        form, _ = parse_form_or_lattice(target)
        values = represented_values(form, bound)
    hit = set(values)
    missing = [t for t in range(1, bound + 1) if t not in hit]
    if as_json:
        _echo_json({"form": format_pretty(form), "bound": bound, "represented": values, "missing": missing})
        return
    console.print(f"[bold]{format_pretty(form)}[/bold] up to {bound}")
    console.print(f"Missing: {', '.join(str(t) for t in missing) or 'none'}")


@app.command()
def escalators(
    regime: str = typer.Option("integral", "--regime", "-r", help="classical or integral"),
    max_rank: int = typer.Option(MAX_TREE_RANK, "--max-rank", help="Highest rank to build"),
    use_cache: bool = typer.Option(True, "--cache/--no-cache", help="Use the tree cache"),
    as_json: bool = typer.Option(False, "--json", help="Emit JSON"),
) -> None:
    """Build the escalation tree and report per-rank classes and truants."""
    with _input_errors():
        options = default_options(Regime.parse(regime), max_rank=max_rank)
        with _spinner(f"Building {options.regime.value} escalation tree to rank {options.max_rank}"):
            tree = load_or_build_tree(options, use_cache=use_cache)
    if as_json:
        _echo_json(tree_summary(tree))
        return
    console.print(tree_table(tree))
    for note in tree.diagnostics:
        console.print(f"[yellow]warning:[/yellow] {note}")


@app.command("negative-controls")
def negative_controls(
    cap: Optional[int] = typer.Option(None, "--cap", min=1, help="Truant search cap"),
    as_json: bool = typer.Option(False, "--json", help="Emit JSON"),
) -> None:
    """Exhibit truants of near-miss lattices outside the catalog."""
    with _spinner("Searching truants of near-miss lattices"):
        controls = run_negative_controls(cap)
    if as_json:
        _echo_json([c.model_dump(mode="json") for c in controls])
    else:
        console.print(controls_table(controls))
    raise typer.Exit(1 if any(c.reverified is False for c in controls) else 0)


@app.command("verify-classification")
def verify_classification(
    bound: Optional[int] = typer.Option(None, "--bound", "-b", min=1, help="Empirical sweep bound"),
    as_json: bool = typer.Option(False, "--json/--text", help="JSON or text output"),
    output_dir: Optional[Path] = typer.Option(None, "--output", "-o", help="Report directory (default: timestamped)"),
) -> None:
    """
    Reproduce the full classification: trace-form tables, certification routes,
    escalator claims, duplicate pairs and negative controls.

    Examples:
        hermitia verify-classification --bound 2000 --json
        hermitia verify-classification --output output/run1
    """
    with _input_errors():
        with _spinner("Loading integer-valued escalation tree"):
            tree = load_or_build_tree(default_options(Regime.INTEGRAL))
        with _spinner("Certifying catalog lattices and cross-checks"):
            report = run_verification(bound, tree=tree)
    output_dir = resolve_output_dir("classification", output_dir)
    write_json(report, output_dir / "classification.json")
    if as_json:
        _echo_json(to_json(report))
    else:
        render_classification(report, console)
        console.print(f"\nSaved: {output_dir / 'classification.json'}")
    raise typer.Exit(0 if report.passed else 1)


@app.command()
def classes(
    forms: List[str] = typer.Argument(..., help="Polynomials or lattices"),
    as_json: bool = typer.Option(False, "--json", help="Emit JSON"),
) -> None:
    """
    Group forms into integral equivalence classes.

    Each form is labelled by the first earlier form it is equivalent to.

    Examples:
        hermitia classes "x^2+y^2" "x^2+2y^2" "x^2+2xy+2y^2"
    """
    with _input_errors():
        parsed = [parse_form_or_lattice(text)[0] for text in forms]
        labels = distinct_classes(parsed)
    if as_json:
        _echo_json([{"form": text, "class": forms[k]} for text, k in zip(forms, labels)])
        return
    table = Table(title=f"{len(set(labels))} equivalence classes")
    table.add_column("Form", style="cyan")
    table.add_column("Class of", style="green")
    for text, k in zip(forms, labels):
        table.add_row(text, forms[k])
    console.print(table)


@app.command()
def cache(
    clear: bool = typer.Option(False, "--clear", help="Delete every cached tree"),
    as_json: bool = typer.Option(False, "--json", help="Emit JSON"),
) -> None:
    """List the escalation trees in the SQLite cache, or clear it."""
    with TreeCache(settings.cache_dir) as store:
        if clear:
            store.clear()
            console.print(f"Cleared {store.db_path}")
            return
        trees = store.list_trees()
    if as_json:
        _echo_json(trees)
        return
    table = Table(title=f"Cached escalation trees ({settings.cache_dir})")
    table.add_column("Regime", style="cyan")
    table.add_column("Max rank", justify="right")
    table.add_column("Nodes", justify="right")
    table.add_column("Created", style="dim")
    for row in trees:
        table.add_row(row["regime"], str(row["max_rank"]), str(row["node_count"]), row["created_at"])
    console.print(table)


@app.command()
def version() -> None:
    """Show version information."""
    from .. import __version__
    console.print(f"hermitia v{__version__}")


if __name__ == "__main__":
    app()
