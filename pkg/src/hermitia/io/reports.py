"""JSON report files and rich tables for human-readable output."""

import json
from pathlib import Path
from typing import Any, Dict, Iterable

from pydantic import BaseModel
from rich.console import Console
from rich.table import Table

from ..classify.controls import NegativeControl
from ..classify.driver import ClassificationReport
from ..criteria.certify import CertificationReport, CriterionCheck
from ..escalate.models import EscalationTree
from ..utils.logging import get_logger

logger = get_logger(__name__)


def to_json(model: BaseModel) -> str:
    """Deterministic JSON: aliases (``pass``), sorted keys, two-space indent."""
    payload = model.model_dump(mode="json", by_alias=True)
    return json.dumps(payload, indent=2, sort_keys=True)


def write_json(model: BaseModel, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(to_json(model) + "\n", encoding="utf-8")
    logger.info(f"Wrote {path}")
    return path


def tree_summary(tree: EscalationTree) -> Dict[str, Any]:
    graph = tree.to_graph()
    return {
        "regime": tree.options.regime.value,
        "counts": {str(rank): count for rank, count in tree.counts().items()},
        "edges": graph.number_of_edges(),
        "levels": [
            [
                {"key": n.key, "form": str(n.form), "truant": n.truant, "parents": list(n.parents)}
                for n in nodes
            ]
            for nodes in tree.levels
        ],
        "diagnostics": list(tree.diagnostics),
    }


def _mark(ok: bool) -> str:
    return "[green]✓[/green]" if ok else "[red]✗[/red]"


def check_table(checks: Iterable[CriterionCheck], title: str = "Criterion Checks") -> Table:
    table = Table(title=title)
    table.add_column("Set", style="cyan")
    table.add_column("Pass", justify="center")
    table.add_column("First failure", style="yellow", justify="right")
    table.add_column("Witnesses", style="white", justify="right")
    for c in checks:
        table.add_row(c.set, _mark(c.passed), str(c.first_failure or "-"), str(len(c.witnesses)))
    return table


def certification_table(reports: Iterable[CertificationReport]) -> Table:
    table = Table(title="Certifications")
    table.add_column("Lattice", style="cyan")
    table.add_column("Trace form", style="white")
    table.add_column("Route", style="magenta")
    table.add_column("Escalator", justify="center")
    table.add_column("Match", style="green")
    table.add_column("Verified", justify="center")
    for r in reports:
        table.add_row(
            r.label,
            r.trace_form,
            r.route.value,
            "?" if r.escalator is None else ("yes" if r.escalator else "no"),
            r.match_verdict.value if r.match_verdict else "-",
            _mark(r.verified),
        )
    return table


def controls_table(controls: Iterable[NegativeControl]) -> Table:
    table = Table(title="Negative Controls")
    table.add_column("Lattice", style="cyan")
    table.add_column("Trace form", style="white")
    table.add_column("Truant", style="yellow", justify="right")
    table.add_column("Re-verified", justify="center")
    for c in controls:
        table.add_row(
            c.label,
            c.trace_form,
            str(c.truant) if c.truant is not None else f"none <= {c.cap}",
            "-" if c.reverified is None else _mark(c.reverified),
        )
    return table


def tree_table(tree: EscalationTree) -> Table:
    table = Table(title=f"Escalators ({tree.options.regime.value})")
    table.add_column("Rank", style="cyan", justify="right")
    table.add_column("Classes", style="green", justify="right")
    table.add_column("Truants", style="yellow")
    for rank, count in tree.counts().items():
        truants = sorted(set(tree.truants(rank)))
        table.add_row(str(rank), str(count), ", ".join(str(t) for t in truants) or "-")
    return table


def render_classification(report: ClassificationReport, console: Console) -> None:
    console.print(certification_table(report.certifications))

    tables = Table(title="Table Reproduction")
    tables.add_column("Table", style="cyan")
    tables.add_column("Lattice", style="white")
    tables.add_column("Printed", style="white")
    tables.add_column("Verdict", style="magenta")
    tables.add_column("Erratum", justify="center")
    for name, rows in report.tables.items():
        for m in rows:
            tables.add_row(
                name,
                m.label,
                m.printed,
                m.verdict.value if m.verdict else "-",
                "yes" if m.erratum_applied else "",
            )
    console.print(tables)

    for d in report.duplicates:
        console.print(f"{_mark(d.equivalent)} duplicate pair {d.labels[0]} ~ {d.labels[1]}")
    for f in report.escalator_findings:
        status = "escalator" if f.computed else "not an escalator"
        console.print(f"{_mark(f.agrees)} {f.form}: {status}")
    console.print(controls_table(report.negative_controls))

    routes = ", ".join(f"{k}: {v}" for k, v in report.route_counts.items())
    console.print(f"[bold]Routes[/bold] {routes}")
    for w in report.warnings:
        console.print(f"[yellow]warning:[/yellow] {w}")
    verdict = "[bold green]PASS[/bold green]" if report.passed else "[bold red]FAIL[/bold red]"
    console.print(f"Certified {report.certified}/{len(report.certifications)}; overall {verdict}")
