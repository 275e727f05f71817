"""End-to-end verification of the catalog of universal binary Hermitian lattices."""

from collections import Counter
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, computed_field

from ..config.settings import settings
from ..core.catalog import catalog_entries, duplicate_pairs, escalator_claims, get_entry
from ..core.errors import FormError
from ..criteria.certify import CertificationReport, Route, certify
from ..escalate.models import EscalationTree, Regime
from ..escalate.tree import default_options, find_escalator, load_or_build_tree
from ..forms.basis import extract_basis
from ..forms.equivalence import MatchVerdict, is_equivalent
from ..forms.polynomial import parse_form
from ..forms.trace import trace_form
from ..utils.logging import get_logger
from ..utils.parallel import parallel_map
from .controls import NegativeControl, negative_controls

logger = get_logger(__name__)

TABLE_SIZES = {"diagonal": 9, "nondiagonal": 8, "nonfree": 8}


class TableMatch(BaseModel):
    label: str
    table: str
    printed: str
    matched_form: Optional[str]
    computed_form: str
    verdict: Optional[MatchVerdict]
    erratum_applied: bool
    passed: bool


class DuplicateFinding(BaseModel):
    labels: Tuple[str, str]
    equivalent: bool


class EscalatorFinding(BaseModel):
    form: str
    claimed: bool
    computed: bool

    @computed_field  # type: ignore[misc]
    @property
    def agrees(self) -> bool:
        return self.claimed == self.computed


class ClassificationReport(BaseModel):
    """Everything ``verify-classification`` checks, in catalog order."""

    empirical_bound: int
    certifications: List[CertificationReport]
    tables: Dict[str, List[TableMatch]]
    duplicates: List[DuplicateFinding]
    escalator_findings: List[EscalatorFinding]
    s15h_consistent: bool
    negative_controls: List[NegativeControl]
    route_counts: Dict[str, int]
    warnings: List[str] = Field(default_factory=list)
    passed: bool

    @property
    def certified(self) -> int:
        return sum(1 for r in self.certifications if r.verified)


def _table_passed(table: str, verdict: Optional[MatchVerdict]) -> bool:
    # A non-free presentation fixes the form only up to equivalence
    if table == "nonfree":
        return verdict in (MatchVerdict.IDENTICAL, MatchVerdict.EQUIVALENT)
    return verdict is MatchVerdict.IDENTICAL


# set once per worker process by _install_tree
_WORKER_TREE: Optional[EscalationTree] = None


def _install_tree(tree: EscalationTree) -> None:
    global _WORKER_TREE
    _WORKER_TREE = tree


def _certify_job(args: Tuple[str, int]) -> CertificationReport:
    label, bound = args
    entry = get_entry(label)
    return certify(entry.lattice, bound, entry=entry, tree=_WORKER_TREE)


def _duplicates() -> List[DuplicateFinding]:
    out = []
    for first, second in duplicate_pairs():
        a, _ = extract_basis(trace_form(get_entry(first).lattice))
        b, _ = extract_basis(trace_form(get_entry(second).lattice))
        out.append(DuplicateFinding(labels=(first, second), equivalent=is_equivalent(a, b) is not None))
    return out


def _escalator_findings(tree: EscalationTree) -> List[EscalatorFinding]:
    claims = escalator_claims()
    out = []
    for claimed, forms in ((True, claims["escalators"]), (False, claims["non_escalators"])):
        for text in forms:
            computed = find_escalator(tree, parse_form(text, n=4)) is not None
            out.append(EscalatorFinding(form=text, claimed=claimed, computed=computed))
    return out


def verify_classification(
    empirical_bound: Optional[int] = None,
    workers: Optional[int] = None,
    tree: Optional[EscalationTree] = None,
) -> ClassificationReport:
    """
    Reproduce the trace-form tables, certify every catalog lattice and cross-check
    the escalator claims, duplicate pairs and negative controls.

    Failures are report content; nothing here raises on a failed check.
    """
    bound = settings.empirical_bound if empirical_bound is None else empirical_bound
    if bound < 1:
        raise FormError(f"empirical bound must be positive, got {bound}")
    entries = catalog_entries()
    if tree is None:
        tree = load_or_build_tree(default_options(Regime.INTEGRAL), workers=workers)

    logger.info(f"Certifying {len(entries)} catalog lattices")
    reports = parallel_map(
        _certify_job,
        [(e.label, bound) for e in entries],
        workers=workers,
        initializer=_install_tree,
        initargs=(tree,),
    )

    warnings: List[str] = []
    tables: Dict[str, List[TableMatch]] = {name: [] for name in TABLE_SIZES}
    for entry, report in zip(entries, reports):
        tables[entry.table].append(
            TableMatch(
                label=entry.label,
                table=entry.table,
                printed=entry.printed,
                matched_form=report.matched_paper_form,
                computed_form=report.quadratic_form if entry.table == "nonfree" else report.trace_form,
                verdict=report.match_verdict,
                erratum_applied=report.erratum_applied,
                passed=_table_passed(entry.table, report.match_verdict),
            )
        )
        if report.erratum_applied:
            warnings.append(f"{entry.label}: printed form {entry.printed} corrected to {entry.erratum}")
        if not report.verified:
            warnings.append(f"{entry.label}: {report.route.value} checks failed")
    for name, size in TABLE_SIZES.items():
        if len(tables[name]) != size:
            warnings.append(f"table {name} has {len(tables[name])} entries, expected {size}")

    duplicates = _duplicates()
    findings = _escalator_findings(tree)
    for f in findings:
        if not f.agrees:
            warnings.append(
                f"escalator status of {f.form}: computed {f.computed}, published {f.claimed}"
            )

    s15h = [r.label for r in reports if not r.check("S15H").passed]
    if s15h:
        warnings.append(f"S15H not represented by: {', '.join(s15h)}")

    controls = negative_controls()

    route_counts = Counter(r.route.value for r in reports)
    passed = (
        all(r.verified for r in reports)
        and all(m.passed for rows in tables.values() for m in rows)
        and all(len(tables[name]) == size for name, size in TABLE_SIZES.items())
        and all(d.equivalent for d in duplicates)
        and not s15h
        and all(c.reverified is not False for c in controls)
    )
    for w in warnings:
        logger.warning(w)
    # already logged when the tree was built
    warnings.extend(tree.diagnostics)
    logger.info(f"Classification {'passed' if passed else 'FAILED'}: {dict(route_counts)}")

    return ClassificationReport(
        empirical_bound=bound,
        certifications=reports,
        tables=tables,
        duplicates=duplicates,
        escalator_findings=findings,
        s15h_consistent=not s15h,
        negative_controls=controls,
        route_counts={route.value: route_counts.get(route.value, 0) for route in Route},
        warnings=warnings,
        passed=passed,
    )
