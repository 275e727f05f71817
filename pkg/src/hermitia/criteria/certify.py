"""Criterion checks and certification routes for Hermitian lattices."""

from enum import Enum
from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..config.settings import settings
from ..core.catalog import CatalogEntry
from ..core.errors import FormError
from ..core.hermitian import HermitianLattice, format_lattice
from ..escalate.models import MAX_TREE_RANK, EscalationTree, Regime
from ..escalate.tree import default_options, find_escalator, load_or_build_tree
from ..forms.basis import extract_basis
from ..forms.equivalence import MatchVerdict, is_equivalent, match_paper_form
from ..forms.polynomial import format_pretty, parse_form
from ..forms.quadratic import QuadraticForm
from ..forms.reduction import reduce
from ..forms.trace import trace_form
from ..representation.enumerate import represented_set, represents
from ..utils.logging import bind, get_logger
from .sets import CriterionSet, criterion_sets, get_set, ramanujan_diagonals

logger = get_logger(__name__)

THEOREM_NOTE = (
    "Universality follows from the cited theorem; the computation only verifies its hypotheses."
)
EMPIRICAL_NOTE = "An empirical bound is evidence only and proves nothing about universality."


class Route(str, Enum):
    """How the universality of a lattice is established."""

    RAMANUJAN_DIAGONAL = "RamanujanDiagonal"
    CRITERION_290 = "Criterion290"
    AD_HOC_REQUIRED = "AdHocRequired"


class CriterionCheck(BaseModel):
    """Outcome of testing a form against one criterion set."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    set: str
    passed: bool = Field(..., alias="pass")
    first_failure: Optional[int] = None
    witnesses: List[Tuple[int, Tuple[int, ...]]] = Field(default_factory=list)


class CertificationReport(BaseModel):
    """Per-lattice verdict."""

    model_config = ConfigDict(populate_by_name=True)

    label: str
    field_m: int
    lattice: str
    trace_form: str
    rank: int
    quadratic_form: str
    reduced_form: str
    matched_paper_form: Optional[str] = None
    match_verdict: Optional[MatchVerdict] = None
    erratum_applied: bool = False
    route: Route
    escalator: Optional[bool] = None
    ramanujan_match: Optional[Tuple[int, ...]] = None
    checks: List[CriterionCheck] = Field(default_factory=list)
    empirical_bound: int
    empirical_pass: Optional[bool] = None
    empirical_first_failure: Optional[int] = None
    verified: bool
    notes: List[str] = Field(default_factory=list)

    def check(self, name: str) -> Optional[CriterionCheck]:
        for c in self.checks:
            if c.set == name:
                return c
        return None


def check_criterion(form: QuadraticForm, criterion: CriterionSet) -> CriterionCheck:
    """
    Test whether ``form`` represents every value of ``criterion``.

    Values are tried in increasing order; the first non-represented value ends the check.
    """
    form.require_positive_definite()
    witnesses: List[Tuple[int, Tuple[int, ...]]] = []
    for t in criterion.values:
        found = represents(form, t)
        if found is None:
            return CriterionCheck(set=criterion.name, passed=False, first_failure=t, witnesses=witnesses)
        witnesses.append((t, found.vector))
    return CriterionCheck(set=criterion.name, passed=True, witnesses=witnesses)


def ramanujan_match(form: QuadraticForm) -> Optional[Tuple[int, int, int, int]]:
    """The cited diagonal quadruple ``form`` is (equivalent to), if any."""
    if form.n != 4:
        return None
    if form.is_diagonal:
        diag = tuple(sorted(form.coefficient(i, i) for i in range(4)))
        return diag if diag in ramanujan_diagonals() else None  # type: ignore[return-value]
    for quad in ramanujan_diagonals():
        if is_equivalent(form, QuadraticForm.diagonal(quad)) is not None:
            return quad
    return None


def empirical_check(form: QuadraticForm, bound: int) -> Optional[int]:
    """First value in ``1..bound`` not represented, or None."""
    mask = represented_set(form, bound)
    missing = np.nonzero(~mask[1:])[0]
    return int(missing[0]) + 1 if missing.size else None


def _match_entry(form: QuadraticForm, entry: CatalogEntry) -> Tuple[str, MatchVerdict, bool]:
    printed = parse_form(entry.printed, n=4)
    match = match_paper_form(form, printed)
    if match.verdict is MatchVerdict.DISTINCT and entry.erratum:
        corrected = match_paper_form(form, parse_form(entry.erratum, n=4))
        if corrected.verdict is not MatchVerdict.DISTINCT:
            logger.warning(
                f"{entry.label}: printed form {entry.printed} does not match; "
                f"using corrected form {entry.erratum}"
            )
            return entry.erratum, corrected.verdict, True
    return entry.printed, match.verdict, False


def certify(
    lattice: HermitianLattice,
    empirical_bound: Optional[int] = None,
    entry: Optional[CatalogEntry] = None,
    tree: Optional[EscalationTree] = None,
) -> CertificationReport:
    """
    Route a lattice to Ramanujan-diagonal, 290-criterion, or ad hoc verification.

    Args:
        lattice: validated Hermitian lattice
        empirical_bound: sweep bound for the ad hoc route (default: settings)
        entry: catalog entry carrying the published form, when known
        tree: integer-valued escalation tree reaching the form's rank

    Raises:
        FormError: if ``empirical_bound`` is below 1
    """
    bound = settings.empirical_bound if empirical_bound is None else empirical_bound
    if bound < 1:
        raise FormError(f"empirical bound must be positive, got {bound}")
    full = trace_form(lattice)
    form, _ = extract_basis(full)
    reduced = reduce(form)[0] if form.n else form
    label = lattice.label or format_lattice(lattice)
    bind(logger, label=label).info("Certifying lattice", extra={"field_m": lattice.field.m, "rank": form.n})

    matched = verdict = None
    erratum = False
    if entry is not None:
        matched, verdict, erratum = _match_entry(full if full.is_positive_definite else form, entry)

    checks = [check_criterion(form, s) for s in criterion_sets()]
    s290 = next(c for c in checks if c.set == "S290")

    escalator: Optional[bool] = None
    if form.n <= MAX_TREE_RANK:
        if tree is None or tree.options.max_rank < form.n:
            tree = load_or_build_tree(default_options(Regime.INTEGRAL))
        escalator = find_escalator(tree, form) is not None if form.n else True

    quad = ramanujan_match(form)
    notes: List[str] = []
    empirical_pass = first_failure = None
    if quad is not None:
        route = Route.RAMANUJAN_DIAGONAL
        verified = True
        notes.append(THEOREM_NOTE)
    elif escalator is False and s290.passed:
        route = Route.CRITERION_290
        verified = True
        notes.append(THEOREM_NOTE)
    else:
        route = Route.AD_HOC_REQUIRED
        first_failure = empirical_check(form, bound) if form.n else 1
        empirical_pass = first_failure is None
        verified = empirical_pass
        if escalator:
            notes.append("The form is an escalator, so the 290-criterion cannot certify it.")
        elif escalator is None:
            notes.append(f"Escalator status is unknown above rank {MAX_TREE_RANK}.")
        notes.append(EMPIRICAL_NOTE)

    return CertificationReport(
        label=label,
        field_m=lattice.field.m,
        lattice=format_lattice(lattice),
        trace_form=format_pretty(full),
        rank=form.n,
        quadratic_form=format_pretty(form),
        reduced_form=format_pretty(reduced),
        matched_paper_form=matched,
        match_verdict=verdict,
        erratum_applied=erratum,
        route=route,
        escalator=escalator,
        ramanujan_match=quad,
        checks=checks,
        empirical_bound=bound,
        empirical_pass=empirical_pass,
        empirical_first_failure=first_failure,
        verified=verified,
        notes=notes,
    )


def check_form(form: QuadraticForm, set_name: str) -> CriterionCheck:
    """CLI helper: check a form against a set given by its CLI spelling."""
    return check_criterion(form, CriterionSet.lookup(set_name))


__all__ = [
    "CertificationReport",
    "CriterionCheck",
    "Route",
    "certify",
    "check_criterion",
    "check_form",
    "empirical_check",
    "get_set",
    "ramanujan_match",
]
