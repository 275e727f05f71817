"""Near-miss lattices whose non-universality is exhibited by a truant."""

import math
from typing import List, Optional

from pydantic import BaseModel, ConfigDict

from ..config.settings import settings
from ..core.catalog import negative_control_lattices
from ..core.hermitian import HermitianLattice, format_lattice
from ..core.linalg import rational_inverse
from ..forms.basis import extract_basis
from ..forms.polynomial import format_pretty
from ..forms.quadratic import QuadraticForm
from ..forms.trace import trace_form
from ..representation.enumerate import naive_represents, truant
from ..utils.logging import bind, get_logger

logger = get_logger(__name__)


class NegativeControl(BaseModel):
    model_config = ConfigDict(frozen=True)

    label: str
    lattice: str
    trace_form: str
    truant: Optional[int] = None
    reverified: Optional[bool] = None
    cap: int

    @property
    def inconclusive(self) -> bool:
        return self.truant is None


def box_radius(form: QuadraticForm, t: int) -> int:
    """Coordinate bound for vectors of value ``t``: ``x_i^2 <= t * (A^-1)_ii``."""
    inverse = rational_inverse(form.gram2)
    # A = gram2 / 2, so A^-1 = 2 * inverse
    worst = max(2 * inverse[i][i] for i in range(form.n))
    return math.isqrt(math.floor(t * worst)) + 1


def run_control(lattice: HermitianLattice, cap: Optional[int] = None) -> NegativeControl:
    """Find the truant of a lattice's trace form and re-check it by box search."""
    cap = settings.truant_cap if cap is None else cap
    log = bind(logger, label=lattice.name)
    full = trace_form(lattice)
    form, _ = extract_basis(full)
    found = truant(form, cap)
    reverified = None
    if found is not None:
        reverified = not naive_represents(form, found, box_radius(form, found)) if form.n else True
        if not reverified:
            log.error(f"Truant {found} is represented under box search")
    else:
        log.warning(f"No truant up to {cap}; control is inconclusive")
    return NegativeControl(
        label=lattice.name,
        lattice=format_lattice(lattice),
        trace_form=format_pretty(full),
        truant=found,
        reverified=reverified,
        cap=cap,
    )


def negative_controls(cap: Optional[int] = None) -> List[NegativeControl]:
    """Truants of the built-in near-miss lattices, each re-verified."""
    return [run_control(lattice, cap) for lattice in negative_control_lattices()]
