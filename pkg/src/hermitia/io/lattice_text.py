"""Reading lattices and forms from command-line text."""

import re
from typing import Optional, Tuple

from ..core.catalog import CatalogEntry, get_entry
from ..core.errors import ParseError
from ..core.hermitian import HermitianLattice, make_lattice
from ..core.ring import make_field, parse_element
from ..forms.basis import extract_basis
from ..forms.polynomial import parse_form
from ..forms.quadratic import QuadraticForm
from ..forms.trace import trace_form

_HEADER_RE = re.compile(r"^\s*m\s*=\s*(\d+)\s*$")


def parse_lattice(text: str) -> HermitianLattice:
    """
    Parse ``m=<int>; <row>; <row>; ...`` (rows of comma-separated ``a+b*w``)
    or a catalog label such as ``Qm7:<1,3>``.

    Raises:
        ParseError: on malformed text
        LatticeError: (inside ValidationError) on an invalid Gram
    """
    entry = get_entry(text.strip())
    if entry is not None:
        return entry.lattice
    parts = [p for p in text.split(";")]
    header = _HEADER_RE.match(parts[0])
    if header is None:
        raise ParseError(f"lattice text must start with 'm=<int>' or be a catalog label: {text!r}")
    field = make_field(int(header.group(1)))
    rows = [p.strip() for p in parts[1:] if p.strip()]
    if not rows:
        raise ParseError(f"lattice text has no Gram rows: {text!r}")
    gram = [[parse_element(cell, field) for cell in row.split(",")] for row in rows]
    return make_lattice(field, gram)


def resolve_entry(text: str) -> Optional[CatalogEntry]:
    return get_entry(text.strip())


def looks_like_lattice(text: str) -> bool:
    return get_entry(text.strip()) is not None or bool(_HEADER_RE.match(text.split(";")[0]))


def parse_form_or_lattice(text: str) -> Tuple[QuadraticForm, Optional[HermitianLattice]]:
    """
    A positive definite form from polynomial text, or the basis-extracted trace form
    of a lattice.
    """
    if looks_like_lattice(text):
        lattice = parse_lattice(text)
        form, _ = extract_basis(trace_form(lattice))
        return form, lattice
    return parse_form(text), None
