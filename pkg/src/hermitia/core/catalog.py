"""The catalog of universal binary Hermitian lattices and associated reference data."""

from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional

import yaml
from pydantic import BaseModel, ConfigDict

from ..utils.logging import get_logger
from .errors import LatticeError
from .hermitian import HermitianLattice, diagonal, make_lattice, orthogonal_sum
from .ring import make_field, parse_element

logger = get_logger(__name__)

CATALOG_PATH = Path(__file__).parent / "data" / "catalog.yaml"

TableName = Literal["diagonal", "nondiagonal", "nonfree"]


class CatalogEntry(BaseModel):
    """A catalog lattice together with the quadratic form published for it."""

    model_config = ConfigDict(frozen=True)

    lattice: HermitianLattice
    table: TableName
    printed: str
    erratum: Optional[str] = None

    @property
    def label(self) -> str:
        return self.lattice.label or ""

    @property
    def m(self) -> int:
        return self.lattice.field.m


@lru_cache(maxsize=1)
def load_catalog_data(path: Path = CATALOG_PATH) -> Dict[str, Any]:
    with open(path, encoding="utf-8") as f:
        return yaml.safe_load(f) or {}


def _lattice_from_raw(raw: Dict[str, Any]) -> HermitianLattice:
    field = make_field(int(raw["m"]))
    if "diagonal" in raw:
        values = [int(v) for v in raw["diagonal"]]
        label = f"Qm{field.m}:<{','.join(str(v) for v in values)}>"
        return diagonal(field, values, label=label)
    if "block" in raw:
        a, h_text, c = raw["block"]
        h = parse_element(str(h_text), field)
        block = make_lattice(
            field,
            [[field.element(int(a)), h], [h.conj(), field.element(int(c))]],
        )
        label = f"Qm{field.m}:<1>+[{a},{h_text},{c}]"
        return orthogonal_sum(diagonal(field, [1]), block, label=label)
    raise LatticeError(f"catalog entry needs 'diagonal' or 'block': {raw}")


@lru_cache(maxsize=1)
def catalog_entries() -> List[CatalogEntry]:
    """All catalog lattices with their published forms, grouped by field."""
    data = load_catalog_data()
    entries = [
        CatalogEntry(
            lattice=_lattice_from_raw(raw),
            table=raw["table"],
            printed=raw["printed"],
            erratum=raw.get("erratum"),
        )
        for raw in data["lattices"]
    ]
    logger.debug(f"Loaded {len(entries)} catalog lattices")
    return entries


def catalog() -> List[HermitianLattice]:
    """The 25 universal binary Hermitian lattices."""
    return [entry.lattice for entry in catalog_entries()]


def get_entry(label: str) -> Optional[CatalogEntry]:
    for entry in catalog_entries():
        if entry.label == label:
            return entry
    return None


def negative_control_lattices() -> List[HermitianLattice]:
    """Built-in near-miss lattices absent from the catalog."""
    return [_lattice_from_raw(raw) for raw in load_catalog_data()["negative_controls"]]


def duplicate_pairs() -> List[List[str]]:
    return [list(pair) for pair in load_catalog_data()["duplicate_pairs"]]


def escalator_claims() -> Dict[str, List[str]]:
    claims = load_catalog_data()["escalator_claims"]
    return {"escalators": list(claims["escalators"]), "non_escalators": list(claims["non_escalators"])}
