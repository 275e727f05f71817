"""Criterion sets for universality and the cited Ramanujan diagonal forms."""

from typing import List, Literal, Tuple

from pydantic import BaseModel, ConfigDict, field_validator

from ..core.catalog import load_catalog_data
from ..core.errors import ParseError

CriterionName = Literal["S15", "S290", "S15H"]

_SPELLINGS = {
    "15": "S15",
    "s15": "S15",
    "290": "S290",
    "s290": "S290",
    "15h": "S15H",
    "s15h": "S15H",
}


class CriterionSet(BaseModel):
    """A finite set whose representation certifies universality under a criterion theorem."""

    model_config = ConfigDict(frozen=True)

    name: CriterionName
    values: Tuple[int, ...]

    @field_validator("values")
    @classmethod
    def _sorted_unique(cls, v: Tuple[int, ...]) -> Tuple[int, ...]:
        if list(v) != sorted(set(v)) or not v or v[0] < 1:
            raise ValueError("criterion values must be sorted, distinct and positive")
        return v

    def __contains__(self, t: object) -> bool:
        return t in self.values

    def __len__(self) -> int:
        return len(self.values)

    @classmethod
    def lookup(cls, text: str) -> "CriterionSet":
        """Resolve CLI spellings ``15``, ``290``, ``15h`` (or the set names)."""
        name = _SPELLINGS.get(text.strip().lower())
        if name is None:
            raise ParseError(f"unknown criterion set {text!r}; use 15, 290 or 15h")
        return get_set(name)


def get_set(name: str) -> CriterionSet:
    values = load_catalog_data()["criteria"][name]
    return CriterionSet(name=name, values=tuple(int(v) for v in values))


def criterion_sets() -> List[CriterionSet]:
    """``[S15, S290, S15H]``."""
    return [get_set("S15"), get_set("S290"), get_set("S15H")]


def ramanujan_citations() -> List[Tuple[int, int, int, int]]:
    """Every citation of a Ramanujan diagonal form, repeats included."""
    return [tuple(int(c) for c in quad) for quad in load_catalog_data()["ramanujan_citations"]]  # type: ignore[misc]


def ramanujan_diagonals() -> List[Tuple[int, int, int, int]]:
    """The distinct cited quadruples, in order of first citation."""
    seen: List[Tuple[int, int, int, int]] = []
    for quad in ramanujan_citations():
        if quad not in seen:
            seen.append(quad)
    return seen
