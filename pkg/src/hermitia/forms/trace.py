"""The trace-form construction from Hermitian lattices to quadratic forms."""

from typing import List, Sequence

from ..core.errors import DimensionMismatchError
from ..core.hermitian import HermitianLattice
from ..core.ring import AlgebraicInteger
from .quadratic import QuadraticForm


def trace_form(lattice: HermitianLattice) -> QuadraticForm:
    """
    Quadratic form of ``H(x, x)`` in ``2k`` integer variables.

    Variables are ordered ``(g_1, w g_1, g_2, w g_2, ...)``, so coordinate ``2i`` is
    the rational part and ``2i + 1`` the ``w`` part of the i-th O_E coefficient.
    """
    return QuadraticForm.from_gram2(lattice.trace_gram())


def assemble(lattice: HermitianLattice, coords: Sequence[int]) -> List[AlgebraicInteger]:
    """O_E vector ``(c_0 + c_1 w, c_2 + c_3 w, ...)`` from trace-form coordinates."""
    if len(coords) != 2 * lattice.size:
        raise DimensionMismatchError(
            f"expected {2 * lattice.size} coordinates, got {len(coords)}"
        )
    return [lattice.field.element(coords[2 * i], coords[2 * i + 1]) for i in range(lattice.size)]
