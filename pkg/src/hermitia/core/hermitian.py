"""Integral Hermitian lattices over O_E given by conjugate-symmetric Gram presentations."""

from typing import List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from .errors import DimensionMismatchError, FieldError, LatticeError
from .linalg import IntMatrix, psd_rank
from .ring import AlgebraicInteger, FieldParams, conj, format_element, trace


class HermitianLattice(BaseModel):
    """
    Hermitian O_E-module given by the Gram matrix ``h_ij = H(g_i, g_j)`` of its generators.

    A redundant generating set is allowed: the Gram may be singular, in which case
    ``rank`` (over E) is smaller than ``size``.
    """

    model_config = ConfigDict(frozen=True)

    field: FieldParams
    gram: Tuple[Tuple[AlgebraicInteger, ...], ...]
    label: Optional[str] = None

    @model_validator(mode="after")
    def _validate(self) -> "HermitianLattice":
        k = len(self.gram)
        for i, row in enumerate(self.gram):
            if len(row) != k:
                raise LatticeError(f"Gram row {i} has {len(row)} entries, expected {k}")
            for entry in row:
                if entry.field != self.field:
                    raise FieldError(f"Gram entry {entry} is not over m={self.field.m}")
        for i in range(k):
            h = self.gram[i][i]
            if h.b != 0:
                raise LatticeError(f"diagonal entry {i} has nonzero w-part: {format_element(h)}")
            if h.a < 0:
                raise LatticeError(f"diagonal entry {i} is negative: {h.a}")
            for j in range(i + 1, k):
                if self.gram[j][i] != conj(self.gram[i][j]):
                    raise LatticeError(f"Gram is not conjugate-symmetric at ({i}, {j})")
        if k and psd_rank(self.trace_gram()) is None:
            raise LatticeError("Gram presentation is not positive semidefinite")
        return self

    @property
    def size(self) -> int:
        """Number of generators."""
        return len(self.gram)

    @property
    def rank(self) -> int:
        """Rank over E: half the rank of the trace Gram."""
        r = psd_rank(self.trace_gram())
        return (r or 0) // 2

    @property
    def is_free_presentation(self) -> bool:
        return self.rank == self.size

    @property
    def name(self) -> str:
        return self.label or format_lattice(self)

    def trace_gram(self) -> IntMatrix:
        """
        Doubled integer Gram of the trace form over the ordered Z-basis
        ``(g_1, w g_1, g_2, w g_2, ...)``: entry ``Tr(alpha * h_ij * conj(beta))``.
        """
        k = len(self.gram)
        one = self.field.one()
        omega = self.field.omega
        basis = (one, omega)
        out = [[0] * (2 * k) for _ in range(2 * k)]
        for i in range(k):
            for j in range(k):
                h = self.gram[i][j]
                for s, alpha in enumerate(basis):
                    for t, beta in enumerate(basis):
                        out[2 * i + s][2 * j + t] = trace(alpha * h * conj(beta))
        return out


def make_lattice(
    field: FieldParams,
    gram: Sequence[Sequence[AlgebraicInteger]],
    label: Optional[str] = None,
) -> HermitianLattice:
    """
    Validate a Gram presentation.

    Raises:
        LatticeError: if the Gram is empty, not square, not conjugate-symmetric, or indefinite
    """
    if not gram:
        raise LatticeError("Gram matrix must have at least one row")
    rows = tuple(tuple(row) for row in gram)
    for row in rows:
        if len(row) != len(rows):
            raise LatticeError("Gram matrix must be square")
    return HermitianLattice(field=field, gram=rows, label=label)


def diagonal(field: FieldParams, values: Sequence[int], label: Optional[str] = None) -> HermitianLattice:
    """The lattice ``<a_1, ..., a_k>``."""
    k = len(values)
    gram = [[field.element(values[i] if i == j else 0) for j in range(k)] for i in range(k)]
    return make_lattice(field, gram, label=label)


def evaluate(lattice: HermitianLattice, x: Sequence[AlgebraicInteger]) -> int:
    """``H(x, x) = sum_ij h_ij x_i conj(x_j)`` as a rational integer."""
    k = lattice.size
    if len(x) != k:
        raise DimensionMismatchError(f"vector has {len(x)} entries, lattice has {k} generators")
    total = lattice.field.zero()
    conj_x = [conj(xj) for xj in x]
    for i in range(k):
        if x[i].a == 0 and x[i].b == 0:
            continue
        for j in range(k):
            total = total + lattice.gram[i][j] * x[i] * conj_x[j]
    if total.b != 0:
        raise LatticeError("Hermitian value has nonzero w-part")
    return total.a


def orthogonal_sum(
    first: HermitianLattice,
    second: Optional[HermitianLattice],
    label: Optional[str] = None,
) -> HermitianLattice:
    """Block-diagonal sum ``L1 _|_ L2``; ``None`` acts as the empty lattice."""
    if second is None:
        return first
    if first.field != second.field:
        raise FieldError(f"cannot sum lattices over m={first.field.m} and m={second.field.m}")
    n, k = first.size, second.size
    zero = first.field.zero()
    gram: List[List[AlgebraicInteger]] = [[zero] * (n + k) for _ in range(n + k)]
    for i in range(n):
        for j in range(n):
            gram[i][j] = first.gram[i][j]
    for i in range(k):
        for j in range(k):
            gram[n + i][n + j] = second.gram[i][j]
    return make_lattice(first.field, gram, label=label)


def format_lattice(lattice: HermitianLattice) -> str:
    """Lattice text ``m=<int>; a+b*w,...; ...``."""
    rows = [",".join(format_element(e) for e in row) for row in lattice.gram]
    return f"m={lattice.field.m}; " + "; ".join(rows)
