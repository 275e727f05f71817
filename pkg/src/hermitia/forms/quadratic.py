"""Integer-valued quadratic forms stored by their doubled Gram matrix."""

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, field_validator

from ..core.errors import DimensionMismatchError, FormError
from ..core.linalg import (
    IntMatrix,
    block_diagonal,
    congruence,
    determinant,
    identity,
    mat_mul,
    psd_rank,
    quadratic_value,
    unimodular_inverse,
)

Gram = Tuple[Tuple[int, ...], ...]


def _freeze(matrix: Sequence[Sequence[int]]) -> Gram:
    return tuple(tuple(int(x) for x in row) for row in matrix)


class QuadraticForm(BaseModel):
    """
    ``Q(x) = sum_{i<=j} c_ij x_i x_j`` with integer ``c_ij``.

    ``gram2`` is ``2A``: ``gram2[i][i] = 2 c_ii`` and ``gram2[i][j] = c_ij`` for ``i != j``,
    so ``Q(x) = x^T gram2 x / 2``.
    """

    model_config = ConfigDict(frozen=True)

    gram2: Gram

    @field_validator("gram2")
    @classmethod
    def _check_gram(cls, v: Gram) -> Gram:
        n = len(v)
        for i, row in enumerate(v):
            if len(row) != n:
                raise FormError(f"Gram row {i} has {len(row)} entries, expected {n}")
            if row[i] % 2:
                raise FormError(f"doubled Gram must have even diagonal (row {i})")
            for j in range(i):
                if row[j] != v[j][i]:
                    raise FormError(f"Gram is not symmetric at ({j}, {i})")
        return v

    @classmethod
    def from_gram2(cls, gram2: Sequence[Sequence[int]]) -> "QuadraticForm":
        return cls(gram2=_freeze(gram2))

    @classmethod
    def from_coefficients(cls, n: int, coeffs: Dict[Tuple[int, int], int]) -> "QuadraticForm":
        """Build from monomial coefficients keyed by ``(i, j)`` with ``i <= j`` (0-based)."""
        g = [[0] * n for _ in range(n)]
        for (i, j), c in coeffs.items():
            if i > j:
                i, j = j, i
            if not (0 <= i and j < n):
                raise DimensionMismatchError(f"monomial ({i}, {j}) outside {n} variables")
            if i == j:
                g[i][i] += 2 * c
            else:
                g[i][j] += c
                g[j][i] += c
        return cls(gram2=_freeze(g))

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> "QuadraticForm":
        n = len(values)
        return cls(gram2=tuple(tuple(2 * values[i] if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, n: int = 0) -> "QuadraticForm":
        return cls(gram2=tuple(tuple(0 for _ in range(n)) for _ in range(n)))

    @property
    def n(self) -> int:
        return len(self.gram2)

    def coefficient(self, i: int, j: int) -> int:
        if i == j:
            return self.gram2[i][i] // 2
        return self.gram2[i][j]

    @property
    def coefficients(self) -> Dict[Tuple[int, int], int]:
        """Nonzero monomial coefficients keyed by ``(i, j)``, ``i <= j``."""
        out = {}
        for i in range(self.n):
            for j in range(i, self.n):
                c = self.coefficient(i, j)
                if c:
                    out[(i, j)] = c
        return out

    @property
    def gram(self) -> List[List[Fraction]]:
        """The rational Gram ``A``."""
        return [[Fraction(x, 2) for x in row] for row in self.gram2]

    @property
    def coefficient_tuple(self) -> Tuple[int, ...]:
        """Diagonal coefficients, then the upper off-diagonal ones row by row."""
        diag = tuple(self.gram2[i][i] // 2 for i in range(self.n))
        off = tuple(self.gram2[i][j] for i in range(self.n) for j in range(i + 1, self.n))
        return diag + off

    def value(self, x: Sequence[int]) -> int:
        if len(x) != self.n:
            raise DimensionMismatchError(f"vector has {len(x)} entries, form has {self.n} variables")
        return quadratic_value(self.gram2, x) // 2

    @property
    def determinant(self) -> int:
        """Determinant of ``2A``."""
        return determinant(self.gram2)

    @property
    def rank(self) -> int:
        r = psd_rank(self.gram2)
        if r is None:
            raise FormError("form is not positive semidefinite")
        return r

    @property
    def is_positive_semidefinite(self) -> bool:
        return psd_rank(self.gram2) is not None

    @property
    def is_positive_definite(self) -> bool:
        return psd_rank(self.gram2) == self.n

    @property
    def is_diagonal(self) -> bool:
        return all(self.gram2[i][j] == 0 for i in range(self.n) for j in range(self.n) if i != j)

    @property
    def is_classical(self) -> bool:
        """All cross coefficients even (integral Gram ``A``)."""
        return all(self.gram2[i][j] % 2 == 0 for i in range(self.n) for j in range(i + 1, self.n))

    def transform(self, u: Sequence[Sequence[int]]) -> "QuadraticForm":
        """``Q o U``: the form ``x -> Q(U x)``."""
        if len(u) != self.n:
            raise DimensionMismatchError(f"transform has {len(u)} rows, form has {self.n} variables")
        return QuadraticForm(gram2=_freeze(congruence(self.gram2, u)))

    def require_positive_definite(self) -> "QuadraticForm":
        if not self.is_positive_definite:
            raise FormError(f"form is not positive definite: {self}")
        return self

    def __str__(self) -> str:
        from .polynomial import format_pretty

        return format_pretty(self)


class UnimodularMap(BaseModel):
    """Integer change of variables with determinant +-1."""

    model_config = ConfigDict(frozen=True)

    matrix: Gram

    @field_validator("matrix")
    @classmethod
    def _check_unimodular(cls, v: Gram) -> Gram:
        n = len(v)
        if any(len(row) != n for row in v):
            raise FormError("unimodular map must be square")
        if abs(determinant(v)) != 1:
            raise FormError("unimodular map must have determinant +-1")
        return v

    @classmethod
    def of(cls, matrix: Sequence[Sequence[int]]) -> "UnimodularMap":
        return cls(matrix=_freeze(matrix))

    @classmethod
    def identity(cls, n: int) -> "UnimodularMap":
        return cls(matrix=_freeze(identity(n)))

    @property
    def n(self) -> int:
        return len(self.matrix)

    def rows(self) -> IntMatrix:
        return [list(row) for row in self.matrix]

    def compose(self, other: "UnimodularMap") -> "UnimodularMap":
        """``self`` followed by ``other`` on forms: ``(Q o self) o other = Q o (self * other)``."""
        return UnimodularMap.of(mat_mul(self.matrix, other.matrix))

    def inverse(self) -> "UnimodularMap":
        return UnimodularMap.of(unimodular_inverse(self.matrix))

    def apply(self, form: QuadraticForm) -> QuadraticForm:
        return form.transform(self.matrix)


def direct_sum(first: QuadraticForm, second: Optional[QuadraticForm]) -> QuadraticForm:
    """Orthogonal sum; values add over the concatenated variables."""
    if second is None:
        return first
    return QuadraticForm(gram2=_freeze(block_diagonal(first.gram2, second.gram2)))


def verify_witness(source: QuadraticForm, target: QuadraticForm, u: UnimodularMap) -> bool:
    """Exact check that ``source o U`` reproduces ``target`` entry for entry."""
    return source.n == target.n == u.n and source.transform(u.matrix).gram2 == target.gram2
