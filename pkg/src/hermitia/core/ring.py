"""Exact arithmetic in the ring of integers of an imaginary quadratic field.

Elements are stored over the Z-basis ``{1, w}`` where ``w`` is ``sqrt(-m)`` or
``(1 + sqrt(-m)) / 2`` depending on ``m mod 4``; ``w`` satisfies
``w^2 = omega_trace * w - omega_norm``.
"""

import re
from typing import Union

from pydantic import BaseModel, ConfigDict, model_validator

from .errors import FieldError, ParseError


def is_squarefree(n: int) -> bool:
    """Trial-division squarefree test for positive integers."""
    if n <= 0:
        return False
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        d += 1
    return True


class FieldParams(BaseModel):
    """Imaginary quadratic field Q(sqrt(-m)) with its omega data."""

    model_config = ConfigDict(frozen=True)

    m: int
    omega_trace: int
    omega_norm: int

    @model_validator(mode="after")
    def _check_invariants(self) -> "FieldParams":
        if self.m <= 0 or not is_squarefree(self.m):
            raise FieldError(f"m must be a positive squarefree integer, got {self.m}")
        if self.omega_trace not in (0, 1) or self.omega_norm < 1:
            raise FieldError(f"invalid omega data for m={self.m}")
        if self.omega_trace**2 - 4 * self.omega_norm >= 0:
            raise FieldError("omega must be imaginary")
        return self

    @property
    def discriminant(self) -> int:
        return -self.m if self.m % 4 == 3 else -4 * self.m

    @property
    def omega(self) -> "AlgebraicInteger":
        return AlgebraicInteger(a=0, b=1, field=self)

    @property
    def name(self) -> str:
        return f"Q(sqrt(-{self.m}))"

    def element(self, a: int, b: int = 0) -> "AlgebraicInteger":
        """Embed ``a + b*w`` in this field's ring of integers."""
        return AlgebraicInteger(a=a, b=b, field=self)

    def zero(self) -> "AlgebraicInteger":
        return self.element(0)

    def one(self) -> "AlgebraicInteger":
        return self.element(1)


def make_field(m: int) -> FieldParams:
    """
    Build the field data for Q(sqrt(-m)).

    Raises:
        FieldError: if m is not a positive squarefree integer
    """
    if not isinstance(m, int) or isinstance(m, bool):
        raise FieldError(f"m must be an integer, got {m!r}")
    if m <= 0:
        raise FieldError(f"m must be positive, got {m}")
    if not is_squarefree(m):
        raise FieldError(f"m must be squarefree, got {m}")
    if m % 4 == 3:
        return FieldParams(m=m, omega_trace=1, omega_norm=(1 + m) // 4)
    return FieldParams(m=m, omega_trace=0, omega_norm=m)


class AlgebraicInteger(BaseModel):
    """Element ``a + b*w`` of O_E."""

    model_config = ConfigDict(frozen=True)

    a: int
    b: int
    field: FieldParams

    def _coerce(self, other: Union["AlgebraicInteger", int]) -> "AlgebraicInteger":
        if isinstance(other, AlgebraicInteger):
            if other.field != self.field:
                raise FieldError(
                    f"mixed-field operands: m={self.field.m} and m={other.field.m}"
                )
            return other
        if isinstance(other, int):
            return self.field.element(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: Union["AlgebraicInteger", int]) -> "AlgebraicInteger":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return AlgebraicInteger(a=self.a + o.a, b=self.b + o.b, field=self.field)

    __radd__ = __add__

    def __neg__(self) -> "AlgebraicInteger":
        return AlgebraicInteger(a=-self.a, b=-self.b, field=self.field)

    def __sub__(self, other: Union["AlgebraicInteger", int]) -> "AlgebraicInteger":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return AlgebraicInteger(a=self.a - o.a, b=self.b - o.b, field=self.field)

    def __rsub__(self, other: int) -> "AlgebraicInteger":
        return (-self) + other

    def __mul__(self, other: Union["AlgebraicInteger", int]) -> "AlgebraicInteger":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        t, n = self.field.omega_trace, self.field.omega_norm
        bb = self.b * o.b
        # w^2 = t*w - n
        return AlgebraicInteger(
            a=self.a * o.a - n * bb,
            b=self.a * o.b + self.b * o.a + t * bb,
            field=self.field,
        )

    __rmul__ = __mul__

    def conj(self) -> "AlgebraicInteger":
        return conj(self)

    def norm(self) -> int:
        return norm(self)

    def trace(self) -> int:
        return trace(self)

    def __str__(self) -> str:
        return format_element(self)


def conj(z: AlgebraicInteger) -> AlgebraicInteger:
    """Complex conjugate; uses conj(w) = omega_trace - w."""
    t = z.field.omega_trace
    return AlgebraicInteger(a=z.a + t * z.b, b=-z.b, field=z.field)


def norm(z: AlgebraicInteger) -> int:
    f = z.field
    return z.a * z.a + z.a * z.b * f.omega_trace + z.b * z.b * f.omega_norm


def trace(z: AlgebraicInteger) -> int:
    return 2 * z.a + z.b * z.field.omega_trace


def add(z1: AlgebraicInteger, z2: AlgebraicInteger) -> AlgebraicInteger:
    return z1 + z2


def subtract(z1: AlgebraicInteger, z2: AlgebraicInteger) -> AlgebraicInteger:
    return z1 - z2


def multiply(z1: AlgebraicInteger, z2: AlgebraicInteger) -> AlgebraicInteger:
    return z1 * z2


def format_element(z: AlgebraicInteger) -> str:
    """Render as ``a+b*w`` with both coefficients always present (``0-1*w``)."""
    sign = "-" if z.b < 0 else "+"
    return f"{z.a}{sign}{abs(z.b)}*w"


_TERM_RE = re.compile(r"([+-]?)(\d*)(\*?w)?")


def parse_element(text: str, field: FieldParams) -> AlgebraicInteger:
    """
    Parse ``a+b*w`` text, accepting short forms such as ``w``, ``-1+w``, ``3``, ``2-3*w``.

    Raises:
        ParseError: on malformed input
    """
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty ring element")
    a = b = 0
    pos = 0
    while pos < len(s):
        match = _TERM_RE.match(s, pos)
        if match is None or match.end() == pos:
            raise ParseError(f"malformed ring element: {text!r}")
        sign, digits, w_part = match.groups()
        if not digits and not w_part:
            raise ParseError(f"malformed ring element: {text!r}")
        if pos > 0 and not sign:
            raise ParseError(f"missing operator in ring element: {text!r}")
        if w_part == "*w" and not digits:
            raise ParseError(f"dangling '*' in ring element: {text!r}")
        value = int(digits) if digits else 1
        if sign == "-":
            value = -value
        if w_part:
            b += value
        else:
            a += value
        pos = match.end()
    return field.element(a, b)
