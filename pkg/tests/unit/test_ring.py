"""Unit tests for O_E arithmetic and ring-element text."""

import pytest
from hypothesis import given, strategies as st
from pydantic import ValidationError

from hermitia.core.errors import FieldError, ParseError
from hermitia.core.ring import (
    FieldParams,
    conj,
    format_element,
    is_squarefree,
    make_field,
    norm,
    parse_element,
    trace,
)

FIELDS = [make_field(m) for m in (1, 2, 3, 5, 7, 10, 15, 23)]
small = st.integers(min_value=-30, max_value=30)


@pytest.mark.unit
class TestFieldParams:
    """Tests for field construction."""

    def test_m_congruent_3_mod_4(self) -> None:
        """w = (1 + sqrt(-m)) / 2 has trace 1 and norm (1 + m) / 4."""
        field = make_field(7)
        assert field.omega_trace == 1
        assert field.omega_norm == 2
        assert field.discriminant == -7

    def test_other_m(self) -> None:
        """w = sqrt(-m) has trace 0 and norm m."""
        field = make_field(5)
        assert field.omega_trace == 0
        assert field.omega_norm == 5
        assert field.discriminant == -20

    @pytest.mark.parametrize("m", [0, -1, 4, 12, 18])
    def test_rejects_bad_m(self, m: int) -> None:
        with pytest.raises(FieldError):
            make_field(m)

    def test_direct_construction_validated(self) -> None:
        with pytest.raises(ValidationError):
            FieldParams(m=4, omega_trace=0, omega_norm=4)

    def test_squarefree(self) -> None:
        assert is_squarefree(1)
        assert is_squarefree(30)
        assert not is_squarefree(12)
        assert not is_squarefree(0)


@pytest.mark.unit
class TestArithmetic:
    """Tests for ring operations."""

    def test_omega_squared_eisenstein(self, eisenstein) -> None:
        """w^2 = w - 1 when m = 3."""
        w = eisenstein.omega
        assert w * w == eisenstein.element(-1, 1)

    def test_gaussian_product(self, gaussian) -> None:
        """(1 + i)(1 - i) = 2."""
        assert gaussian.element(1, 1) * gaussian.element(1, -1) == gaussian.element(2)

    def test_norm_and_trace(self) -> None:
        field = make_field(7)
        z = field.element(1, 1)
        assert norm(z) == 4
        assert trace(z) == 3
        assert conj(field.omega) == field.element(1, -1)

    def test_integer_operands(self, gaussian) -> None:
        z = gaussian.element(2, 3)
        assert z + 1 == gaussian.element(3, 3)
        assert 1 - z == gaussian.element(-1, -3)
        assert 2 * z == gaussian.element(4, 6)

    def test_mixed_fields_rejected(self, gaussian, eisenstein) -> None:
        with pytest.raises(FieldError):
            gaussian.omega + eisenstein.omega
        with pytest.raises(FieldError):
            gaussian.omega * eisenstein.omega

    @given(st.sampled_from(FIELDS), small, small, small, small)
    def test_norm_is_multiplicative(self, field, a, b, c, d) -> None:
        x, y = field.element(a, b), field.element(c, d)
        assert norm(x * y) == norm(x) * norm(y)
        assert conj(x * y) == conj(x) * conj(y)

    @given(st.sampled_from(FIELDS), small, small)
    def test_norm_and_trace_from_conjugate(self, field, a, b) -> None:
        x = field.element(a, b)
        assert x * conj(x) == field.element(norm(x))
        assert x + conj(x) == field.element(trace(x))
        assert norm(x) >= 0


@pytest.mark.unit
class TestElementText:
    """Tests for the a+b*w text form."""

    def test_printer_always_emits_both_parts(self, gaussian) -> None:
        assert format_element(gaussian.element(0, -1)) == "0-1*w"
        assert format_element(gaussian.element(3, 2)) == "3+2*w"
        assert str(gaussian.element(5)) == "5+0*w"

    @pytest.mark.parametrize(
        "text,expected",
        [("w", (0, 1)), ("-w", (0, -1)), ("-1+w", (-1, 1)), ("3", (3, 0)), ("2-3*w", (2, -3))],
    )
    def test_parser_short_forms(self, gaussian, text: str, expected) -> None:
        z = parse_element(text, gaussian)
        assert (z.a, z.b) == expected

    @pytest.mark.parametrize("text", ["", "1+", "*w", "x", "2w3"])
    def test_parser_rejects_garbage(self, gaussian, text: str) -> None:
        with pytest.raises(ParseError):
            parse_element(text, gaussian)

    @given(st.sampled_from(FIELDS), small, small)
    def test_printed_text_parses_back(self, field, a, b) -> None:
        z = field.element(a, b)
        assert parse_element(format_element(z), field) == z
