"""Unit tests for QuadraticForm and UnimodularMap."""

import pytest
from hypothesis import given, strategies as st
from pydantic import ValidationError

from hermitia.core.errors import DimensionMismatchError, FormError
from hermitia.core.linalg import mat_vec
from hermitia.forms.polynomial import parse_form
from hermitia.forms.quadratic import QuadraticForm, UnimodularMap, direct_sum, verify_witness
from hermitia.representation.enumerate import represented_set


@pytest.mark.unit
class TestQuadraticForm:
    """Tests for construction and derived properties."""

    def test_from_coefficients(self) -> None:
        form = QuadraticForm.from_coefficients(2, {(0, 0): 1, (0, 1): 1, (1, 1): 2})
        assert form.gram2 == ((2, 1), (1, 4))
        assert form.value([1, 1]) == 4
        assert form.determinant == 7
        assert form.coefficient_tuple == (1, 2, 1)

    def test_coefficients_outside_arity(self) -> None:
        with pytest.raises(DimensionMismatchError):
            QuadraticForm.from_coefficients(2, {(0, 2): 1})

    def test_odd_diagonal_rejected(self) -> None:
        with pytest.raises(ValidationError):
            QuadraticForm.from_gram2([[1]])

    def test_asymmetric_rejected(self) -> None:
        with pytest.raises(ValidationError):
            QuadraticForm.from_gram2([[2, 1], [0, 2]])

    def test_definiteness(self) -> None:
        assert parse_form("x^2+xy+y^2").is_positive_definite
        degenerate = parse_form("x^2+2xy+y^2")
        assert degenerate.is_positive_semidefinite
        assert not degenerate.is_positive_definite
        assert degenerate.rank == 1
        indefinite = parse_form("x^2-y^2")
        assert not indefinite.is_positive_semidefinite
        with pytest.raises(FormError):
            indefinite.rank
        with pytest.raises(FormError):
            indefinite.require_positive_definite()

    def test_shape_predicates(self) -> None:
        assert QuadraticForm.diagonal([1, 2]).is_diagonal
        assert parse_form("x^2+2xy+3y^2").is_classical
        assert not parse_form("x^2+xy+y^2").is_classical

    def test_value_dimension(self) -> None:
        with pytest.raises(DimensionMismatchError):
            parse_form("x^2+y^2").value([1, 2, 3])

    def test_transform(self) -> None:
        """(x + y)^2 + y^2 = x^2 + 2xy + 2y^2."""
        form = parse_form("x^2+y^2")
        assert form.transform([[1, 1], [0, 1]]).gram2 == ((2, 2), (2, 4))

    def test_direct_sum(self) -> None:
        assert direct_sum(QuadraticForm.diagonal([1]), QuadraticForm.diagonal([2])) == QuadraticForm.diagonal([1, 2])
        assert direct_sum(QuadraticForm.diagonal([1]), None) == QuadraticForm.diagonal([1])

    @given(
        st.sampled_from(["x^2", "x^2+xy+y^2", "x^2+2y^2", "2x^2+xy+3y^2", "x^2+y^2+z^2"]),
        st.sampled_from(["x^2", "3x^2", "x^2+xy+2y^2", "2x^2+2xy+5y^2"]),
    )
    def test_direct_sum_represents_more(self, first, second) -> None:
        a, b = parse_form(first), parse_form(second)
        total = represented_set(direct_sum(a, b), 50)
        for part in (a, b):
            assert all(total[represented_set(part, 50)])

    @given(
        st.lists(st.integers(-4, 4), min_size=4, max_size=4),
        st.lists(st.integers(-5, 5), min_size=2, max_size=2),
    )
    def test_transform_composes_with_substitution(self, entries, x) -> None:
        form = parse_form("2x^2+xy+3y^2")
        u = [entries[:2], entries[2:]]
        assert form.transform(u).value(x) == form.value(mat_vec(u, x))


@pytest.mark.unit
class TestUnimodularMap:
    """Tests for changes of variables."""

    def test_determinant_checked(self) -> None:
        with pytest.raises(ValidationError):
            UnimodularMap.of([[2, 0], [0, 1]])

    def test_inverse_and_compose(self) -> None:
        u = UnimodularMap.of([[1, 1], [0, 1]])
        assert u.inverse().matrix == ((1, -1), (0, 1))
        assert u.compose(u.inverse()) == UnimodularMap.identity(2)

    def test_verify_witness(self) -> None:
        source = parse_form("x^2+y^2")
        target = parse_form("x^2+2xy+2y^2")
        u = UnimodularMap.of([[1, 1], [0, 1]])
        assert verify_witness(source, target, u)
        assert u.apply(source) == target
        assert not verify_witness(source, parse_form("x^2+2y^2"), u)
