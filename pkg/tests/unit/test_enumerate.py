"""Unit tests for representation enumeration, checked against brute force."""

import itertools

import numpy as np
import pytest
from hypothesis import HealthCheck, assume, given, settings as hsettings, strategies as st

from hermitia.classify.controls import box_radius
from hermitia.core.errors import FormError
from hermitia.forms.polynomial import parse_form
from hermitia.forms.quadratic import QuadraticForm
from hermitia.representation.enumerate import (
    check_witness,
    naive_represents,
    representation_counts,
    represented_set,
    represented_values,
    represents,
    short_vectors,
    truant,
)

ORACLE_BOUND = 40

ORACLE_FORMS = [
    "x^2+y^2",
    "x^2+xy+y^2",
    "x^2+2y^2",
    "x^2+3y^2",
    "2x^2+xy+3y^2",
    "x^2+xy+6y^2",
    "3x^2+2xy+5y^2",
    "5x^2+4xy+5y^2",
    "x^2+y^2+z^2",
    "x^2+y^2+2z^2",
    "x^2+xy+y^2+z^2",
    "2x^2+2y^2+yz+3z^2",
    "x^2+2y^2+xz+5z^2",
    "x^2+xy+y^2+yz+z^2",
    "w^2+x^2+y^2+z^2",
    "w^2+wx+2x^2+3y^2+3yz+6z^2",
]


def brute_force_mask(form: QuadraticForm, bound: int) -> np.ndarray:
    radius = box_radius(form, bound)
    mask = np.zeros(bound + 1, dtype=bool)
    for vec in itertools.product(range(-radius, radius + 1), repeat=form.n):
        value = form.value(vec)
        if value <= bound:
            mask[value] = True
    return mask


@pytest.mark.unit
class TestOracle:
    """16 forms x 41 targets compared with box enumeration."""

    @pytest.mark.parametrize("text", ORACLE_FORMS)
    def test_represented_set_matches_box_search(self, text: str) -> None:
        form = parse_form(text)
        expected = brute_force_mask(form, ORACLE_BOUND)
        got = represented_set(form, ORACLE_BOUND)
        assert got.tolist() == expected.tolist()
        for t in range(ORACLE_BOUND + 1):
            witness = represents(form, t)
            assert (witness is not None) == bool(expected[t])
            if witness is not None:
                assert check_witness(form, witness)


def box_mask(form: QuadraticForm, bound: int, radius: int) -> np.ndarray:
    """Values up to ``bound`` over the box ``|x_i| <= radius``, computed on a numpy grid."""
    axes = [np.arange(-radius, radius + 1, dtype=np.int64)] * form.n
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, form.n)
    gram2 = np.array(form.gram2, dtype=np.int64)
    values = np.einsum("ki,ij,kj->k", grid, gram2, grid) // 2
    mask = np.zeros(bound + 1, dtype=bool)
    mask[values[values <= bound]] = True
    return mask


# largest box radius per rank that keeps the numpy grid small
BOX_RADIUS_CAP = {1: 60, 2: 60, 3: 24, 4: 10}
RANDOM_MAX_T = 60


@st.composite
def positive_forms(draw) -> QuadraticForm:
    """Forms of rank <= 4 with every polynomial coefficient in -6..6."""
    n = draw(st.integers(1, 4))
    coeffs = {}
    for i in range(n):
        coeffs[(i, i)] = draw(st.integers(1, 6))
    for i in range(n):
        for j in range(i + 1, n):
            coeffs[(i, j)] = draw(st.integers(-6, 6))
    form = QuadraticForm.from_coefficients(n, coeffs)
    assume(form.is_positive_definite)
    return form


def oracle_bound(form: QuadraticForm) -> int:
    bound = RANDOM_MAX_T
    while bound > 1 and box_radius(form, bound) > BOX_RADIUS_CAP[form.n]:
        bound -= 1
    return bound


@pytest.mark.unit
class TestRandomOracle:
    """Random positive definite forms against a full box search."""

    @hsettings(
        max_examples=500,
        deadline=None,
        suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow],
    )
    @given(positive_forms(), st.data())
    def test_represented_set_matches_box_search(self, form: QuadraticForm, data) -> None:
        bound = oracle_bound(form)
        expected = box_mask(form, bound, box_radius(form, bound))
        assert represented_set(form, bound).tolist() == expected.tolist()
        t = data.draw(st.integers(0, bound))
        witness = represents(form, t)
        assert (witness is not None) == bool(expected[t])
        if witness is not None:
            assert check_witness(form, witness)


@pytest.mark.unit
class TestRepresents:
    """Tests for represents() and its helpers."""

    def test_four_squares_witness_is_deterministic(self, four_squares) -> None:
        assert represents(four_squares, 7).vector == (2, 1, 1, 1)

    def test_zero_and_negative(self) -> None:
        form = parse_form("x^2+y^2")
        assert represents(form, 0).vector == (0, 0)
        assert represents(form, -1) is None

    def test_not_represented(self) -> None:
        assert represents(parse_form("x^2+y^2+z^2"), 7) is None
        assert represents(parse_form("x^2+y^2"), 21) is None

    def test_indefinite_rejected(self) -> None:
        with pytest.raises(FormError):
            represents(parse_form("x^2-y^2"), 3)

    def test_naive_represents(self) -> None:
        form = parse_form("x^2+2y^2")
        assert naive_represents(form, 6, 3)
        assert not naive_represents(form, 5, 3)


@pytest.mark.unit
class TestValueTables:
    """Tests for represented_values, representation_counts and short_vectors."""

    def test_represented_values(self) -> None:
        assert represented_values(parse_form("x^2+y^2"), 10) == [1, 2, 4, 5, 8, 9, 10]

    def test_counts_sum_of_two_squares(self) -> None:
        assert representation_counts(parse_form("x^2+y^2"), 5) == [1, 4, 4, 0, 4, 8]

    def test_counts_four_squares(self, four_squares) -> None:
        """Jacobi: r_4(1) = 8, r_4(2) = 24, r_4(3) = 32."""
        assert representation_counts(four_squares, 3) == [1, 8, 24, 32]

    def test_short_vectors(self) -> None:
        vectors = short_vectors(parse_form("x^2+y^2"), 2)
        assert vectors == [
            ((-1, 0), 1),
            ((0, -1), 1),
            ((0, 1), 1),
            ((1, 0), 1),
            ((-1, -1), 2),
            ((-1, 1), 2),
            ((1, -1), 2),
            ((1, 1), 2),
        ]


@pytest.mark.unit
class TestTruant:
    """Tests for truant()."""

    @pytest.mark.parametrize(
        "text,expected",
        [
            ("x^2", 2),
            ("x^2+y^2", 3),
            ("x^2+2y^2", 5),
            ("x^2+y^2+z^2", 7),
            ("x^2+xy+y^2", 2),
        ],
    )
    def test_known_truants(self, text: str, expected: int) -> None:
        assert truant(parse_form(text), 100) == expected

    def test_exhausted_cap(self, four_squares) -> None:
        assert truant(four_squares, 100) is None

    def test_quaternary_exception(self) -> None:
        """x^2+2y^2+5z^2+5w^2 represents everything below 15."""
        form = parse_form("x^2+2y^2+5z^2+5w^2", n=4)
        assert truant(form, 1000) == 15

    def test_zero_and_degenerate(self) -> None:
        assert truant(QuadraticForm.zero(0), 10) == 1
        assert truant(QuadraticForm.zero(2), 10) == 1
        assert truant(parse_form("x^2+2xy+y^2"), 10) == 2

    def test_cap_must_be_positive(self) -> None:
        with pytest.raises(FormError):
            truant(parse_form("x^2"), 0)


@pytest.mark.unit
class TestBounds:
    """Value tables reject negative bounds."""

    @pytest.mark.parametrize("table", [represented_set, represented_values, representation_counts])
    def test_negative_bound(self, table) -> None:
        with pytest.raises(FormError, match="non-negative"):
            table(parse_form("x^2+y^2"), -1)

    def test_zero_bound(self) -> None:
        assert represented_set(parse_form("x^2+y^2"), 0).tolist() == [True]
        assert representation_counts(parse_form("x^2+y^2"), 0) == [1]
