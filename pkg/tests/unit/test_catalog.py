"""Unit tests for the embedded catalog data."""

from collections import Counter

import pytest

from hermitia.core.catalog import (
    catalog,
    catalog_entries,
    duplicate_pairs,
    escalator_claims,
    get_entry,
    negative_control_lattices,
)
from hermitia.forms.polynomial import parse_form
from hermitia.forms.trace import trace_form


@pytest.mark.unit
class TestCatalog:
    """Tests for the 25 universal binary lattices."""

    def test_size_and_tables(self) -> None:
        entries = catalog_entries()
        assert len(entries) == 25
        assert Counter(e.table for e in entries) == {"diagonal": 9, "nondiagonal": 8, "nonfree": 8}

    def test_fields(self) -> None:
        assert {lattice.field.m for lattice in catalog()} == {1, 2, 3, 5, 6, 7, 10, 11, 15, 19, 23, 31}

    def test_labels_unique_and_resolvable(self) -> None:
        labels = [e.label for e in catalog_entries()]
        assert len(set(labels)) == 25
        for label in labels:
            assert get_entry(label).label == label
        assert get_entry("Qm99:<1,1>") is None

    def test_all_binary(self) -> None:
        for lattice in catalog():
            assert lattice.rank == 2

    def test_nonfree_presentations(self) -> None:
        for entry in catalog_entries():
            assert entry.lattice.is_free_presentation == (entry.table != "nonfree")

    def test_printed_forms_are_quaternary(self) -> None:
        for entry in catalog_entries():
            assert parse_form(entry.printed, n=4).is_positive_definite
            if entry.erratum:
                assert parse_form(entry.erratum, n=4).is_positive_definite

    def test_errata(self) -> None:
        assert sorted(e.label for e in catalog_entries() if e.erratum) == [
            "Qm10:<1>+[2,w,5]",
            "Qm2:<1,3>",
        ]

    def test_erratum_for_q_sqrt_minus_2(self) -> None:
        """<1,3> over Q(sqrt(-2)) gives w^2 + 2x^2 + 3y^2 + 6z^2, determinant 36 * 16."""
        entry = get_entry("Qm2:<1,3>")
        form = trace_form(entry.lattice)
        assert form.gram2 == parse_form(entry.erratum).gram2
        assert form.determinant == 36 * 16


@pytest.mark.unit
class TestReferenceData:
    """Duplicate pairs, escalator claims and negative controls."""

    def test_duplicate_pairs(self) -> None:
        pairs = duplicate_pairs()
        assert len(pairs) == 2
        for first, second in pairs:
            a, b = get_entry(first), get_entry(second)
            assert a.m == b.m
            assert a.printed == b.printed

    def test_escalator_claims(self) -> None:
        claims = escalator_claims()
        assert claims["escalators"] == ["w^2+wx+2x^2+3y^2+3yz+6z^2"]
        assert len(claims["non_escalators"]) == 11

    def test_negative_controls_are_not_in_catalog(self) -> None:
        controls = negative_control_lattices()
        labels = {e.label for e in catalog_entries()}
        assert len(controls) == 4
        assert not any(c.label in labels for c in controls)
