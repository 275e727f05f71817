"""Test suite for hermitia.

Unit tests live in ``unit/``; full escalation trees and the catalog run in
``integration/``. Run ``pytest -m "not slow"`` for the quick subset.
"""
