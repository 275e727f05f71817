"""Classification driver.

Reproduces the trace-form tables for the catalog, certifies every lattice and
cross-checks the escalator claims, duplicate pairs and negative controls.
"""

from .controls import NegativeControl, negative_controls  # noqa: F401
from .driver import ClassificationReport, verify_classification  # noqa: F401
