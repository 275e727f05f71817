"""Input/output utilities for hermitia."""
