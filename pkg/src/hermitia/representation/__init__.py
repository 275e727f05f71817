"""Exact representation testing by lattice-point enumeration."""
