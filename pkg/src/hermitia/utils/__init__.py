"""Utility functions for hermitia."""
