"""Command-line interface for hermitia."""
