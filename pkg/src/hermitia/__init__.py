"""Verification toolkit for universal binary Hermitian forms over imaginary quadratic fields."""

__all__ = ["__version__"]
__version__ = "0.1.0"
