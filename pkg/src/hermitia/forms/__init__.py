"""Integral quadratic forms: trace construction, reduction and equivalence."""
