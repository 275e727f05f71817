"""Universality criteria and the routes that certify a lattice."""
