"""Exact arithmetic for Apery-like sums and a checker for their congruences."""

__version__ = "0.1.0"
