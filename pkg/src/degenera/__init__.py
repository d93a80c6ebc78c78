"""Combinatorial non-splitness certificates for conics of totally degenerate curves."""

__version__ = "0.1.0"
