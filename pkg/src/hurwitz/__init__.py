"""Exact single Hurwitz numbers through several independent backends."""

__version__ = "0.1.0"
