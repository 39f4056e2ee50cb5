"""Exact computations on canonical blow-ups of Grassmannians."""

__version__ = "0.1.0"
