"""Exact-arithmetic engine for matrix factorizations with finite-group symmetry."""

__version__ = "0.1.0"
