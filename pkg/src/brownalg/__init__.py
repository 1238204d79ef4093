"""Exact models of the split Brown algebra, its fine grading, and E6/E7/E8."""

__version__ = "0.1.0"
