"""Exact f/h/gamma and local gamma computations for the interval subdivision."""

__version__ = "0.1.0"
