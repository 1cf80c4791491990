"""Exact computation with power-closed ideals of polynomial and Laurent rings."""

__version__ = "0.1.0"
