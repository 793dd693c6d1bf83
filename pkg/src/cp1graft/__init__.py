"""Computations with CP^1 structures on the thrice-punctured sphere."""

__version__ = "0.1.0"
