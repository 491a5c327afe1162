"""Orthogonal bases of quantum sl2 tensor space and Temperley-Lieb cell modules, in exact arithmetic."""

__version__ = "0.1.0"
