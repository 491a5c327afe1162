"""Temperley-Lieb diagrams and cell modules."""
