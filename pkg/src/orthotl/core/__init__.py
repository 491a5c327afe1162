"""Exact scalars, errors and dense matrices over Q(v)."""
