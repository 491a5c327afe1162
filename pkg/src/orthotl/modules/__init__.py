"""Tensor space, Schur algebra modules, maximal vectors and transition matrices."""
