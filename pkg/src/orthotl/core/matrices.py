"""
core.matrices: dense matrices over Q(v)

Matrices are numpy arrays of dtype ``object`` holding ``Scalar`` entries.
Products are written out by hand so that zero entries are skipped, which keeps
the triangular transition matrices and the sparse generator blocks cheap.
Ranks are computed exactly after specializing at a rational point, with
sympy's ``DomainMatrix`` over QQ.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from orthotl.core.errors import ShapeMismatchError
from orthotl.core.qscalars import SCALAR_ONE, SCALAR_ZERO, Number, Scalar, as_scalar, specialize

ScalarMatrix = np.ndarray


def zeros(rows: int, cols: int | None = None) -> ScalarMatrix:
    cols = rows if cols is None else cols
    out = np.empty((rows, cols), dtype=object)
    out.fill(SCALAR_ZERO)
    return out


def identity(size: int) -> ScalarMatrix:
    out = zeros(size)
    for k in range(size):
        out[k, k] = SCALAR_ONE
    return out


def from_rows(rows: Sequence[Sequence[Scalar | int | Fraction]]) -> ScalarMatrix:
    if not rows:
        return zeros(0)
    out = zeros(len(rows), len(rows[0]))
    for r, row in enumerate(rows):
        if len(row) != out.shape[1]:
            raise ShapeMismatchError(f"ragged row {r}: expected {out.shape[1]} entries, got {len(row)}")
        for c, x in enumerate(row):
            out[r, c] = as_scalar(x)
    return out


def matmul(a: ScalarMatrix, b: ScalarMatrix) -> ScalarMatrix:
    if a.shape[1] != b.shape[0]:
        raise ShapeMismatchError(f"cannot multiply {a.shape} by {b.shape}")
    out = zeros(a.shape[0], b.shape[1])
    b_rows = [[(c, b[k, c]) for c in range(b.shape[1]) if b[k, c]] for k in range(b.shape[0])]
    for r in range(a.shape[0]):
        acc: dict[int, Scalar] = {}
        for k in range(a.shape[1]):
            x = a[r, k]
            if not x:
                continue
            for c, y in b_rows[k]:
                acc[c] = acc.get(c, SCALAR_ZERO) + x * y
        for c, val in acc.items():
            out[r, c] = val
    return out


def add(a: ScalarMatrix, b: ScalarMatrix) -> ScalarMatrix:
    if a.shape != b.shape:
        raise ShapeMismatchError(f"cannot add {a.shape} and {b.shape}")
    out = zeros(*a.shape)
    for idx in np.ndindex(a.shape):
        out[idx] = a[idx] + b[idx]
    return out


def scale(a: ScalarMatrix, c: Scalar | Number) -> ScalarMatrix:
    c = as_scalar(c)
    out = zeros(*a.shape)
    for idx in np.ndindex(a.shape):
        if a[idx]:
            out[idx] = a[idx] * c
    return out


def equal(a: ScalarMatrix, b: ScalarMatrix) -> bool:
    return a.shape == b.shape and all(a[idx] == b[idx] for idx in np.ndindex(a.shape))


def is_identity(a: ScalarMatrix) -> bool:
    return a.shape[0] == a.shape[1] and equal(a, identity(a.shape[0]))


def is_diagonal(a: ScalarMatrix) -> bool:
    return all(not a[r, c] for r, c in np.ndindex(a.shape) if r != c)


def specialize_matrix(a: ScalarMatrix, v0: Number) -> list[list[Fraction]]:
    return [[specialize(a[r, c], v0) for c in range(a.shape[1])] for r in range(a.shape[0])]


def rank_of_rows(rows: Sequence[Sequence[Fraction]]) -> int:
    """Exact rank over QQ of a list of rational rows."""
    if not rows or not rows[0]:
        return 0
    width = len(rows[0])
    data = [[QQ(x.numerator, x.denominator) for x in row] for row in rows]
    return int(DomainMatrix(data, (len(data), width), QQ).rank())


def rank_at(a: ScalarMatrix, v0: Number) -> int:
    """Rank of ``a`` after the specialization v -> v0."""
    return rank_of_rows(specialize_matrix(a, v0))


def flatten(a: ScalarMatrix) -> list[Scalar]:
    return [a[idx] for idx in np.ndindex(a.shape)]


def to_json(a: ScalarMatrix) -> list[list[dict]]:
    return [[a[r, c].to_json() for c in range(a.shape[1])] for r in range(a.shape[0])]
