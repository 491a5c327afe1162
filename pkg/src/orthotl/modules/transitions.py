"""
modules.transitions: change of basis between the nu and omega vectors

For 1-factors of one shape,

    nu(alpha)    = sum_{beta <= alpha} pi_{alpha,beta}  omega(beta)     (matrix P)
    omega(alpha) = sum_{beta <= alpha} pi'_{alpha,beta} nu(beta)        (matrix P')

P comes from a closed formula for the pairing <nu(alpha), omega(beta)> and the
orthogonality of the omega vectors. P' comes from the recursion that expands
omega(alpha^+) and omega(alpha^-) through Phi_1 and Phi_2. Neither is
computed from the other, so P P' = I is a genuine check.

The entries of P' are values at t_j = [j] of polynomials pi'' with
nonnegative integer coefficients, one monomial per diamond sequence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Literal, Mapping

import sympy

from orthotl.combinatorics.shapes import (
    EMPTY,
    OneFactor,
    Shape,
    diamond_sequences,
    dominated_by,
    enumerate_one_factors,
    is_compatible,
)
from orthotl.core import matrices as mx
from orthotl.core.errors import ShapeMismatchError
from orthotl.core.matrices import ScalarMatrix
from orthotl.core.qscalars import SCALAR_ONE, SCALAR_ZERO, Scalar, bracket, vpow
from orthotl.modules.maximal import build_nu, build_omega, nu_norm
from orthotl.modules.tensor_rep import bilinear_form
from orthotl.utils.log import get_logger

logger = get_logger(__name__)

MatrixKind = Literal["P", "Pprime"]
PMethod = Literal["closed", "gram"]


def _same_shape(alpha: OneFactor, beta: OneFactor) -> None:
    if alpha.shape != beta.shape:
        raise ShapeMismatchError(f"{alpha} has shape {alpha.shape} but {beta} has shape {beta.shape}")


def s_prime_values(alpha: OneFactor, beta: OneFactor) -> tuple[int, ...]:
    """s'_j: -s_j where alpha is +1 at the j-th (-1)-position of beta, else s_j + 1."""
    return tuple(
        -s if alpha.entry(pos) == 1 else s + 1 for s, pos in zip(beta.s_values(), beta.minus_positions())
    )


def pairing_value(alpha: OneFactor, beta: OneFactor) -> Scalar:
    """<nu(alpha), omega(beta)> by the closed formula."""
    _same_shape(alpha, beta)
    if not is_compatible(alpha, beta):
        return SCALAR_ZERO
    out = vpow(beta.num_pairs)
    for s in s_prime_values(alpha, beta):
        out = out * bracket(s)
    return out


@lru_cache(maxsize=None)
def _pairing_recursive(a: tuple[int, ...], b: tuple[int, ...]) -> Scalar:
    if not a:
        return SCALAR_ONE
    if sum(a) != sum(b):
        return SCALAR_ZERO
    a_prev, b_prev = a[:-1], b[:-1]
    if a[-1] == 1:
        return _pairing_recursive(a_prev, b_prev) if b[-1] == 1 else SCALAR_ZERO
    if b[-1] == -1:
        return vpow(1) * bracket(sum(b_prev) + 1) * _pairing_recursive(a_prev, b_prev)
    alpha_prev = OneFactor(a_prev)
    d = alpha_prev.weight
    total = SCALAR_ZERO
    for j in range(1, d):
        total = total + bracket(j) * _pairing_recursive(alpha_prev.link(j).entries, b_prev)
    return -(total / bracket(d)) if d > 1 else SCALAR_ZERO


def pairing_value_recursive(alpha: OneFactor, beta: OneFactor) -> Scalar:
    """<nu(alpha), omega(beta)> by recursion on the last entries of alpha and beta."""
    _same_shape(alpha, beta)
    return _pairing_recursive(alpha.entries, beta.entries)


def pairing_value_direct(alpha: OneFactor, beta: OneFactor) -> Scalar:
    """<nu(alpha), omega(beta)> computed in tensor space."""
    return bilinear_form(build_nu(alpha), build_omega(beta))


def pi_entry(alpha: OneFactor, beta: OneFactor, method: PMethod = "closed") -> Scalar:
    if method == "closed":
        return pairing_value(alpha, beta) / nu_norm(beta)
    w = build_omega(beta)
    return bilinear_form(build_nu(alpha), w) / bilinear_form(w, w)


@dataclass(frozen=True, eq=False)
class TransitionMatrix:
    shape: Shape
    kind: MatrixKind
    index: tuple[OneFactor, ...]
    entries: ScalarMatrix = field(repr=False)

    def position(self, alpha: OneFactor) -> int:
        return self.index.index(alpha)

    def entry(self, alpha: OneFactor, beta: OneFactor) -> Scalar:
        return self.entries[self.position(alpha), self.position(beta)]

    def row(self, alpha: OneFactor) -> dict[OneFactor, Scalar]:
        r = self.position(alpha)
        return {beta: self.entries[r, c] for c, beta in enumerate(self.index) if self.entries[r, c]}

    def is_triangular(self) -> bool:
        """Entry (alpha, beta) vanishes unless beta <= alpha."""
        return all(
            not self.entries[r, c] or dominated_by(beta, alpha)
            for r, alpha in enumerate(self.index)
            for c, beta in enumerate(self.index)
        )

    def has_nonzero_diagonal(self) -> bool:
        return all(self.entries[k, k] for k in range(len(self.index)))

    def __matmul__(self, other: TransitionMatrix) -> ScalarMatrix:
        return mx.matmul(self.entries, other.entries)

    def to_json(self) -> dict[str, Any]:
        return {
            "shape": [self.shape.lambda1, self.shape.lambda2],
            "kind": self.kind,
            "index": [alpha.to_json() for alpha in self.index],
            "entries": mx.to_json(self.entries),
        }


def expand_nu_in_omega(alpha: OneFactor) -> dict[OneFactor, Scalar]:
    """Row alpha of P: the nonzero pi_{alpha,beta}."""
    out = {}
    for beta in enumerate_one_factors(alpha.shape):
        c = pi_entry(alpha, beta)
        if c:
            out[beta] = c
    return out


@lru_cache(maxsize=None)
def _omega_in_nu(entries: tuple[int, ...]) -> Mapping[OneFactor, Scalar]:
    if not entries:
        return {EMPTY: SCALAR_ONE}
    prev = _omega_in_nu(entries[:-1])
    out: dict[OneFactor, Scalar] = {}
    if entries[-1] == 1:
        for beta, c in prev.items():
            out[beta.plus()] = c
        return out
    for beta, c in prev.items():
        for j in range(1, beta.weight + 1):
            key = beta.plus_link(j)
            out[key] = out.get(key, SCALAR_ZERO) + c * bracket(j)
    return {beta: c for beta, c in out.items() if c}


def expand_omega_in_nu(alpha: OneFactor) -> dict[OneFactor, Scalar]:
    """Row alpha of P', by the Phi_1 / Phi_2 recursion."""
    return dict(_omega_in_nu(alpha.entries))


@lru_cache(maxsize=None)
def matrix_P(shape: Shape, method: PMethod = "closed") -> TransitionMatrix:
    index = enumerate_one_factors(shape)
    entries = mx.zeros(len(index))
    for r, alpha in enumerate(index):
        for c, beta in enumerate(index):
            if method == "gram" or is_compatible(alpha, beta):
                entries[r, c] = pi_entry(alpha, beta, method)
    logger.debug("built P for shape %s by the %s route", shape, method)
    return TransitionMatrix(shape, "P", index, entries)


@lru_cache(maxsize=None)
def matrix_Pprime(shape: Shape) -> TransitionMatrix:
    index = enumerate_one_factors(shape)
    position = {alpha: k for k, alpha in enumerate(index)}
    entries = mx.zeros(len(index))
    for r, alpha in enumerate(index):
        for beta, c in expand_omega_in_nu(alpha).items():
            entries[r, position[beta]] = c
    return TransitionMatrix(shape, "Pprime", index, entries)


def inverse_checks(shape: Shape) -> tuple[bool, bool]:
    """(P P' = I, P' P = I)."""
    p, pp = matrix_P(shape), matrix_Pprime(shape)
    return mx.is_identity(p @ pp), mx.is_identity(pp @ p)


@dataclass(frozen=True)
class PairingPolynomial:
    """A polynomial in t_1, ..., t_m stored as exponent vector -> integer coefficient."""

    nvars: int
    terms: Mapping[tuple[int, ...], int]

    @classmethod
    def from_monomials(cls, nvars: int, monomials: list[dict[int, int]]) -> PairingPolynomial:
        out: dict[tuple[int, ...], int] = {}
        for mono in monomials:
            exps = tuple(mono.get(j, 0) for j in range(1, nvars + 1))
            out[exps] = out.get(exps, 0) + 1
        return cls(nvars, out)

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1 and next(iter(self.terms.values())) == 1

    def has_nonnegative_coefficients(self) -> bool:
        return all(c >= 0 for c in self.terms.values())

    def substitute_quantum(self) -> Scalar:
        """Value at t_j = [j]."""
        total = SCALAR_ZERO
        for exps, c in self.terms.items():
            term = Scalar(c)
            for j, e in enumerate(exps, start=1):
                if e:
                    term = term * bracket(j) ** e
            total = total + term
        return total

    def symbols(self) -> tuple[sympy.Symbol, ...]:
        return sympy.symbols(f"t1:{self.nvars + 1}") if self.nvars else ()

    def as_expr(self) -> sympy.Expr:
        t = self.symbols()
        return sympy.Add(*(c * sympy.Mul(*(t[j] ** e for j, e in enumerate(exps))) for exps, c in self.terms.items()))

    def to_json(self) -> list[list[Any]]:
        return [[list(exps), c] for exps, c in sorted(self.terms.items(), reverse=True)]

    def __str__(self) -> str:
        return str(sympy.expand(self.as_expr()))


def pi_double_prime(alpha: OneFactor, beta: OneFactor) -> PairingPolynomial:
    """Sum of the pairing monomials of all alpha-diamond-beta sequences."""
    _same_shape(alpha, beta)
    sequences = diamond_sequences(alpha, beta)
    return PairingPolynomial.from_monomials(alpha.max_weight, [s.monomial() for s in sequences])


def pipp_table(shape: Shape) -> dict[tuple[OneFactor, OneFactor], PairingPolynomial]:
    """All nonzero pi'' for pairs of 1-factors of the shape."""
    out = {}
    for alpha in enumerate_one_factors(shape):
        for beta in enumerate_one_factors(shape):
            poly = pi_double_prime(alpha, beta)
            if not poly.is_zero():
                out[(alpha, beta)] = poly
    return out
