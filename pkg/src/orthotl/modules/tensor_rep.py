"""
modules.tensor_rep: the tensor space V^{(x)n}

Vectors are sparse maps from sign tuples (i_1, ..., i_n), i_k in {1, -1}, to
nonzero Scalars. Once more than half of the 2^n basis tensors carry a
coefficient, sums and pairings switch to a dense object array indexed by the
packed sign mask (bit k set when i_{k+1} = -1). The basis tensors
y_{i_1,...,i_n} are orthonormal for the bilinear form, and y_i has weight i.

The Schur-algebra generators act by iterating the coproduct
E -> E(x)1 + K(x)E and F -> F(x)K^{-1} + 1(x)F, which on a basis tensor gives
a positional rule: E raises a -1 in position j to +1 with factor
v^(sum of the entries left of j); F lowers a +1 in position j to -1 with
factor v^-(sum of the entries right of j).

USAGE EXAMPLES:
----------------
y = TensorVector.basis((1, 1))
act_F(y)                      # y_{1,-1} + v^-1 y_{-1,1}
bilinear_form(act_F(y), y)    # 0
"""

from __future__ import annotations

import random
from fractions import Fraction
from types import MappingProxyType
from typing import Any, Callable, Iterable, Iterator, Mapping

import numpy as np

from orthotl.core.errors import InhomogeneousError, LengthMismatchError, ZeroVectorError
from orthotl.core.matrices import ScalarMatrix, rank_at, zeros
from orthotl.core.qscalars import (
    SCALAR_ONE,
    SCALAR_ZERO,
    LaurentPoly,
    Number,
    Scalar,
    as_scalar,
    bracket,
    specialize,
    vpow,
)

Signs = tuple[int, ...]

DENSE_THRESHOLD = 0.5


def pack_signs(signs: Iterable[int]) -> int:
    mask = 0
    for k, e in enumerate(signs):
        if e == -1:
            mask |= 1 << k
    return mask


def unpack_signs(mask: int, n: int) -> Signs:
    return tuple(-1 if mask >> k & 1 else 1 for k in range(n))


class TensorVector:
    """A Q(v)-linear combination of basis tensors of a fixed length n."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[Signs, Scalar | LaurentPoly | Number] | None = None) -> None:
        self.n = n
        clean: dict[Signs, Scalar] = {}
        for signs, c in (terms or {}).items():
            signs = tuple(signs)
            if len(signs) != n or any(s not in (1, -1) for s in signs):
                raise LengthMismatchError(f"sign vector {signs} is not in {{1,-1}}^{n}")
            c = as_scalar(c)
            if c:
                clean[signs] = c
        self._terms = MappingProxyType(clean)

    @classmethod
    def _from_clean(cls, n: int, terms: dict[Signs, Scalar]) -> TensorVector:
        obj = cls.__new__(cls)
        obj.n = n
        obj._terms = MappingProxyType({s: c for s, c in terms.items() if c})
        return obj

    @classmethod
    def zero(cls, n: int) -> TensorVector:
        return cls._from_clean(n, {})

    @classmethod
    def basis(cls, signs: Iterable[int]) -> TensorVector:
        signs = tuple(signs)
        return cls(len(signs), {signs: SCALAR_ONE})

    @classmethod
    def unit(cls) -> TensorVector:
        """The vector 1 of the degree-0 tensor space."""
        return cls._from_clean(0, {(): SCALAR_ONE})

    # --- inspection ---------------------------------------------------
    @property
    def terms(self) -> Mapping[Signs, Scalar]:
        return self._terms

    def __iter__(self) -> Iterator[tuple[Signs, Scalar]]:
        return iter(sorted(self._terms.items(), key=lambda kv: tuple(-s for s in kv[0])))

    def __len__(self) -> int:
        return len(self._terms)

    def coeff(self, signs: Iterable[int]) -> Scalar:
        return self._terms.get(tuple(signs), SCALAR_ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def density(self) -> float:
        """Share of the 2^n basis tensors with a nonzero coefficient."""
        return len(self._terms) / 2**self.n

    def is_dense(self) -> bool:
        return self.density > DENSE_THRESHOLD

    def to_dense(self) -> np.ndarray:
        """Coefficients as an object array of length 2^n indexed by packed sign masks."""
        out = np.empty(2**self.n, dtype=object)
        out.fill(SCALAR_ZERO)
        for s, c in self._terms.items():
            out[pack_signs(s)] = c
        return out

    @classmethod
    def from_dense(cls, n: int, coeffs: np.ndarray) -> TensorVector:
        if coeffs.shape != (2**n,):
            raise LengthMismatchError(f"dense coefficients of shape {coeffs.shape} for tensors of length {n}")
        return cls._from_clean(n, {unpack_signs(m, n): as_scalar(c) for m, c in enumerate(coeffs) if c})

    def weights(self) -> set[int]:
        return {sum(s) for s in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.weights()) <= 1

    def weight(self) -> int:
        """The common weight of a nonzero homogeneous vector."""
        ws = self.weights()
        if len(ws) != 1:
            raise InhomogeneousError(f"vector has weights {sorted(ws)}, expected exactly one")
        return next(iter(ws))

    # --- linear structure ---------------------------------------------
    def _check(self, other: TensorVector) -> None:
        if self.n != other.n:
            raise LengthMismatchError(f"tensor lengths differ: {self.n} vs {other.n}")

    def __add__(self, other: TensorVector) -> TensorVector:
        if not isinstance(other, TensorVector):
            return NotImplemented
        self._check(other)
        if self.is_dense() and other.is_dense():
            return TensorVector.from_dense(self.n, self.to_dense() + other.to_dense())
        out = dict(self._terms)
        for s, c in other._terms.items():
            out[s] = out.get(s, SCALAR_ZERO) + c
        return TensorVector._from_clean(self.n, out)

    def __neg__(self) -> TensorVector:
        return TensorVector._from_clean(self.n, {s: -c for s, c in self._terms.items()})

    def __sub__(self, other: TensorVector) -> TensorVector:
        if not isinstance(other, TensorVector):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Scalar | LaurentPoly | Number) -> TensorVector:
        c = as_scalar(c)
        if not c:
            return TensorVector.zero(self.n)
        return TensorVector._from_clean(self.n, {s: x * c for s, x in self._terms.items()})

    def __rmul__(self, c: Scalar | LaurentPoly | Number) -> TensorVector:
        if isinstance(c, (Scalar, LaurentPoly, int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def tensor(self, other: TensorVector) -> TensorVector:
        out: dict[Signs, Scalar] = {}
        for s1, c1 in self._terms.items():
            for s2, c2 in other._terms.items():
                out[s1 + s2] = c1 * c2
        return TensorVector._from_clean(self.n + other.n, out)

    def __matmul__(self, other: TensorVector) -> TensorVector:
        if not isinstance(other, TensorVector):
            return NotImplemented
        return self.tensor(other)

    def map_terms(
        self, fn: Callable[[Signs, Scalar], Iterable[tuple[Signs, Scalar]]], n: int | None = None
    ) -> TensorVector:
        """Linear extension of a map on basis tensors."""
        out: dict[Signs, Scalar] = {}
        for s, c in self._terms.items():
            for t, d in fn(s, c):
                out[t] = out.get(t, SCALAR_ZERO) + d
        return TensorVector._from_clean(self.n if n is None else n, out)

    # --- comparison ---------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorVector):
            return NotImplemented
        return self.n == other.n and dict(self._terms) == dict(other._terms)

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._terms.items())))

    # --- serialization ------------------------------------------------
    def to_json(self) -> dict[str, Any]:
        return {"n": self.n, "terms": [{"signs": list(s), "coeff": c.to_json()} for s, c in self]}

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> TensorVector:
        return cls(int(data["n"]), {tuple(t["signs"]): Scalar.from_json(t["coeff"]) for t in data["terms"]})

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for s, c in self:
            label = "y_{" + ",".join(str(x) for x in s) + "}"
            parts.append(label if c == SCALAR_ONE else f"({c})*{label}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"TensorVector(n={self.n}, {self})"


def tensor(*vectors: TensorVector) -> TensorVector:
    result = TensorVector.unit()
    for x in vectors:
        result = result.tensor(x)
    return result


def y(*signs: int) -> TensorVector:
    """Shorthand for the basis tensor y_{signs}."""
    return TensorVector.basis(signs)


def act_E(x: TensorVector) -> TensorVector:
    def on_basis(s: Signs, c: Scalar) -> Iterator[tuple[Signs, Scalar]]:
        left = 0
        for j, e in enumerate(s):
            if e == -1:
                yield s[:j] + (1,) + s[j + 1 :], c * vpow(left)
            left += e

    return x.map_terms(on_basis)


def act_F(x: TensorVector) -> TensorVector:
    def on_basis(s: Signs, c: Scalar) -> Iterator[tuple[Signs, Scalar]]:
        right = sum(s)
        for j, e in enumerate(s):
            right -= e
            if e == 1:
                yield s[:j] + (-1,) + s[j + 1 :], c * vpow(-right)

    return x.map_terms(on_basis)


def act_K(x: TensorVector) -> TensorVector:
    """K = sum_i v^i 1_i."""
    return x.map_terms(lambda s, c: [(s, c * vpow(sum(s)))])


def act_K_inverse(x: TensorVector) -> TensorVector:
    return x.map_terms(lambda s, c: [(s, c * vpow(-sum(s)))])


def act_weight_idempotent(i: int, x: TensorVector) -> TensorVector:
    """1_i: projection onto the weight-i component."""
    return x.map_terms(lambda s, c: [(s, c)] if sum(s) == i else [])


def act_power(op: Callable[[TensorVector], TensorVector], a: int, x: TensorVector) -> TensorVector:
    for _ in range(a):
        x = op(x)
    return x


def bilinear_form(x: TensorVector, z: TensorVector) -> Scalar:
    """The symmetric form making the basis tensors orthonormal."""
    if x.n != z.n:
        raise LengthMismatchError(f"cannot pair tensors of lengths {x.n} and {z.n}")
    if x.is_dense() and z.is_dense():
        dense: Scalar = sum(x.to_dense() * z.to_dense(), SCALAR_ZERO)
        return dense
    small, large = (x, z) if len(x) <= len(z) else (z, x)
    total = SCALAR_ZERO
    for s, c in small.terms.items():
        d = large.terms.get(s)
        if d is not None:
            total = total + c * d
    return total


def is_maximal(x: TensorVector) -> bool:
    """True iff E kills the nonzero vector x."""
    if x.is_zero():
        raise ZeroVectorError("maximality is only defined for nonzero vectors")
    return act_E(x).is_zero()


def is_invariant(x: TensorVector) -> bool:
    """Weight 0 and killed by both E and F."""
    return x.weights() <= {0} and act_E(x).is_zero() and act_F(x).is_zero()


def specialize_vector(x: TensorVector, v0: Number) -> dict[Signs, Fraction]:
    out = {}
    for s, c in x.terms.items():
        val = specialize(c, v0)
        if val:
            out[s] = val
    return out


def weight_space_basis(n: int, k: int) -> list[Signs]:
    """Sign tuples of length n with entry sum k, in lexicographic order with +1 first."""
    if (n - k) % 2 or abs(k) > n:
        return []
    out: list[Signs] = []

    def grow(prefix: list[int], plus_left: int, minus_left: int) -> None:
        if not plus_left and not minus_left:
            out.append(tuple(prefix))
            return
        for e, p, m in ((1, plus_left - 1, minus_left), (-1, plus_left, minus_left - 1)):
            if p >= 0 and m >= 0:
                prefix.append(e)
                grow(prefix, p, m)
                prefix.pop()

    grow([], (n + k) // 2, (n - k) // 2)
    return out


def all_signs(n: int) -> list[Signs]:
    return [s for k in range(n, -n - 1, -2) for s in weight_space_basis(n, k)]


def operator_matrix(
    op: Callable[[TensorVector], TensorVector], domain: list[Signs], codomain: list[Signs]
) -> ScalarMatrix:
    """Matrix of ``op`` from span(domain) to span(codomain); columns are images."""
    index = {s: r for r, s in enumerate(codomain)}
    out = zeros(len(codomain), len(domain))
    for col, s in enumerate(domain):
        for t, c in op(TensorVector.basis(s)).terms.items():
            out[index[t], col] = c
    return out


def maximal_space_dimension(n: int, k: int, v0: Number = 2) -> int:
    """dim ker(E) on the weight-k space, computed at v = v0."""
    domain = weight_space_basis(n, k)
    if not domain:
        return 0
    codomain = weight_space_basis(n, k + 2)
    if not codomain:
        return len(domain)
    return len(domain) - rank_at(operator_matrix(act_E, domain, codomain), v0)


def vectors_matrix(vectors: list[TensorVector], basis: list[Signs]) -> ScalarMatrix:
    """Coordinates of the vectors as rows."""
    index = {s: c for c, s in enumerate(basis)}
    out = zeros(len(vectors), len(basis))
    for r, x in enumerate(vectors):
        for s, c in x.terms.items():
            out[r, index[s]] = c
    return out


def gram_matrix(vectors: list[TensorVector]) -> ScalarMatrix:
    size = len(vectors)
    out = zeros(size)
    for r in range(size):
        for c in range(r, size):
            val = bilinear_form(vectors[r], vectors[c])
            out[r, c] = val
            out[c, r] = val
    return out


def random_scalar(rng: random.Random, spread: int = 2) -> Scalar:
    """A small random Laurent polynomial with integer coefficients."""
    coeffs = {e: rng.randint(-3, 3) for e in range(-spread, spread + 1) if rng.random() < 0.5}
    return Scalar(LaurentPoly(coeffs))


def random_vector(n: int, rng: random.Random, weight: int | None = None, density: float = 0.5) -> TensorVector:
    """Random vector, homogeneous of ``weight`` when given."""
    signs = weight_space_basis(n, weight) if weight is not None else all_signs(n)
    terms = {s: random_scalar(rng) for s in signs if rng.random() < density}
    if not any(terms.values()) and signs:
        terms[rng.choice(signs)] = SCALAR_ONE
    return TensorVector(n, terms)


def commutator_rhs(x: TensorVector) -> TensorVector:
    """sum_i [i] 1_i (x)."""
    return x.map_terms(lambda s, c: [(s, c * bracket(sum(s)))])

