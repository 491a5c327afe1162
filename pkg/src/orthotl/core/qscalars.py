"""
core.qscalars: exact arithmetic in the field Q(v)

Laurent polynomials in v with rational coefficients, the field of fractions
built on top of them, and the quantum numbers used throughout the package.

USAGE EXAMPLES:
----------------
from orthotl.core.qscalars import Scalar, quantum_int, quantum_binom, specialize

two = quantum_int(2)              # v + v^-1
s = Scalar(1) / Scalar(two)       # 1/(v^2 + 1) * v
specialize(Scalar(two), Fraction(2))   # Fraction(5, 2)

HELPER NOTES:
-------------
- Every value is immutable and hashable; equality is structural because
  Scalars are kept in canonical form (see ``Scalar._normalize``).
- Polynomial gcds are delegated to sympy's sparse ring QQ[v]; Laurent-only
  arithmetic never touches sympy.
- Coefficients are ``fractions.Fraction`` (arbitrary precision).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Any, Iterator, Mapping, Union

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, ring

from orthotl.core.errors import PoleError

_QV, _GEN_V = ring("v", QQ)

Number = Union[int, Fraction]


def _as_fraction(c: Any) -> Fraction:
    """Convert ints, Fractions and sympy QQ elements to Fraction."""
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    return Fraction(int(c.numerator), int(c.denominator))


class LaurentPoly:
    """Finite map exponent -> nonzero rational coefficient."""

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Mapping[int, Number] | None = None) -> None:
        clean: dict[int, Fraction] = {}
        for exp, c in (coeffs or {}).items():
            frac = _as_fraction(c)
            if frac:
                clean[int(exp)] = frac
        self._coeffs = MappingProxyType(dict(sorted(clean.items())))
        self._hash: int | None = None

    # --- constructors -------------------------------------------------
    @classmethod
    def monomial(cls, exp: int, coeff: Number = 1) -> LaurentPoly:
        return cls({exp: coeff})

    @classmethod
    def constant(cls, c: Number) -> LaurentPoly:
        return cls({0: c})

    # --- inspection ---------------------------------------------------
    @property
    def coeffs(self) -> Mapping[int, Fraction]:
        return self._coeffs

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_monomial(self) -> bool:
        return len(self._coeffs) == 1

    @property
    def low(self) -> int:
        """Lowest exponent (valuation). The zero polynomial has none."""
        if not self._coeffs:
            raise ValueError("zero Laurent polynomial has no valuation")
        return next(iter(self._coeffs))

    @property
    def high(self) -> int:
        if not self._coeffs:
            raise ValueError("zero Laurent polynomial has no degree")
        return next(reversed(self._coeffs))

    def leading_coefficient(self) -> Fraction:
        return self._coeffs[self.high]

    def items(self) -> Iterator[tuple[int, Fraction]]:
        return iter(self._coeffs.items())

    # --- arithmetic ---------------------------------------------------
    def __add__(self, other: object) -> LaurentPoly:
        other_lp = _coerce_laurent(other)
        if other_lp is None:
            return NotImplemented
        out = dict(self._coeffs)
        for exp, c in other_lp._coeffs.items():
            out[exp] = out.get(exp, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: object) -> LaurentPoly:
        other_lp = _coerce_laurent(other)
        if other_lp is None:
            return NotImplemented
        return self + (-other_lp)

    def __rsub__(self, other: object) -> LaurentPoly:
        other_lp = _coerce_laurent(other)
        if other_lp is None:
            return NotImplemented
        return other_lp - self

    def __mul__(self, other: object) -> LaurentPoly:
        other_lp = _coerce_laurent(other)
        if other_lp is None:
            return NotImplemented
        out: dict[int, Fraction] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other_lp._coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if not self.is_monomial():
                raise PoleError(f"{self} is not a unit of the Laurent ring")
            ((exp, c),) = self._coeffs.items()
            return LaurentPoly({exp * k: c**k})
        result = LaurentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by v^k."""
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()})

    def scale(self, c: Number) -> LaurentPoly:
        return LaurentPoly({e: x * c for e, x in self._coeffs.items()})

    def bar(self) -> LaurentPoly:
        """The ring involution v -> v^-1."""
        return LaurentPoly({-e: c for e, c in self._coeffs.items()})

    def evaluate(self, v0: Number) -> Fraction:
        v0 = Fraction(v0)
        if v0 == 0 and self._coeffs and self.low < 0:
            raise PoleError(f"{self} has a pole at v = 0")
        return sum((c * v0**e for e, c in self._coeffs.items()), Fraction(0))

    # --- sympy bridge -------------------------------------------------
    def to_poly(self) -> tuple[PolyElement, int]:
        """Return (p, k) with self = v^k * p and p a polynomial in QQ[v] with p(0) != 0."""
        if not self._coeffs:
            return _QV.zero, 0
        k = self.low
        terms = {(e - k,): QQ(c.numerator, c.denominator) for e, c in self._coeffs.items()}
        return _QV.from_dict(terms), k

    @classmethod
    def from_poly(cls, p: PolyElement, shift: int = 0) -> LaurentPoly:
        return cls({monom[0] + shift: _as_fraction(c) for monom, c in p.items()})

    # --- comparison / hashing -----------------------------------------
    def __eq__(self, other: object) -> bool:
        other_lp = _coerce_laurent(other)
        if other_lp is None:
            return NotImplemented
        return self._coeffs == other_lp._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._coeffs.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    # --- serialization ------------------------------------------------
    def to_json(self) -> dict[str, list[int]]:
        return {str(e): [c.numerator, c.denominator] for e, c in self._coeffs.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> LaurentPoly:
        return cls({int(e): Fraction(int(pair[0]), int(pair[1])) for e, pair in data.items()})

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for exp, c in reversed(self._coeffs.items()):
            if exp == 0:
                mono = ""
            elif exp == 1:
                mono = "v"
            else:
                mono = f"v^{exp}"
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"


def _coerce_laurent(x: object) -> LaurentPoly | None:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly.constant(x)
    return None


LAURENT_ZERO = LaurentPoly()
LAURENT_ONE = LaurentPoly.constant(1)


class Scalar:
    """An element num/den of Q(v), always stored in canonical form.

    Canonical form: gcd(num, den) = 1, den is a polynomial with nonzero
    constant term (lowest v-exponent 0) and leading coefficient 1. Zero is 0/1.
    """

    __slots__ = ("num", "den", "_hash")

    num: LaurentPoly
    den: LaurentPoly

    def __init__(self, num: LaurentPoly | Number = 0, den: LaurentPoly | Number = 1) -> None:
        n = _coerce_laurent(num)
        d = _coerce_laurent(den)
        if n is None or d is None:
            raise TypeError(f"cannot build a Scalar from {num!r}/{den!r}")
        self.num, self.den = self._normalize(n, d)
        self._hash: int | None = None

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly = LAURENT_ONE) -> Scalar:
        """Bypass normalization; callers guarantee canonical form."""
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @staticmethod
    def _normalize(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
        if den.is_zero():
            raise PoleError(f"division by zero: {num}/0")
        if num.is_zero():
            return LAURENT_ZERO, LAURENT_ONE
        if den.is_monomial():
            ((exp, c),) = den.items()
            return num.shift(-exp).scale(1 / c), LAURENT_ONE
        p_num, k_num = num.to_poly()
        p_den, k_den = den.to_poly()
        _, p_num, p_den = p_num.cofactors(p_den)
        lead = p_den.LC
        p_num = p_num.quo_ground(lead)
        p_den = p_den.monic()
        new_den = LaurentPoly.from_poly(p_den)
        new_num = LaurentPoly.from_poly(p_num, k_num - k_den)
        if new_den.is_monomial():
            ((exp, c),) = new_den.items()
            return new_num.shift(-exp).scale(1 / c), LAURENT_ONE
        return new_num, new_den

    # --- inspection ---------------------------------------------------
    def is_laurent(self) -> bool:
        return self.den == LAURENT_ONE

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    # --- arithmetic ---------------------------------------------------
    def __add__(self, other: object) -> Scalar:
        o = _coerce_scalar(other)
        if o is None:
            return NotImplemented
        if self.is_laurent() and o.is_laurent():
            return Scalar._raw(self.num + o.num)
        if self.den == o.den:
            return Scalar(self.num + o.num, self.den)
        return Scalar(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> Scalar:
        return Scalar._raw(-self.num, self.den)

    def __sub__(self, other: object) -> Scalar:
        o = _coerce_scalar(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> Scalar:
        o = _coerce_scalar(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> Scalar:
        o = _coerce_scalar(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return SCALAR_ZERO
        if self.is_laurent() and o.is_laurent():
            return Scalar._raw(self.num * o.num)
        return Scalar(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        if self.is_zero():
            raise PoleError("the zero Scalar has no inverse")
        return Scalar(self.den, self.num)

    def __truediv__(self, other: object) -> Scalar:
        o = _coerce_scalar(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise PoleError(f"division of {self} by zero")
        return Scalar(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other: object) -> Scalar:
        o = _coerce_scalar(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int) -> Scalar:
        if k < 0:
            return self.inverse() ** (-k)
        if self.is_laurent():
            return Scalar._raw(self.num**k)
        return Scalar._raw(self.num**k, self.den**k)

    def bar(self) -> Scalar:
        """Apply v -> v^-1."""
        return Scalar(self.num.bar(), self.den.bar())

    def specialize(self, v0: Number) -> Fraction:
        return specialize(self, v0)

    # --- comparison / hashing -----------------------------------------
    def __eq__(self, other: object) -> bool:
        o = _coerce_scalar(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # --- serialization ------------------------------------------------
    def to_json(self) -> dict[str, dict[str, list[int]]]:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> Scalar:
        return cls(LaurentPoly.from_json(data["num"]), LaurentPoly.from_json(data["den"]))

    def __str__(self) -> str:
        if self.is_laurent():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"Scalar({str(self)!r})"


def _coerce_scalar(x: object) -> Scalar | None:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, LaurentPoly):
        return Scalar._raw(x)
    if isinstance(x, (int, Fraction)):
        return Scalar._raw(LaurentPoly.constant(x))
    return None


SCALAR_ZERO = Scalar._raw(LAURENT_ZERO)
SCALAR_ONE = Scalar._raw(LAURENT_ONE)


def as_scalar(x: Scalar | LaurentPoly | Number) -> Scalar:
    s = _coerce_scalar(x)
    if s is None:
        raise TypeError(f"cannot interpret {x!r} as a Scalar")
    return s


def vpow(k: int) -> Scalar:
    """The Scalar v^k."""
    return Scalar._raw(LaurentPoly.monomial(k))


@lru_cache(maxsize=None)
def quantum_int(k: int) -> LaurentPoly:
    """Balanced quantum integer [k] = sum_{t=0}^{k-1} v^{k-1-2t}, with [-k] = -[k]."""
    if k < 0:
        return -quantum_int(-k)
    return LaurentPoly({k - 1 - 2 * t: 1 for t in range(k)})


@lru_cache(maxsize=None)
def bracket(k: int) -> Scalar:
    """[k] as a Scalar."""
    return Scalar._raw(quantum_int(k))


@lru_cache(maxsize=None)
def quantum_factorial(k: int) -> LaurentPoly:
    if k < 0:
        raise ValueError(f"quantum factorial needs k >= 0, got {k}")
    result = LAURENT_ONE
    for j in range(1, k + 1):
        result = result * quantum_int(j)
    return result


@lru_cache(maxsize=None)
def quantum_binom(a: int, k: int) -> Scalar:
    """Quantum binomial [a choose k] = [a][a-1]...[a-k+1] / [k]!."""
    if k < 0:
        raise ValueError(f"quantum binomial needs k >= 0, got {k}")
    top = LAURENT_ONE
    for j in range(k):
        top = top * quantum_int(a - j)
    result = Scalar(top, quantum_factorial(k))
    if not result.is_laurent():
        raise ArithmeticError(f"quantum binomial [{a} choose {k}] did not reduce to a Laurent polynomial")
    return result


def specialize(s: Scalar | LaurentPoly | Number, v0: Number) -> Fraction:
    """Evaluation homomorphism v -> v0."""
    s = as_scalar(s)
    den = s.den.evaluate(v0)
    if den == 0:
        raise PoleError(f"{s} has a pole at v = {v0}")
    return s.num.evaluate(v0) / den


def is_nfact_nonzero(n: int, v0: Number) -> bool:
    """True iff [1], ..., [n] all specialize to nonzero values at v0."""
    if Fraction(v0) == 0:
        raise ValueError("v0 must be nonzero")
    return all(quantum_int(k).evaluate(v0) != 0 for k in range(1, n + 1))


def parse_rational(text: str) -> Fraction:
    """Parse a specialization value written as "p/q" or an integer."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"not a rational number: {text!r}") from e
