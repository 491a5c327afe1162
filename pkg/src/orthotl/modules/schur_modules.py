"""
modules.schur_modules: simple modules V(m) and the faithful representation of S(n)

The Schur algebra S(n) is generated by E, F and the idempotents 1_i,
i in X(n). Each simple module V(m), m in X(n)_+, has the basis
x_a = F^a x_0 (0 <= a <= m) with x_a of weight m - 2a, and

    F x_a = x_{a+1}   (0 if a = m)
    E x_a = [m-a+1][a] x_{a-1}   (0 if a = 0)
    1_i x_a = x_a if i = m - 2a, else 0.

Since S(n) is split semisimple when [n]! != 0, the direct sum of all V(m) is
faithful, so identities in S(n) are checked as equalities of block matrices.

USAGE EXAMPLES:
----------------
rep = FaithfulRep(3)
lhs = rep.word_matrix(GeneratorWord.parse("E F"))
rhs = rep.word_matrix(GeneratorWord.parse("F E"))
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Literal, Mapping, Sequence

from orthotl.combinatorics.shapes import dominant_weights, x_weights
from orthotl.core import matrices as mx
from orthotl.core.errors import InvalidCombinatorialDataError
from orthotl.core.matrices import ScalarMatrix
from orthotl.core.qscalars import (
    SCALAR_ONE,
    SCALAR_ZERO,
    Number,
    Scalar,
    as_scalar,
    bracket,
    quantum_binom,
    quantum_factorial,
    vpow,
)
from orthotl.utils.log import get_logger

logger = get_logger(__name__)

TokenKind = Literal["E", "F", "1", "K", "Kinv"]
Involution = Literal["omega", "sigma", "star"]


@dataclass(frozen=True)
class Token:
    """One letter of a word: E^a or F^a (divided when ``divided``), 1_i, K or K^-1."""

    kind: TokenKind
    param: int = 1
    divided: bool = False

    def __post_init__(self) -> None:
        if self.kind in ("E", "F") and self.param < 0:
            raise InvalidCombinatorialDataError(f"negative power {self.param} on {self.kind}")
        if self.kind in ("K", "Kinv") and self.param != 1:
            raise InvalidCombinatorialDataError("K tokens take no parameter")

    def __str__(self) -> str:
        if self.kind == "1":
            return f"1_{self.param}"
        if self.kind == "K":
            return "K"
        if self.kind == "Kinv":
            return "K^-1"
        if self.divided:
            return f"{self.kind}^({self.param})"
        return self.kind if self.param == 1 else f"{self.kind}^{self.param}"


def E(a: int = 1, divided: bool = False) -> Token:
    return Token("E", a, divided)


def F(a: int = 1, divided: bool = False) -> Token:
    return Token("F", a, divided)


def one(i: int) -> Token:
    return Token("1", i)


_TOKEN_RE = re.compile(r"(E|F)(?:\^\((\d+)\)|\^(\d+))?|1_(-?\d+)|K(\^-1)?")


@dataclass(frozen=True)
class GeneratorWord:
    """A product of tokens; the leftmost token acts last."""

    tokens: tuple[Token, ...] = ()

    @classmethod
    def parse(cls, text: str) -> GeneratorWord:
        """Read words such as ``"F^(2) 1_2 E"``, ``"E^3 F"`` or ``"K^-1 F"``."""
        tokens: list[Token] = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            if text[pos].isspace() or text[pos] == "*":
                pos += 1
                continue
            m = _TOKEN_RE.match(text, pos)
            if not m:
                raise InvalidCombinatorialDataError(f"cannot read a generator at {text[pos:]!r}")
            gen, div, power, idem, kinv = m.groups()
            if gen:
                if div is not None:
                    tokens.append(Token(gen, int(div), True))
                else:
                    tokens.append(Token(gen, int(power) if power else 1))
            elif idem is not None:
                tokens.append(one(int(idem)))
            else:
                tokens.append(Token("Kinv" if kinv else "K"))
            pos = m.end()
        return cls(tuple(tokens))

    @classmethod
    def of(cls, *tokens: Token) -> GeneratorWord:
        return cls(tuple(tokens))

    def __mul__(self, other: GeneratorWord) -> GeneratorWord:
        return GeneratorWord(self.tokens + other.tokens)

    def __len__(self) -> int:
        return len(self.tokens)

    def __str__(self) -> str:
        return " ".join(str(t) for t in self.tokens) or "1"


def apply_involution(w: GeneratorWord, which: Involution) -> GeneratorWord:
    """omega: E<->F, 1_i -> 1_-i. sigma: 1_i -> 1_-i, order reversed. star: E<->F, order reversed."""
    swap = {"E": "F", "F": "E", "K": "Kinv", "Kinv": "K"}

    def image(t: Token) -> Token:
        if which in ("omega", "star") and t.kind in ("E", "F"):
            t = Token(swap[t.kind], t.param, t.divided)
        if which in ("omega", "sigma"):
            if t.kind == "1":
                return one(-t.param)
            if t.kind in ("K", "Kinv"):
                return Token(swap[t.kind])
        return t

    tokens = [image(t) for t in w.tokens]
    if which in ("sigma", "star"):
        tokens.reverse()
    return GeneratorWord(tuple(tokens))


@dataclass(frozen=True)
class VmVector:
    """Coordinates along x_0, ..., x_m in V(m)."""

    m: int
    coords: Mapping[int, Scalar]

    @classmethod
    def basis(cls, m: int, a: int) -> VmVector:
        return cls(m, {a: SCALAR_ONE})

    def __post_init__(self) -> None:
        clean = {a: as_scalar(c) for a, c in self.coords.items() if c}
        if any(not 0 <= a <= self.m for a in clean):
            raise InvalidCombinatorialDataError(f"basis index out of range 0..{self.m}: {sorted(clean)}")
        object.__setattr__(self, "coords", clean)

    def __add__(self, other: VmVector) -> VmVector:
        out = dict(self.coords)
        for a, c in other.coords.items():
            out[a] = out.get(a, SCALAR_ZERO) + c
        return VmVector(self.m, out)

    def scale(self, c: Scalar | Number) -> VmVector:
        return VmVector(self.m, {a: x * c for a, x in self.coords.items()})


def _vm_step(kind: TokenKind, param: int, x: VmVector) -> VmVector:
    m = x.m
    out: dict[int, Scalar] = {}
    for a, c in x.coords.items():
        if kind == "F" and a < m:
            out[a + 1] = out.get(a + 1, SCALAR_ZERO) + c
        elif kind == "E" and a > 0:
            out[a - 1] = out.get(a - 1, SCALAR_ZERO) + c * bracket(m - a + 1) * bracket(a)
        elif kind == "1" and param == m - 2 * a:
            out[a] = c
        elif kind == "K":
            out[a] = c * vpow(m - 2 * a)
        elif kind == "Kinv":
            out[a] = c * vpow(2 * a - m)
    return VmVector(m, out)


def vm_act(token: Token, x: VmVector) -> VmVector:
    if token.kind in ("E", "F"):
        for _ in range(token.param):
            x = _vm_step(token.kind, 1, x)
        if token.divided:
            x = x.scale(Scalar(1, quantum_factorial(token.param)))
        return x
    return _vm_step(token.kind, token.param, x)


BlockMatrix = tuple[ScalarMatrix, ...]


class FaithfulRep:
    """The direct sum of V(m) over m in X(n)_+, one matrix block per m."""

    def __init__(self, n: int, weights: Sequence[int] | None = None) -> None:
        self.n = n
        self.weights = tuple(dominant_weights(n) if weights is None else weights)
        self._cache: dict[Token, BlockMatrix] = {}

    def truncate(self) -> FaithfulRep:
        """Drop the block V(n): a faithful representation of S(n-2), viewed as an S(n)-module."""
        return FaithfulRep(self.n, tuple(m for m in self.weights if m != self.n))

    def block_sizes(self) -> tuple[int, ...]:
        return tuple(m + 1 for m in self.weights)

    def identity(self) -> BlockMatrix:
        return tuple(mx.identity(m + 1) for m in self.weights)

    def zero(self) -> BlockMatrix:
        return tuple(mx.zeros(m + 1) for m in self.weights)

    def token_matrix(self, token: Token) -> BlockMatrix:
        if token not in self._cache:
            blocks = []
            for m in self.weights:
                block = mx.zeros(m + 1)
                for a in range(m + 1):
                    for b, c in vm_act(token, VmVector.basis(m, a)).coords.items():
                        block[b, a] = c
                blocks.append(block)
            self._cache[token] = tuple(blocks)
        return self._cache[token]

    def word_matrix(self, w: GeneratorWord | str) -> BlockMatrix:
        if isinstance(w, str):
            w = GeneratorWord.parse(w)
        result = self.identity()
        for token in w.tokens:
            result = matmul(result, self.token_matrix(token))
        return result

    def combination(self, terms: Iterable[tuple[Scalar | Number, GeneratorWord | str]]) -> BlockMatrix:
        """Matrix of a linear combination of words."""
        total = self.zero()
        for c, w in terms:
            total = add(total, scale(self.word_matrix(w), c))
        return total

    @cached_property
    def idempotent_sum(self) -> BlockMatrix:
        return self.combination((1, GeneratorWord.of(one(i))) for i in x_weights(self.n))


def matmul(a: BlockMatrix, b: BlockMatrix) -> BlockMatrix:
    return tuple(mx.matmul(x, y) for x, y in zip(a, b))


def add(a: BlockMatrix, b: BlockMatrix) -> BlockMatrix:
    return tuple(mx.add(x, y) for x, y in zip(a, b))


def scale(a: BlockMatrix, c: Scalar | Number) -> BlockMatrix:
    return tuple(mx.scale(x, c) for x in a)


def sub(a: BlockMatrix, b: BlockMatrix) -> BlockMatrix:
    return add(a, scale(b, -1))


def blocks_equal(a: BlockMatrix, b: BlockMatrix) -> bool:
    return len(a) == len(b) and all(mx.equal(x, y) for x, y in zip(a, b))


def blocks_rank(mats: Sequence[BlockMatrix], v0: Number) -> int:
    """Rank of the span of the given block matrices, each flattened to one row, at v = v0."""
    rows: list[list[Fraction]] = []
    for blocks in mats:
        row: list[Fraction] = []
        for block in blocks:
            row.extend(x for r in mx.specialize_matrix(block, v0) for x in r)
        rows.append(row)
    return mx.rank_of_rows(rows)


def schur_dimension(n: int) -> int:
    """dim S(n) = sum over m in X(n)_+ of (m+1)^2, which equals C(n+3, 3)."""
    return sum((m + 1) ** 2 for m in dominant_weights(n))


def lu_sides(rep: FaithfulRep, a: int, b: int, i: int, second: bool) -> tuple[BlockMatrix, BlockMatrix]:
    """Both sides of one of the divided-power commutation identities."""
    if not second:
        lhs = rep.word_matrix(GeneratorWord.of(E(a, True), one(-i), F(b, True)))
    else:
        lhs = rep.word_matrix(GeneratorWord.of(F(b, True), one(i), E(a, True)))
    rhs = rep.zero()
    for t in range(0, min(a, b) + 1):
        coeff = quantum_binom(a + b - i, t)
        if not coeff:
            continue
        if not second:
            word = GeneratorWord.of(F(b - t, True), one(-i + 2 * (a + b - t)), E(a - t, True))
        else:
            word = GeneratorWord.of(E(a - t, True), one(i - 2 * (a + b - t)), F(b - t, True))
        rhs = add(rhs, scale(rep.word_matrix(word), coeff))
    return lhs, rhs


def verify_lu_identity(n: int, a: int, b: int, i: int, rep: FaithfulRep | None = None) -> bool:
    """Check both displayed divided-power identities for (a, b, i) in the faithful representation."""
    rep = rep or FaithfulRep(n)
    return all(blocks_equal(*lu_sides(rep, a, b, i, second)) for second in (False, True))


def ef_commutation_sides(rep: FaithfulRep, a: int, e_first: bool) -> tuple[BlockMatrix, BlockMatrix]:
    """E F^a - F^a E against sum_i [i] sum_t F^{a-1-t} 1_i F^t (or the E/F-swapped identity)."""
    x, y = ("E", "F") if e_first else ("F", "E")
    lhs = sub(
        rep.word_matrix(GeneratorWord.of(Token(x), Token(y, a))),
        rep.word_matrix(GeneratorWord.of(Token(y, a), Token(x))),
    )
    rhs = rep.zero()
    for i in x_weights(rep.n):
        for t in range(a):
            word = GeneratorWord.of(Token(y, a - 1 - t), one(i), Token(y, t))
            rhs = add(rhs, scale(rep.word_matrix(word), bracket(i) if e_first else -bracket(i)))
    return lhs, rhs


def relation_checks(rep: FaithfulRep) -> dict[str, bool]:
    """The defining relations, in the form where 1_i = 0 for i outside X(n)."""
    n = rep.n
    idem = list(range(-n - 4, n + 5))
    results: dict[str, bool] = {}
    ok = True
    for i in idem:
        for j in idem:
            lhs = rep.word_matrix(GeneratorWord.of(one(i), one(j)))
            rhs = rep.word_matrix(GeneratorWord.of(one(i))) if i == j else rep.zero()
            ok = ok and blocks_equal(lhs, rhs)
    results["idempotents orthogonal"] = ok
    results["idempotents sum to 1"] = blocks_equal(rep.idempotent_sum, rep.identity())
    comm = sub(rep.word_matrix("E F"), rep.word_matrix("F E"))
    rhs = rep.combination((bracket(i), GeneratorWord.of(one(i))) for i in x_weights(n))
    results["EF - FE"] = blocks_equal(comm, rhs)
    ok = True
    for i in idem:
        ok = ok and blocks_equal(
            rep.word_matrix(GeneratorWord.of(E(), one(i))), rep.word_matrix(GeneratorWord.of(one(i + 2), E()))
        )
        ok = ok and blocks_equal(
            rep.word_matrix(GeneratorWord.of(F(), one(i))), rep.word_matrix(GeneratorWord.of(one(i - 2), F()))
        )
    results["E 1_i = 1_{i+2} E"] = ok
    k_form = rep.combination((vpow(i), GeneratorWord.of(one(i))) for i in x_weights(n))
    results["K = sum v^i 1_i"] = blocks_equal(rep.word_matrix("K"), k_form)
    results["K K^-1 = 1"] = blocks_equal(rep.word_matrix("K K^-1"), rep.identity())
    results["E^(n+1) = 0"] = blocks_equal(rep.word_matrix(GeneratorWord.of(E(n + 1))), rep.zero())
    results["F^(n+1) = 0"] = blocks_equal(rep.word_matrix(GeneratorWord.of(F(n + 1))), rep.zero())
    return results


def top_idempotent_sides(rep: FaithfulRep) -> tuple[BlockMatrix, BlockMatrix]:
    """1_{-n} against F^(n) 1_n E^(n)."""
    n = rep.n
    return (
        rep.word_matrix(GeneratorWord.of(one(-n))),
        rep.word_matrix(GeneratorWord.of(F(n, True), one(n), E(n, True))),
    )


def basis_words(n: int) -> list[GeneratorWord]:
    """F^(a) 1_m E^(b) for m in X(n)_+ and 0 <= a, b <= m."""
    return [
        GeneratorWord.of(F(a, True), one(m), E(b, True))
        for m in dominant_weights(n)
        for a in range(m + 1)
        for b in range(m + 1)
    ]


def spanning_words(n: int) -> list[GeneratorWord]:
    """F^a 1_i E^b for i in X(n) and 0 <= a, b <= n."""
    return [
        GeneratorWord.of(F(a), one(i), E(b)) for i in x_weights(n) for a in range(n + 1) for b in range(n + 1)
    ]


def basis_rank(n: int, v0: Number = 2, words: Sequence[GeneratorWord] | None = None) -> int:
    rep = FaithfulRep(n)
    words = basis_words(n) if words is None else words
    rank = blocks_rank([rep.word_matrix(w) for w in words], v0)
    logger.debug("rank of %d words in S(%d) at v=%s: %d", len(words), n, v0, rank)
    return rank


def involution_matrix_checks(rep: FaithfulRep, w1: GeneratorWord, w2: GeneratorWord) -> dict[str, bool]:
    """Involution identities at the matrix level for a pair of words."""
    omega2 = apply_involution(apply_involution(w1, "omega"), "omega")
    star_prod = apply_involution(w1 * w2, "star")
    return {
        "omega^2 = 1": omega2 == w1,
        "star reverses products": blocks_equal(
            rep.word_matrix(star_prod),
            rep.word_matrix(apply_involution(w2, "star") * apply_involution(w1, "star")),
        ),
        "star = omega sigma": apply_involution(apply_involution(w1, "sigma"), "omega") == apply_involution(w1, "star"),
    }
