"""
combinatorics.shapes: 1-factors and the index sets in bijection with them

A 1-factor of length n is a sequence of +1/-1 entries whose partial sums are
never negative. Each +1 is either paired with the first later -1 that brings
the running sum back to its level, or left unpaired as a defect. The same
data appears as a walk on the Bratteli diagram of two-row partitions, as a
link diagram on n points, and as a standard tableau with at most two rows;
``convert`` moves between the four.

Positions and defect indices are 1-based everywhere in this module.

USAGE EXAMPLES:
----------------
alpha = OneFactor((1, 1, -1, -1))
alpha.pairs          # ((2, 3), (1, 4))
alpha.defects        # ()
enumerate_one_factors(Shape(2, 1))
compare_dominance(OneFactor((1, -1, 1)), OneFactor((1, 1, -1)))   # Dominance.LESS
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterator, Literal, Sequence, Union

from orthotl.core.errors import InvalidCombinatorialDataError, LengthMismatchError
from orthotl.utils.log import get_logger

logger = get_logger(__name__)

IndexKind = Literal["one_factor", "walk", "link", "tableau"]


@dataclass(frozen=True, order=True)
class Shape:
    """A partition (lambda1, lambda2) with at most two rows."""

    lambda1: int
    lambda2: int

    def __post_init__(self) -> None:
        if self.lambda2 < 0 or self.lambda1 < self.lambda2:
            raise InvalidCombinatorialDataError(f"({self.lambda1},{self.lambda2}) is not a two-row partition")

    @property
    def n(self) -> int:
        return self.lambda1 + self.lambda2

    @property
    def weight(self) -> int:
        """lambda1 - lambda2, the highest weight of the matching simple module."""
        return self.lambda1 - self.lambda2

    @classmethod
    def from_weight(cls, n: int, weight: int) -> Shape:
        if weight < 0 or weight > n or (n - weight) % 2:
            raise InvalidCombinatorialDataError(f"no two-row partition of {n} has weight {weight}")
        return cls((n + weight) // 2, (n - weight) // 2)

    @classmethod
    def parse(cls, text: str) -> Shape:
        try:
            l1, l2 = (int(part) for part in text.split(","))
        except ValueError as e:
            raise InvalidCombinatorialDataError(f"shape must be written 'L1,L2', got {text!r}") from e
        return cls(l1, l2)

    def __str__(self) -> str:
        return f"{self.lambda1},{self.lambda2}"


def x_weights(n: int) -> list[int]:
    """X(n) = {n, n-2, ..., -n}."""
    return list(range(n, -n - 1, -2))


def dominant_weights(n: int) -> list[int]:
    """X(n)_+ = the nonnegative elements of X(n)."""
    return [i for i in x_weights(n) if i >= 0]


def shapes_of(n: int) -> list[Shape]:
    """Lambda(n), starting with the one-row shape (n, 0)."""
    return [Shape.from_weight(n, w) for w in dominant_weights(n)]


@dataclass(frozen=True)
class OneFactor:
    entries: tuple[int, ...]
    weight_sequence: tuple[int, ...] = field(init=False, repr=False, compare=False)
    pairs: tuple[tuple[int, int], ...] = field(init=False, repr=False, compare=False)
    defects: tuple[int, ...] = field(init=False, repr=False, compare=False)
    partner: dict[int, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        entries = tuple(int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        running, sums = 0, []
        stack: list[int] = []
        pairs: list[tuple[int, int]] = []
        for pos, e in enumerate(entries, start=1):
            if e == 1:
                stack.append(pos)
            elif e == -1:
                if not stack:
                    raise InvalidCombinatorialDataError(f"{entries} has a negative partial sum at position {pos}")
                pairs.append((stack.pop(), pos))
            else:
                raise InvalidCombinatorialDataError(f"{entries} has entry {e!r}; only +1 and -1 are allowed")
            running += e
            sums.append(running)
        partner = {}
        for i, j in pairs:
            partner[i], partner[j] = j, i
        object.__setattr__(self, "weight_sequence", tuple(sums))
        object.__setattr__(self, "pairs", tuple(pairs))
        object.__setattr__(self, "defects", tuple(stack))
        object.__setattr__(self, "partner", partner)

    @classmethod
    def parse(cls, text: str) -> OneFactor:
        """Parse ``"1,1,-1"`` (also accepts ``+``/``-`` characters, e.g. ``"++-"``)."""
        text = text.strip()
        if not text:
            return cls(())
        if "," in text:
            return cls(tuple(int(tok) for tok in text.split(",")))
        signs = {"+": 1, "-": -1}
        try:
            return cls(tuple(signs[ch] for ch in text))
        except KeyError as e:
            raise InvalidCombinatorialDataError(f"cannot read a 1-factor from {text!r}") from e

    # --- basic data ---------------------------------------------------
    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def entry(self, i: int) -> int:
        """alpha_i, 1-based."""
        return self.entries[i - 1]

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def weight(self) -> int:
        """i_alpha: the entry sum, equal to the number of defects."""
        return self.weight_sequence[-1] if self.entries else 0

    @property
    def num_pairs(self) -> int:
        return len(self.pairs)

    @property
    def shape(self) -> Shape:
        return Shape(self.n - self.num_pairs, self.num_pairs)

    def is_defect(self, i: int) -> bool:
        return self.entry(i) == 1 and i not in self.partner

    # --- derived 1-factors --------------------------------------------
    def plus(self) -> OneFactor:
        """alpha^+ = alpha || (1)."""
        return OneFactor(self.entries + (1,))

    def minus(self) -> OneFactor:
        """alpha^- = alpha || (-1); needs at least one defect."""
        if self.weight == 0:
            raise InvalidCombinatorialDataError(f"{self.entries} has no defect, so alpha^- is not a 1-factor")
        return OneFactor(self.entries + (-1,))

    def concat(self, other: OneFactor) -> OneFactor:
        return OneFactor(self.entries + other.entries)

    def link(self, j: int) -> OneFactor:
        """alpha^(j): link the j-th defect with the next one."""
        if not 1 <= j < len(self.defects):
            raise InvalidCombinatorialDataError(
                f"cannot link defect {j} of {self.entries}: it has {len(self.defects)} defects"
            )
        k = self.defects[j]
        return OneFactor(self.entries[: k - 1] + (-1,) + self.entries[k:])

    def plus_link(self, j: int) -> OneFactor:
        """alpha^{+(j)} = (alpha^+)^(j), for 1 <= j <= i_alpha."""
        return self.plus().link(j)

    def flip(self, i: int) -> tuple[int, ...]:
        """Entries with positions i and i+1 negated (not validated)."""
        e = list(self.entries)
        e[i - 1], e[i] = -e[i - 1], -e[i]
        return tuple(e)

    # --- statistics ---------------------------------------------------
    def w(self, i: int) -> int:
        """w_i(alpha) = alpha_1 + ... + alpha_{i-1}."""
        return self.weight_sequence[i - 2] if i >= 2 else 0

    @property
    def max_weight(self) -> int:
        """m(alpha), the largest entry of the weight sequence."""
        return max(self.weight_sequence, default=0)

    def s_values(self) -> tuple[int, ...]:
        """s_j = partial sum just before the j-th (-1)-entry, j = 1..m."""
        return tuple(self.w(j) for _, j in self.pairs)

    def minus_positions(self) -> tuple[int, ...]:
        return tuple(j for _, j in self.pairs)

    # --- serialization ------------------------------------------------
    def to_json(self) -> list[int]:
        return list(self.entries)

    def __str__(self) -> str:
        return "(" + ",".join(str(e) for e in self.entries) + ")"


EMPTY = OneFactor(())


@dataclass(frozen=True)
class BratteliWalk:
    """Edges 'V' (box added to the first row) and 'D' (box added to the second row)."""

    edges: str

    def __post_init__(self) -> None:
        rows = [0, 0]
        for pos, e in enumerate(self.edges, start=1):
            if e not in "VD":
                raise InvalidCombinatorialDataError(f"walk edge {e!r} at step {pos} is neither 'V' nor 'D'")
            rows[e == "D"] += 1
            if rows[1] > rows[0]:
                raise InvalidCombinatorialDataError(f"walk {self.edges} leaves the Bratteli diagram at step {pos}")

    @property
    def shape(self) -> Shape:
        d = self.edges.count("D")
        return Shape(len(self.edges) - d, d)

    def to_json(self) -> str:
        return self.edges


@dataclass(frozen=True)
class LinkDiagramHalf:
    """Non-crossing links on points 1..n; unlinked points are defects."""

    n: int
    links: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        links = tuple(sorted((min(a, b), max(a, b)) for a, b in self.links))
        object.__setattr__(self, "links", links)
        seen: set[int] = set()
        for i, j in links:
            if not 1 <= i < j <= self.n:
                raise InvalidCombinatorialDataError(f"link ({i},{j}) does not fit on {self.n} points")
            if i in seen or j in seen:
                raise InvalidCombinatorialDataError(f"point of link ({i},{j}) is used twice")
            seen.update((i, j))
        for i, j in links:
            for k, l in links:
                if i < k < j < l:
                    raise InvalidCombinatorialDataError(f"links ({i},{j}) and ({k},{l}) cross")
            for d in self.defects:
                if i < d < j:
                    raise InvalidCombinatorialDataError(f"defect {d} sits under link ({i},{j})")

    @property
    def defects(self) -> tuple[int, ...]:
        linked = {p for link in self.links for p in link}
        return tuple(p for p in range(1, self.n + 1) if p not in linked)

    @property
    def num_defects(self) -> int:
        return self.n - 2 * len(self.links)

    def partner(self) -> dict[int, int]:
        out = {}
        for i, j in self.links:
            out[i], out[j] = j, i
        return out

    def to_json(self) -> list[int]:
        """Partner of each point, 0 for a defect."""
        p = self.partner()
        return [p.get(k, 0) for k in range(1, self.n + 1)]

    @classmethod
    def from_json(cls, data: Sequence[int]) -> LinkDiagramHalf:
        links = tuple((k, t) for k, t in enumerate(data, start=1) if t > k)
        return cls(len(data), links)

    def __str__(self) -> str:
        p = self.partner()
        return "".join("|" if k not in p else ("(" if p[k] > k else ")") for k in range(1, self.n + 1))


@dataclass(frozen=True)
class StandardTableau2Row:
    row1: tuple[int, ...]
    row2: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        r1, r2 = tuple(self.row1), tuple(self.row2)
        object.__setattr__(self, "row1", r1)
        object.__setattr__(self, "row2", r2)
        n = len(r1) + len(r2)
        if sorted(r1 + r2) != list(range(1, n + 1)):
            raise InvalidCombinatorialDataError(f"tableau rows {r1}, {r2} do not hold 1..{n} exactly once")
        if list(r1) != sorted(r1) or list(r2) != sorted(r2):
            raise InvalidCombinatorialDataError(f"tableau rows {r1}, {r2} are not increasing")
        if len(r2) > len(r1) or any(r2[c] < r1[c] for c in range(len(r2))):
            raise InvalidCombinatorialDataError(f"tableau rows {r1}, {r2} do not form a standard tableau")

    @property
    def shape(self) -> Shape:
        return Shape(len(self.row1), len(self.row2))

    def to_json(self) -> list[list[int]]:
        return [list(self.row1), list(self.row2)]


IndexObject = Union[OneFactor, BratteliWalk, LinkDiagramHalf, StandardTableau2Row]


def _to_one_factor(x: IndexObject) -> OneFactor:
    if isinstance(x, OneFactor):
        return x
    if isinstance(x, BratteliWalk):
        return OneFactor(tuple(1 if e == "V" else -1 for e in x.edges))
    if isinstance(x, LinkDiagramHalf):
        closers = {j for _, j in x.links}
        return OneFactor(tuple(-1 if k in closers else 1 for k in range(1, x.n + 1)))
    if isinstance(x, StandardTableau2Row):
        top = set(x.row1)
        return OneFactor(tuple(1 if k in top else -1 for k in range(1, x.shape.n + 1)))
    raise TypeError(f"cannot convert {type(x).__name__}")


def convert(x: IndexObject, target: IndexKind) -> IndexObject:
    """Image of ``x`` under the bijections between the four index sets."""
    alpha = _to_one_factor(x)
    if target == "one_factor":
        return alpha
    if target == "walk":
        return BratteliWalk("".join("V" if e == 1 else "D" for e in alpha))
    if target == "link":
        return LinkDiagramHalf(alpha.n, alpha.pairs)
    if target == "tableau":
        return StandardTableau2Row(
            tuple(k for k in range(1, alpha.n + 1) if alpha.entry(k) == 1),
            tuple(k for k in range(1, alpha.n + 1) if alpha.entry(k) == -1),
        )
    raise InvalidCombinatorialDataError(f"unknown index kind {target!r}")


def canonical_key(alpha: OneFactor) -> tuple[int, tuple[int, ...]]:
    """Sort key: a linear extension of dominance, ties broken with +1 before -1."""
    return sum(alpha.weight_sequence), tuple(0 if e == 1 else 1 for e in alpha.entries)


@lru_cache(maxsize=None)
def enumerate_one_factors(shape: Shape) -> tuple[OneFactor, ...]:
    """All 1-factors of the given shape, least dominant first."""
    n, p = shape.n, shape.lambda2
    out: list[OneFactor] = []

    def grow(prefix: list[int], level: int, minus_left: int) -> None:
        remaining = n - len(prefix)
        if remaining == 0:
            out.append(OneFactor(tuple(prefix)))
            return
        if remaining > minus_left:
            prefix.append(1)
            grow(prefix, level + 1, minus_left)
            prefix.pop()
        if minus_left and level > 0:
            prefix.append(-1)
            grow(prefix, level - 1, minus_left - 1)
            prefix.pop()

    grow([], 0, p)
    out.sort(key=canonical_key)
    logger.debug("enumerated %d 1-factors of shape %s", len(out), shape)
    return tuple(out)


def count_paths(shape: Shape) -> int:
    """c_lambda = C(n, lambda2) - C(n, lambda2 - 1)."""
    n, p = shape.n, shape.lambda2
    return comb(n, p) - (comb(n, p - 1) if p > 0 else 0)


def count_walks_brute_force(shape: Shape) -> int:
    """Number of Bratteli walks ending at ``shape``, by dynamic programming over levels."""
    counts = {(0, 0): 1}
    for _ in range(shape.n):
        step: dict[tuple[int, int], int] = {}
        for (a, b), c in counts.items():
            step[(a + 1, b)] = step.get((a + 1, b), 0) + c
            if b + 1 <= a:
                step[(a, b + 1)] = step.get((a, b + 1), 0) + c
        counts = step
    return counts.get((shape.lambda1, shape.lambda2), 0)


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


class Dominance(enum.Enum):
    EQUAL = "equal"
    LESS = "less"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


def compare_dominance(a: OneFactor, b: OneFactor) -> Dominance:
    """Componentwise comparison of weight sequences. ``LESS`` means a <= b."""
    if a.n != b.n:
        raise LengthMismatchError(f"cannot compare 1-factors of lengths {a.n} and {b.n}")
    if a.entries == b.entries:
        return Dominance.EQUAL
    le = all(x <= y for x, y in zip(a.weight_sequence, b.weight_sequence))
    ge = all(x >= y for x, y in zip(a.weight_sequence, b.weight_sequence))
    if le:
        return Dominance.LESS
    if ge:
        return Dominance.GREATER
    return Dominance.INCOMPARABLE


def dominated_by(beta: OneFactor, alpha: OneFactor) -> bool:
    """beta <= alpha."""
    return compare_dominance(beta, alpha) in (Dominance.LESS, Dominance.EQUAL)


def is_compatible(alpha: OneFactor, beta: OneFactor) -> bool:
    """True iff beta has opposite signs at the two ends of every pairing of alpha."""
    if alpha.n != beta.n:
        raise LengthMismatchError(f"1-factors of lengths {alpha.n} and {beta.n}")
    return all(beta.entry(i) != beta.entry(j) for i, j in alpha.pairs)


def is_subordinate(gamma: OneFactor, beta: OneFactor) -> bool:
    """gamma is contained in beta: every pairing of gamma is a pairing of beta."""
    return all(beta.partner.get(i) == j for i, j in gamma.pairs)


@dataclass(frozen=True)
class DiamondSequence:
    """gamma(0), ..., gamma(l) and the pairing variable index used at each pairing step."""

    factors: tuple[OneFactor, ...]
    variables: tuple[int, ...]

    def monomial(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for j in self.variables:
            out[j] = out.get(j, 0) + 1
        return out


def diamond_sequences(alpha: OneFactor, beta: OneFactor) -> list[DiamondSequence]:
    if alpha.n != beta.n:
        raise LengthMismatchError(f"1-factors of lengths {alpha.n} and {beta.n}")
    if alpha.weight != beta.weight:
        return []
    found: list[DiamondSequence] = []

    def extend(chain: list[OneFactor], variables: list[int]) -> None:
        k = len(chain) - 1
        if k == alpha.n:
            found.append(DiamondSequence(tuple(chain), tuple(variables)))
            return
        gamma = chain[-1]
        if alpha.entry(k + 1) == 1:
            options = [(gamma.plus(), None)]
        else:
            options = [(gamma.plus_link(j), j) for j in range(1, gamma.weight + 1)]
        for nxt, var in options:
            if not is_subordinate(nxt, beta):
                continue
            chain.append(nxt)
            if var is not None:
                variables.append(var)
            extend(chain, variables)
            chain.pop()
            if var is not None:
                variables.pop()

    extend([EMPTY], [])
    return found
