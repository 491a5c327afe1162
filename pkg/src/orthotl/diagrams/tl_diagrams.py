"""
diagrams.tl_diagrams: Temperley-Lieb diagrams, their action on V^{(x)n} and on cell modules

A planar diagram on n strands is an involution of the vertices 1..2n: the top
row is 1..n and the bottom vertex j' is n + j. Products stack the left factor
above the right one, so in D1 D2 the bottom of D1 is glued to the top of D2
and every closed loop is traded for a factor delta.

Two sign conventions are carried:

    minus   e_i acts on V (x) V as -[2] times the projection onto the
            invariant line, delta = -[2]
    plus    the negation, delta = +[2]

Only the minus convention makes nu an intertwiner from the cell modules into
the tensor space; the plus one is kept for comparison.

USAGE EXAMPLES:
----------------
e1 = generator(3, 1)
d, loops = compose_diagrams(e1, e1)      # d == e1, loops == 1
op = ei_matrix(3, 1)                      # callable on TensorVector
op(y(1, -1, 1))
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Any, Iterator, Literal, Mapping

from orthotl.combinatorics.shapes import (
    LinkDiagramHalf,
    OneFactor,
    Shape,
    catalan,
    convert,
    enumerate_one_factors,
)
from orthotl.core import matrices as mx
from orthotl.core.errors import (
    IndexRangeError,
    InvalidCombinatorialDataError,
    LengthMismatchError,
    OrthoTLError,
)
from orthotl.core.matrices import ScalarMatrix
from orthotl.core.qscalars import SCALAR_ONE, SCALAR_ZERO, Number, Scalar, as_scalar, bracket, vpow
from orthotl.modules.maximal import build_nu
from orthotl.modules.tensor_rep import TensorVector, all_signs, operator_matrix
from orthotl.utils.log import get_logger

logger = get_logger(__name__)

DeltaSign = Literal["minus", "plus"]
DELTA_SIGNS: tuple[str, ...] = ("minus", "plus")


def _check_sign(delta_sign: str) -> None:
    if delta_sign not in DELTA_SIGNS:
        raise OrthoTLError(f"delta sign must be one of {DELTA_SIGNS}, got {delta_sign!r}")


def delta(delta_sign: DeltaSign = "minus") -> Scalar:
    """Value of a closed loop."""
    _check_sign(delta_sign)
    return -bracket(2) if delta_sign == "minus" else bracket(2)


# ---------------------------------------------------------------------------
# Planar diagrams
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PlanarDiagram:
    """partner[k - 1] is the vertex joined to vertex k (1-based)."""

    n: int
    partner: tuple[int, ...]

    def __post_init__(self) -> None:
        p = tuple(self.partner)
        object.__setattr__(self, "partner", p)
        if len(p) != 2 * self.n:
            raise InvalidCombinatorialDataError(f"a diagram on {self.n} strands needs {2 * self.n} vertices")
        for k, t in enumerate(p, start=1):
            if not 1 <= t <= 2 * self.n or t == k or p[t - 1] != k:
                raise InvalidCombinatorialDataError(f"vertex {k} -> {t} is not part of a perfect matching")
        # boundary order: top left to right, then bottom right to left
        order = list(range(1, self.n + 1)) + list(range(2 * self.n, self.n, -1))
        position = {vertex: k for k, vertex in enumerate(order)}
        stack: list[int] = []
        for vertex in order:
            mate = p[vertex - 1]
            if position[mate] > position[vertex]:
                stack.append(vertex)
            elif not stack or stack.pop() != mate:
                raise InvalidCombinatorialDataError(f"diagram {list(p)} has crossing arcs")

    def mate(self, vertex: int) -> int:
        return self.partner[vertex - 1]

    @property
    def through_strands(self) -> int:
        return sum(1 for k in range(1, self.n + 1) if self.mate(k) > self.n)

    def arcs(self) -> list[tuple[int, int]]:
        return [(k, t) for k, t in enumerate(self.partner, start=1) if k < t]

    def to_json(self) -> list[int]:
        return list(self.partner)

    @classmethod
    def from_json(cls, data: list[int]) -> PlanarDiagram:
        if len(data) % 2:
            raise InvalidCombinatorialDataError("a diagram has an even number of vertices")
        return cls(len(data) // 2, tuple(data))

    def __str__(self) -> str:
        def label(k: int) -> str:
            return str(k) if k <= self.n else f"{k - self.n}'"

        return " ".join(f"{label(a)}-{label(b)}" for a, b in self.arcs())


def identity(n: int) -> PlanarDiagram:
    return PlanarDiagram(n, tuple(k + n for k in range(1, n + 1)) + tuple(range(1, n + 1)))


def generator(n: int, i: int) -> PlanarDiagram:
    """e_i: cap on top i, i+1, cup on bottom i', (i+1)', straight elsewhere."""
    if not 1 <= i < n:
        raise IndexRangeError(f"e_{i} does not exist on {n} strands")
    partner = list(identity(n).partner)
    for a, b in ((i, i + 1), (n + i, n + i + 1)):
        partner[a - 1], partner[b - 1] = b, a
    return PlanarDiagram(n, tuple(partner))


def compose_diagrams(top: PlanarDiagram, bottom: PlanarDiagram) -> tuple[PlanarDiagram, int]:
    """Stack ``top`` above ``bottom``; returns the reduced diagram and the number of closed loops."""
    if top.n != bottom.n:
        raise LengthMismatchError(f"cannot stack diagrams on {top.n} and {bottom.n} strands")
    n = top.n
    seen_middle: set[int] = set()
    partner = [0] * (2 * n)

    def walk(vertex: int, in_top: bool) -> int:
        # follow a strand until it leaves through the outer boundary
        while True:
            if in_top:
                t = top.mate(vertex)
                if t <= n:
                    return t
                seen_middle.add(t - n)
                vertex, in_top = t - n, False
            else:
                t = bottom.mate(vertex)
                if t > n:
                    return t
                seen_middle.add(t)
                vertex, in_top = n + t, True

    for k in range(1, 2 * n + 1):
        if partner[k - 1]:
            continue
        end = walk(k, True) if k <= n else walk(k, False)
        partner[k - 1], partner[end - 1] = end, k

    loops = 0
    for m in range(1, n + 1):
        if m in seen_middle:
            continue
        loops += 1
        cur = m
        while cur not in seen_middle:
            seen_middle.add(cur)
            cur = bottom.mate(cur)  # middle arc on the top row of ``bottom``
            seen_middle.add(cur)
            cur = top.mate(n + cur) - n
    return PlanarDiagram(n, tuple(partner)), loops


def enumerate_diagrams(n: int) -> list[PlanarDiagram]:
    """All Catalan(n) planar diagrams on n strands."""
    order = list(range(1, n + 1)) + list(range(2 * n, n, -1))
    out: list[PlanarDiagram] = []

    def matchings(points: list[int]) -> Iterator[list[tuple[int, int]]]:
        if not points:
            yield []
            return
        first = points[0]
        for k in range(1, len(points), 2):
            for inner in matchings(points[1:k]):
                for outer in matchings(points[k + 1 :]):
                    yield [(first, points[k])] + inner + outer

    for arcs in matchings(order):
        partner = [0] * (2 * n)
        for a, b in arcs:
            partner[a - 1], partner[b - 1] = b, a
        out.append(PlanarDiagram(n, tuple(partner)))
    return out


@lru_cache(maxsize=None)
def _words(n: int) -> Mapping[PlanarDiagram, tuple[tuple[int, ...], int]]:
    start = identity(n)
    found = {start: ((), 0)}
    queue = deque([start])
    while queue:
        d = queue.popleft()
        word, loops = found[d]
        for i in range(1, n):
            nxt, extra = compose_diagrams(generator(n, i), d)
            if nxt not in found:
                found[nxt] = ((i,) + word, loops + extra)
                queue.append(nxt)
    if len(found) != catalan(n):
        raise OrthoTLError(f"generators reached {len(found)} of {catalan(n)} diagrams on {n} strands")
    return MappingProxyType(found)


def reduced_word(d: PlanarDiagram) -> tuple[tuple[int, ...], int]:
    """(i_1, ..., i_k), N with e_{i_1} ... e_{i_k} = delta^N d, shortest first."""
    return _words(d.n)[d]


# ---------------------------------------------------------------------------
# The algebra
# ---------------------------------------------------------------------------


class TLElement:
    """A linear combination of planar diagrams with Scalar coefficients."""

    __slots__ = ("n", "delta_sign", "_terms")

    def __init__(
        self, n: int, terms: Mapping[PlanarDiagram, Scalar | Number] | None = None, delta_sign: DeltaSign = "minus"
    ) -> None:
        _check_sign(delta_sign)
        self.n = n
        self.delta_sign = delta_sign
        clean: dict[PlanarDiagram, Scalar] = {}
        for d, c in (terms or {}).items():
            if d.n != n:
                raise LengthMismatchError(f"diagram on {d.n} strands in an element on {n} strands")
            s = as_scalar(c)
            if s:
                clean[d] = s
        self._terms = clean

    @classmethod
    def of(cls, d: PlanarDiagram, delta_sign: DeltaSign = "minus") -> TLElement:
        return cls(d.n, {d: SCALAR_ONE}, delta_sign)

    @classmethod
    def gen(cls, n: int, i: int, delta_sign: DeltaSign = "minus") -> TLElement:
        return cls.of(generator(n, i), delta_sign)

    @classmethod
    def one(cls, n: int, delta_sign: DeltaSign = "minus") -> TLElement:
        return cls.of(identity(n), delta_sign)

    @property
    def terms(self) -> Mapping[PlanarDiagram, Scalar]:
        return MappingProxyType(self._terms)

    def _check(self, other: TLElement) -> None:
        if other.n != self.n or other.delta_sign != self.delta_sign:
            raise LengthMismatchError("elements live in different Temperley-Lieb algebras")

    def __add__(self, other: TLElement) -> TLElement:
        self._check(other)
        out = dict(self._terms)
        for d, c in other._terms.items():
            out[d] = out.get(d, SCALAR_ZERO) + c
        return TLElement(self.n, out, self.delta_sign)

    def __neg__(self) -> TLElement:
        return self.scale(-1)

    def __sub__(self, other: TLElement) -> TLElement:
        return self + (-other)

    def scale(self, c: Scalar | Number) -> TLElement:
        s = as_scalar(c)
        return TLElement(self.n, {d: s * x for d, x in self._terms.items()}, self.delta_sign)

    def __mul__(self, other: TLElement) -> TLElement:
        self._check(other)
        loop = delta(self.delta_sign)
        out: dict[PlanarDiagram, Scalar] = {}
        for d1, c1 in self._terms.items():
            for d2, c2 in other._terms.items():
                d, loops = compose_diagrams(d1, d2)
                out[d] = out.get(d, SCALAR_ZERO) + c1 * c2 * loop**loops
        return TLElement(self.n, out, self.delta_sign)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TLElement):
            return NotImplemented
        return self.n == other.n and self.delta_sign == other.delta_sign and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.n, self.delta_sign, frozenset(self._terms.items())))

    def is_zero(self) -> bool:
        return not self._terms

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({c})*[{d}]" for d, c in self._terms.items())


# ---------------------------------------------------------------------------
# Action on the tensor space
# ---------------------------------------------------------------------------


def _z0_images(a: int, b: int) -> list[tuple[tuple[int, int], Scalar]]:
    """Image of y_{a,b} under -[2] z_0, the minus-convention e."""
    if a == b:
        return []
    if a == 1:
        return [((1, -1), -vpow(-1)), ((-1, 1), SCALAR_ONE)]
    return [((1, -1), SCALAR_ONE), ((-1, 1), -vpow(1))]


@dataclass(frozen=True)
class EiOperator:
    """e_i on V^{(x)n}, acting on strands i and i+1."""

    n: int
    i: int
    delta_sign: DeltaSign = "minus"

    def __call__(self, x: TensorVector) -> TensorVector:
        if x.n != self.n:
            raise LengthMismatchError(f"e_{self.i} acts on {self.n} factors, got a vector on {x.n}")
        sign = SCALAR_ONE if self.delta_sign == "minus" else -SCALAR_ONE
        k = self.i - 1

        def on_basis(s: tuple[int, ...], c: Scalar) -> Iterator[tuple[tuple[int, ...], Scalar]]:
            for (a, b), f in _z0_images(s[k], s[k + 1]):
                yield s[:k] + (a, b) + s[k + 2 :], c * f * sign

        return x.map_terms(on_basis)

    def to_matrix(self) -> ScalarMatrix:
        basis = all_signs(self.n)
        return operator_matrix(self, basis, basis)


def ei_matrix(n: int, i: int, delta_sign: DeltaSign = "minus") -> EiOperator:
    _check_sign(delta_sign)
    if not 1 <= i < n:
        raise IndexRangeError(f"e_{i} does not exist on {n} strands")
    return EiOperator(n, i, delta_sign)


def diagram_operator(d: PlanarDiagram, x: TensorVector, delta_sign: DeltaSign = "minus") -> TensorVector:
    """d acting on x, through a reduced word in the generators."""
    word, loops = reduced_word(d)
    out = x
    for i in reversed(word):
        out = ei_matrix(d.n, i, delta_sign)(out)
    if loops:
        out = out.scale(delta(delta_sign) ** -loops)
    return out


def tl_act_on_tensor(x: TLElement, t: TensorVector) -> TensorVector:
    if x.n != t.n:
        raise LengthMismatchError(f"element on {x.n} strands cannot act on a tensor of length {t.n}")
    out = TensorVector.zero(t.n)
    for d, c in x.terms.items():
        out = out + diagram_operator(d, t, x.delta_sign).scale(c)
    return out


def diagram_matrix(d: PlanarDiagram, delta_sign: DeltaSign = "minus") -> ScalarMatrix:
    basis = all_signs(d.n)
    return operator_matrix(lambda x: diagram_operator(d, x, delta_sign), basis, basis)


def diagram_span_rank(n: int, v0: Number = 2, delta_sign: DeltaSign = "minus") -> int:
    """Rank at v = v0 of the operators of all planar diagrams, flattened to rows."""
    rows = [mx.flatten(diagram_matrix(d, delta_sign)) for d in enumerate_diagrams(n)]
    return mx.rank_at(mx.from_rows(rows), v0)


# ---------------------------------------------------------------------------
# Cell modules
# ---------------------------------------------------------------------------


def compose_half(d: PlanarDiagram, link: LinkDiagramHalf) -> tuple[LinkDiagramHalf, int]:
    """Stack d above the link diagram. Returns the resulting link diagram and the closed loops.

    Defects joined to each other below the top row disappear from the result.
    """
    if d.n != link.n:
        raise LengthMismatchError(f"diagram on {d.n} strands cannot act on a link diagram on {link.n} points")
    n = d.n
    below = link.partner()
    visited: set[int] = set()
    links: list[tuple[int, int]] = []
    done: set[int] = set()

    for k in range(1, n + 1):
        if k in done:
            continue
        vertex = d.mate(k)
        end: int | None = None
        while True:
            if vertex <= n:
                end = vertex
                break
            m = vertex - n
            visited.add(m)
            if m not in below:
                break
            visited.add(below[m])
            vertex = d.mate(n + below[m])
        done.add(k)
        if end is not None:
            done.add(end)
            links.append((k, end))

    # defects joined below the top row
    for m in link.defects:
        cur = m
        while cur not in visited:
            visited.add(cur)
            nxt = d.mate(n + cur) - n
            visited.add(nxt)
            if nxt not in below:
                break
            cur = below[nxt]

    loops = 0
    for m in range(1, n + 1):
        if m in visited:
            continue
        loops += 1
        cur = m
        while cur not in visited:
            visited.add(cur)
            mate = below[cur]
            visited.add(mate)
            cur = d.mate(n + mate) - n
    return LinkDiagramHalf(n, tuple(links)), loops


class CellModuleElement:
    """A combination of link diagrams with exactly ``defects`` defects."""

    __slots__ = ("n", "defects", "delta_sign", "_terms")

    def __init__(
        self,
        n: int,
        defects: int,
        terms: Mapping[LinkDiagramHalf, Scalar | Number] | None = None,
        delta_sign: DeltaSign = "minus",
    ) -> None:
        _check_sign(delta_sign)
        if defects < 0 or defects > n or (n - defects) % 2:
            raise InvalidCombinatorialDataError(f"no cell module with {defects} defects on {n} points")
        self.n, self.defects, self.delta_sign = n, defects, delta_sign
        clean: dict[LinkDiagramHalf, Scalar] = {}
        for link, c in (terms or {}).items():
            if link.n != n or link.num_defects != defects:
                raise InvalidCombinatorialDataError(f"{link} is not a link diagram of L({defects}) on {n} points")
            s = as_scalar(c)
            if s:
                clean[link] = s
        self._terms = clean

    @classmethod
    def basis(cls, link: LinkDiagramHalf, delta_sign: DeltaSign = "minus") -> CellModuleElement:
        return cls(link.n, link.num_defects, {link: SCALAR_ONE}, delta_sign)

    @property
    def terms(self) -> Mapping[LinkDiagramHalf, Scalar]:
        return MappingProxyType(self._terms)

    def __add__(self, other: CellModuleElement) -> CellModuleElement:
        if (other.n, other.defects, other.delta_sign) != (self.n, self.defects, self.delta_sign):
            raise LengthMismatchError("elements live in different cell modules")
        out = dict(self._terms)
        for link, c in other._terms.items():
            out[link] = out.get(link, SCALAR_ZERO) + c
        return CellModuleElement(self.n, self.defects, out, self.delta_sign)

    def scale(self, c: Scalar | Number) -> CellModuleElement:
        s = as_scalar(c)
        return CellModuleElement(self.n, self.defects, {k: s * x for k, x in self._terms.items()}, self.delta_sign)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CellModuleElement):
            return NotImplemented
        return (self.n, self.defects, self.delta_sign, self._terms) == (
            other.n,
            other.defects,
            other.delta_sign,
            other._terms,
        )

    def __hash__(self) -> int:
        return hash((self.n, self.defects, frozenset(self._terms.items())))

    def to_json(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "defects": self.defects,
            "terms": [[link.to_json(), c.to_json()] for link, c in self._terms.items()],
        }

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({c})*{link}" for link, c in self._terms.items())


def cell_act(d: PlanarDiagram, elem: CellModuleElement) -> CellModuleElement:
    """d acting on L(defects); results with fewer defects are zero in the quotient."""
    loop = delta(elem.delta_sign)
    out: dict[LinkDiagramHalf, Scalar] = {}
    for link, c in elem.terms.items():
        image, loops = compose_half(d, link)
        if image.num_defects < elem.defects:
            continue
        out[image] = out.get(image, SCALAR_ZERO) + c * loop**loops
    return CellModuleElement(elem.n, elem.defects, out, elem.delta_sign)


def tl_act_on_cell(x: TLElement, elem: CellModuleElement) -> CellModuleElement:
    if x.delta_sign != elem.delta_sign or x.n != elem.n:
        raise LengthMismatchError("element and cell module do not match")
    out = CellModuleElement(elem.n, elem.defects, {}, elem.delta_sign)
    for d, c in x.terms.items():
        out = out + cell_act(d, elem).scale(c)
    return out


def phi_map(link: LinkDiagramHalf) -> TensorVector:
    """The intertwiner L(d) -> V^{(x)n} on a basis link diagram: nu of its 1-factor."""
    return build_nu(convert(link, "one_factor"))


def phi_element(elem: CellModuleElement) -> TensorVector:
    out = TensorVector.zero(elem.n)
    for link, c in elem.terms.items():
        out = out + phi_map(link).scale(c)
    return out


def link_diagrams(n: int, defects: int) -> list[LinkDiagramHalf]:
    """Basis of L(defects) on n points."""
    shape = Shape((n + defects) // 2, (n - defects) // 2)
    return [convert(alpha, "link") for alpha in enumerate_one_factors(shape)]


# ---------------------------------------------------------------------------
# e_i on the omega basis
# ---------------------------------------------------------------------------


def ei_on_omega(alpha: OneFactor, i: int, delta_sign: DeltaSign = "minus") -> dict[OneFactor, Scalar]:
    """e_i omega(alpha) written in the omega basis of the same shape.

    With w = w_i(alpha) and beta the 1-factor with entries i, i+1 swapped:
    (1, -1) gives -[2] omega(alpha) when w = 0 and
    [w+2]/[w+1] (omega(beta) - omega(alpha)) otherwise; (-1, 1) gives
    [w]/[w+1] (omega(beta) - omega(alpha)); equal entries give 0.
    The plus convention negates everything.
    """
    _check_sign(delta_sign)
    if not 1 <= i < alpha.n:
        raise IndexRangeError(f"e_{i} does not exist on {alpha.n} strands")
    a, b = alpha.entry(i), alpha.entry(i + 1)
    if a == b:
        return {}
    w = alpha.w(i)
    sign = SCALAR_ONE if delta_sign == "minus" else -SCALAR_ONE
    if a == 1 and w == 0:
        return {alpha: -bracket(2) * sign}
    c = bracket(w + 2) / bracket(w + 1) if a == 1 else bracket(w) / bracket(w + 1)
    beta = OneFactor(alpha.flip(i))
    out = {beta: c * sign, alpha: -c * sign}
    return {k: x for k, x in out.items() if x}
