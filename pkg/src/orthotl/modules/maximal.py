"""
modules.maximal: orthogonal maximal vectors and cellular vectors

Two operators carry a maximal vector b of weight i_b in degree n to maximal
vectors in degree n+1:

    Phi_1(b) = b (x) y_1
    Phi_2(b) = [i_b] b (x) y_-1 - v^{i_b} F b (x) y_1

Reading a 1-factor (equivalently a Bratteli walk) from left to right and
applying Phi_1 for each +1 and Phi_2 for each -1, starting from 1, gives the
vector omega(alpha). These are pairwise orthogonal and span the maximal
vectors of their weight.

The cellular vector nu(alpha) is the tensor product, in link-diagram order,
of y_1 for each defect and of the nested invariants Psi(...) for each link,
where Psi(b) = y_1 (x) b (x) y_-1 - v y_-1 (x) b (x) y_1. Expanded, it is the
sum over every subset of switched pairings of (-v)^(#switched) times the
sign tensor with those pairings switched to (-1, 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Literal

from orthotl.combinatorics.shapes import (
    BratteliWalk,
    LinkDiagramHalf,
    OneFactor,
    Shape,
    convert,
    enumerate_one_factors,
)
from orthotl.core.errors import InhomogeneousError, NotInvariantError
from orthotl.core.qscalars import LaurentPoly, Scalar, bracket, quantum_factorial, vpow
from orthotl.modules.tensor_rep import (
    TensorVector,
    act_F,
    act_power,
    bilinear_form,
    is_invariant,
    tensor,
    y,
)
from orthotl.utils.log import get_logger

logger = get_logger(__name__)

BasisKind = Literal["omega", "nu"]

Y_PLUS = y(1)
Y_MINUS = y(-1)
MINUS_V = Scalar(LaurentPoly.monomial(1, -1))


def phi1(b: TensorVector) -> TensorVector:
    return b.tensor(Y_PLUS)


def phi2(b: TensorVector, i_b: int) -> TensorVector:
    """[i_b] b (x) y_-1 - v^{i_b} F b (x) y_1, for b homogeneous of weight i_b."""
    if b and b.weights() != {i_b}:
        raise InhomogeneousError(f"phi2 expects a vector of weight {i_b}, got weights {sorted(b.weights())}")
    return b.tensor(Y_MINUS).scale(bracket(i_b)) - act_F(b).tensor(Y_PLUS).scale(vpow(i_b))


def psi_nest(b: TensorVector) -> TensorVector:
    if not is_invariant(b):
        raise NotInvariantError("psi_nest needs an invariant: weight 0 and killed by E and F")
    return tensor(Y_PLUS, b, Y_MINUS) - tensor(Y_MINUS, b, Y_PLUS).scale(vpow(1))


@lru_cache(maxsize=None)
def _omega(entries: tuple[int, ...]) -> TensorVector:
    if not entries:
        return TensorVector.unit()
    prefix = entries[:-1]
    b = _omega(prefix)
    if entries[-1] == 1:
        return phi1(b)
    return phi2(b, sum(prefix))


def build_omega(p: BratteliWalk | OneFactor) -> TensorVector:
    alpha = convert(p, "one_factor")
    return _omega(alpha.entries)


@lru_cache(maxsize=None)
def _nu(entries: tuple[int, ...]) -> TensorVector:
    alpha = OneFactor(entries)
    terms: dict[tuple[int, ...], Scalar] = {}
    for size in range(alpha.num_pairs + 1):
        coeff = MINUS_V**size
        for switched in combinations(alpha.pairs, size):
            signs = list(entries)
            for i, j in switched:
                signs[i - 1], signs[j - 1] = -1, 1
            terms[tuple(signs)] = coeff
    return TensorVector(len(entries), terms)


def build_nu(alpha: OneFactor) -> TensorVector:
    """nu(alpha) by the sign-switch expansion."""
    return _nu(alpha.entries)


def build_nu_by_nesting(diagram: LinkDiagramHalf | OneFactor) -> TensorVector:
    """nu through tensor products of y_1 and nested invariants."""
    link = convert(diagram, "link")
    partner = link.partner()

    def segment(lo: int, hi: int) -> TensorVector:
        pieces = []
        k = lo
        while k <= hi:
            if k not in partner:
                pieces.append(Y_PLUS)
                k += 1
            else:
                close = partner[k]
                pieces.append(psi_nest(segment(k + 1, close - 1)))
                k = close + 1
        return tensor(*pieces)

    return segment(1, link.n)


def nu_norm(beta: OneFactor) -> Scalar:
    """v^m prod_j [s_j][s_j + 1], the squared length <omega(beta), omega(beta)>."""
    out = vpow(beta.num_pairs)
    for s in beta.s_values():
        out = out * bracket(s) * bracket(s + 1)
    return out


def phi2_nu_expansion(alpha: OneFactor) -> TensorVector:
    """sum_{j=1}^{d} [j] nu(alpha^{+(j)}), with d the number of defects of alpha."""
    total = TensorVector.zero(alpha.n + 1)
    for j in range(1, alpha.weight + 1):
        total = total + build_nu(alpha.plus_link(j)).scale(bracket(j))
    return total


def nu_reconstruct_minus(alpha: OneFactor) -> TensorVector:
    """nu(alpha^-) = (1/[d]) Phi_2 nu(alpha) - sum_{j<d} ([j]/[d]) Phi_1 nu(alpha^(j))."""
    d = alpha.weight
    inv_d = bracket(d).inverse()
    out = phi2(build_nu(alpha), d).scale(inv_d)
    for j in range(1, d):
        out = out - phi1(build_nu(alpha.link(j))).scale(bracket(j) * inv_d)
    return out


@dataclass(frozen=True)
class MaximalBasis:
    shape: Shape
    kind: BasisKind
    vectors: dict[OneFactor, TensorVector]

    def ordered(self) -> list[tuple[OneFactor, TensorVector]]:
        return [(alpha, self.vectors[alpha]) for alpha in enumerate_one_factors(self.shape)]


@lru_cache(maxsize=None)
def build_basis(shape: Shape, kind: BasisKind) -> MaximalBasis:
    build = build_omega if kind == "omega" else build_nu
    vectors = {alpha: build(alpha) for alpha in enumerate_one_factors(shape)}
    logger.debug("built %d %s vectors for shape %s", len(vectors), kind, shape)
    return MaximalBasis(shape, kind, vectors)


def basis_F_orbit(alpha: OneFactor) -> list[TensorVector]:
    """F^a omega(alpha) for 0 <= a <= weight(alpha)."""
    b = build_omega(alpha)
    return [act_power(act_F, a, b) for a in range(alpha.weight + 1)]


def orbit_norm_ratio(alpha: OneFactor, a: int) -> Scalar:
    """<F^a b, F^a b> / ([a]! [k][k-1]...[k-a+1] <b, b>) for b = omega(alpha) of weight k."""
    k = alpha.weight
    b = build_omega(alpha)
    fa = act_power(act_F, a, b)
    denom = Scalar(quantum_factorial(a)) * bilinear_form(b, b)
    for t in range(a):
        denom = denom * bracket(k - t)
    return bilinear_form(fa, fa) / denom


def monomial_exponent(s: Scalar) -> int | None:
    """e when s = v^e exactly, else None."""
    if not s.is_laurent() or not s.num.is_monomial():
        return None
    ((exp, c),) = s.num.items()
    return exp if c == 1 else None


def omega_coordinates(x: TensorVector, shape: Shape) -> dict[OneFactor, Scalar]:
    """Coefficients of x along the omega vectors of ``shape``, read off through orthogonality."""
    out = {}
    for alpha, w in build_basis(shape, "omega").ordered():
        c = bilinear_form(x, w)
        if c:
            out[alpha] = c / bilinear_form(w, w)
    return out


def combine(coeffs: dict[OneFactor, Scalar], kind: BasisKind = "omega") -> TensorVector:
    """sum_alpha c_alpha b(alpha) for b = omega or nu."""
    build = build_omega if kind == "omega" else build_nu
    items = list(coeffs.items())
    if not items:
        raise ValueError("empty combination has no tensor length")
    total = TensorVector.zero(items[0][0].n)
    for alpha, c in items:
        total = total + build(alpha).scale(c)
    return total
