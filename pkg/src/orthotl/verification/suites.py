"""
verification.suites: named property suites over all sizes up to n

Every suite is a function ``suite(ctx, rec, n)`` checking one size n; the
runner calls it for each size 1..n (or only for the size of ``--shape`` when
one is given) and folds the results into a single VerificationReport. All
checks are exact equalities; with a specialization value both sides are
evaluated at v = v0 first.

USAGE EXAMPLES:
----------------
report = run_suite("orthogonality", n=6)
report.passed, report.checks_run
reports = run_all(settings)
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Any, Callable, Iterable

import sympy

from orthotl.combinatorics.shapes import (
    Dominance,
    OneFactor,
    Shape,
    catalan,
    compare_dominance,
    convert,
    count_paths,
    count_walks_brute_force,
    diamond_sequences,
    dominated_by,
    enumerate_one_factors,
    is_compatible,
    shapes_of,
    x_weights,
)
from orthotl.core import matrices as mx
from orthotl.core.errors import ConfigError
from orthotl.core.qscalars import (
    Scalar,
    bracket,
    parse_rational,
    quantum_binom,
    specialize,
    vpow,
)
from orthotl.diagrams.tl_diagrams import (
    CellModuleElement,
    TLElement,
    cell_act,
    compose_diagrams,
    delta,
    diagram_span_rank,
    ei_matrix,
    ei_on_omega,
    enumerate_diagrams,
    generator,
    link_diagrams,
    phi_element,
    phi_map,
    tl_act_on_cell,
    tl_act_on_tensor,
)
from orthotl.modules import schur_modules as sm
from orthotl.modules.maximal import (
    build_basis,
    build_nu,
    build_nu_by_nesting,
    build_omega,
    combine,
    monomial_exponent,
    nu_norm,
    nu_reconstruct_minus,
    omega_coordinates,
    orbit_norm_ratio,
    phi1,
    phi2,
    phi2_nu_expansion,
)
from orthotl.modules.tensor_rep import (
    TensorVector,
    act_E,
    act_F,
    act_K,
    act_K_inverse,
    act_weight_idempotent,
    bilinear_form,
    commutator_rhs,
    gram_matrix,
    is_maximal,
    maximal_space_dimension,
    random_scalar,
    random_vector,
)
from orthotl.modules.transitions import (
    matrix_P,
    matrix_Pprime,
    pairing_value,
    pairing_value_direct,
    pairing_value_recursive,
    pi_double_prime,
)
from orthotl.utils.config import Settings
from orthotl.utils.log import get_logger
from orthotl.verification.report import CheckRecorder, VerificationReport

logger = get_logger(__name__)

RANDOM_TRIALS = 3


@dataclass
class SuiteContext:
    seed: int = 20240101
    delta_sign: str = "minus"
    shape: Shape | None = None
    rank_v0: Fraction = Fraction(2)

    def rng(self, n: int) -> random.Random:
        return random.Random(self.seed * 1009 + n)

    def shapes(self, n: int) -> list[Shape]:
        if self.shape is not None:
            return [self.shape] if self.shape.n == n else []
        return shapes_of(n)


SuiteFn = Callable[[SuiteContext, CheckRecorder, int], None]


def _omega_sum(coeffs: dict[OneFactor, Scalar], n: int) -> TensorVector:
    return combine(coeffs) if coeffs else TensorVector.zero(n)


# ---------------------------------------------------------------------------
# Scalars, counts and combinatorics
# ---------------------------------------------------------------------------


def suite_qscalars(ctx: SuiteContext, rec: CheckRecorder, n: int) -> None:
    v, vinv = vpow(1), vpow(-1)
    for k in (n, -n):
        rec.equal("[k] closed form", bracket(k), (vpow(k) - vpow(-k)) / (v - vinv), k=k)
        rec.equal("[k] is bar-invariant", bracket(k).bar(), bracket(k), k=k)
    rec.equal("[k] at v = 1", specialize(bracket(n), 1), n, k=n)
    for k in range(1, n + 1):
        rec.equal(
            "Pascal rule",
            quantum_binom(n, k),
            vpow(-k) * quantum_binom(n - 1, k) + vpow(n - k) * quantum_binom(n - 1, k - 1),
            a=n,
            k=k,
        )
        rec.equal("binomial symmetry", quantum_binom(n, k), quantum_binom(n, n - k), a=n, k=k)


def suite_dimensions(ctx: SuiteContext, rec: CheckRecorder, n: int) -> None:
    shapes = shapes_of(n)
    rec.equal("sum c_lambda dim V(lambda) = 2^n", sum(count_paths(s) * (s.weight + 1) for s in shapes), 2**n, n=n)
    rec.equal("sum c_lambda^2 = Catalan(n)", sum(count_paths(s) ** 2 for s in shapes), catalan(n), n=n)
    rec.equal("dim S(n) = C(n+3, 3)", sm.schur_dimension(n), comb(n + 3, 3), n=n)
    for s in ctx.shapes(n):
        rec.equal("walk count", count_paths(s), count_walks_brute_force(s), shape=s)


def suite_shapes(ctx: SuiteContext, rec: CheckRecorder, n: int) -> None:
    for s in ctx.shapes(n):
        factors = enumerate_one_factors(s)
        rec.equal("enumeration size", len(factors), count_paths(s), shape=s)
        position = {alpha: k for k, alpha in enumerate(factors)}
        for alpha in factors:
            for kind in ("walk", "link", "tableau"):
                back = convert(convert(alpha, kind), "one_factor")
                rec.equal("bijection round trip", back, alpha, alpha=alpha, kind=kind)
            for beta in factors:
                if dominated_by(beta, alpha):
                    rec.expect("order extends dominance", position[beta] <= position[alpha], alpha=alpha, beta=beta)
                blocked = any(alpha.is_defect(k) and beta.entry(k) == -1 for k in range(1, n + 1))
                if blocked:
                    rec.expect("defect obstruction", not is_compatible(alpha, beta), alpha=alpha, beta=beta)
                for seq in diamond_sequences(alpha, beta):
                    rec.equal("diamond sequence ends at beta", seq.factors[-1], beta, alpha=alpha, beta=beta)
            for j in range(1, alpha.weight):
                rec.expect(
                    "plus links strictly increase",
                    compare_dominance(alpha.plus_link(j + 1), alpha.plus_link(j)) is Dominance.GREATER,
                    alpha=alpha,
                    j=j,
                )


# ---------------------------------------------------------------------------
# Tensor space and Schur algebra
# ---------------------------------------------------------------------------


def suite_tensor(ctx: SuiteContext, rec: CheckRecorder, n: int) -> None:
    rng = ctx.rng(n)
    for _ in range(RANDOM_TRIALS):
        x = random_vector(n, rng)
        rec.equal("EF - FE = sum [i] 1_i", act_E(act_F(x)) - act_F(act_E(x)), commutator_rhs(x), x=x)
        rec.equal("K K^-1 = 1", act_K(act_K_inverse(x)), x, x=x)
    for k in x_weights(n):
        if k + 2 > n:
            continue
        b, b2 = random_vector(n, rng, weight=k), random_vector(n, rng, weight=k + 2)
        rec.equal("adjointness", bilinear_form(act_E(b), b2), vpow(k + 1) * bilinear_form(b, act_F(b2)), b=b, b2=b2)
    for s in ctx.shapes(n):
        rec.equal(
            "maximal vectors span",
            maximal_space_dimension(n, s.weight, ctx.rank_v0),
            count_paths(s),
            shape=s,
        )


def suite_schur(ctx: SuiteContext, rec: CheckRecorder, n: int) -> None:
    rep = sm.FaithfulRep(n)
    for name, ok in sm.relation_checks(rep).items():
        rec.expect(name, ok, n=n)
    rec.equal("1_{-n} = F^(n) 1_n E^(n)", *sm.top_idempotent_sides(rep), n=n)
    for a in range(n + 1):
        for b in range(n + 1):
            for i in x_weights(n):
                for second in (False, True):
                    sides = sm.lu_sides(rep, a, b, i, second)
                    rec.equal("divided power identity", *sides, a=a, b=b, i=i, second=second)
    for a in range(1, n + 1):
        for e_first in (True, False):
            rec.equal("E F^a commutation", *sm.ef_commutation_sides(rep, a, e_first), a=a, e_first=e_first)
    rec.equal("basis rank", sm.basis_rank(n, ctx.rank_v0), sm.schur_dimension(n), n=n)
    rec.equal(
        "spanning rank", sm.basis_rank(n, ctx.rank_v0, sm.spanning_words(n)), sm.schur_dimension(n), n=n
    )
    if n >= 2:
        small = rep.truncate()
        for i in (n, -n):
            rec.equal(f"1_{i} vanishes on the quotient", small.word_matrix(f"1_{i}"), small.zero(), n=n)
    w1, w2 = sm.GeneratorWord.parse("F^(2) 1_0 E"), sm.GeneratorWord.parse("E K F")
    for name, ok in sm.involution_matrix_checks(rep, w1, w2).items():
        rec.expect(name, ok, n=n)


# ---------------------------------------------------------------------------
# Maximal vectors and transition matrices
# ---------------------------------------------------------------------------


def suite_orthogonality(ctx: SuiteContext, rec: CheckRecorder, n: int) -> None:
    for s in ctx.shapes(n):
        ordered = build_basis(s, "omega").ordered()
        gram = gram_matrix([w for _, w in ordered])
        rec.expect("Gram matrix is diagonal", mx.is_diagonal(gram), shape=s)
        for k, (alpha, w) in enumerate(ordered):
            rec.expect("omega is maximal", is_maximal(w), alpha=alpha)
            rec.equal("squared length", gram[k, k], nu_norm(alpha), alpha=alpha)


def suite_nu(ctx: SuiteContext, rec: CheckRecorder, n: int) -> None:
    for s in ctx.shapes(n):
        for alpha in enumerate_one_factors(s):
            nu = build_nu(alpha)
            rec.equal("switch expansion = nesting", nu, build_nu_by_nesting(alpha), alpha=alpha)
            rec.expect("nu is maximal", is_maximal(nu), alpha=alpha)
            rec.equal("Phi_1 nu", phi1(nu), build_nu(alpha.plus()), alpha=alpha)
            if alpha.weight:
                rec.equal("Phi_2 nu", phi2(nu, alpha.weight), phi2_nu_expansion(alpha), alpha=alpha)
                rec.equal("nu of alpha^-", nu_reconstruct_minus(alpha), build_nu(alpha.minus()), alpha=alpha)


def suite_pairing(ctx: SuiteContext, rec: CheckRecorder, n: int) -> None:
    for s in ctx.shapes(n):
        factors = enumerate_one_factors(s)
        for alpha in factors:
            for beta in factors:
                closed = pairing_value(alpha, beta)
                rec.equal("closed pairing formula", closed, pairing_value_direct(alpha, beta), alpha=alpha, beta=beta)


def suite_recursion(ctx: SuiteContext, rec: CheckRecorder, n: int) -> None:
    for s in ctx.shapes(n):
        factors = enumerate_one_factors(s)
        for alpha in factors:
            for beta in factors:
                recursive = pairing_value_recursive(alpha, beta)
                rec.equal("recursive pairing", recursive, pairing_value(alpha, beta), alpha=alpha, beta=beta)
        rec.equal("P by both routes", matrix_P(s).entries, matrix_P(s, "gram").entries, shape=s)


def suite_inverse(ctx: SuiteContext, rec: CheckRecorder, n: int) -> None:
    for s in ctx.shapes(n):
        p, pp = matrix_P(s), matrix_Pprime(s)
        size = len(p.index)
        rec.equal("P P' = I", p @ pp, mx.identity(size), shape=s)
        rec.equal("P' P = I", pp @ p, mx.identity(size), shape=s)
        for m in (p, pp):
            rec.expect(f"{m.kind} is triangular", m.is_triangular(), shape=s)
            rec.expect(f"{m.kind} has a nonzero diagonal", m.has_nonzero_diagonal(), shape=s)
        for alpha in p.index:
            rec.equal("omega = sum pi' nu", build_omega(alpha), _nu_sum(pp.row(alpha), n), alpha=alpha)


def _nu_sum(coeffs: dict[OneFactor, Scalar], n: int) -> TensorVector:
    return combine(coeffs, "nu") if coeffs else TensorVector.zero(n)


def suite_pipp(ctx: SuiteContext, rec: CheckRecorder, n: int) -> None:
    for s in ctx.shapes(n):
        pp = matrix_Pprime(s)
        for alpha in pp.index:
            for beta in pp.index:
                poly = pi_double_prime(alpha, beta)
                rec.expect("nonnegative coefficients", poly.has_nonnegative_coefficients(), alpha=alpha, beta=beta)
                rec.equal("pi'' at t_j = [j]", poly.substitute_quantum(), pp.entry(alpha, beta), alpha=alpha, beta=beta)
    if n == 8 and (ctx.shape is None or ctx.shape == Shape(5, 3)):
        alpha, beta = OneFactor((1, 1, 1, 1, 1, -1, -1, -1)), OneFactor((1, -1, 1, -1, 1, -1, 1, 1))
        poly = pi_double_prime(alpha, beta)
        t1, _, t3, _, t5 = poly.symbols()
        expected = t1**3 + 2 * t1**2 * t3 + t1 * t3**2 + t1**2 * t5 + t1 * t3 * t5
        rec.expect("worked pi'' polynomial", sympy.expand(poly.as_expr() - expected) == 0, alpha=alpha, beta=beta)


def suite_orbit(ctx: SuiteContext, rec: CheckRecorder, n: int) -> None:
    for s in ctx.shapes(n):
        for alpha in enumerate_one_factors(s):
            exponents = []
            for a in range(alpha.weight + 1):
                e = monomial_exponent(orbit_norm_ratio(alpha, a))
                rec.expect("orbit norm ratio is a power of v", e is not None, alpha=alpha, a=a)
                exponents.append(e)
            rec.note(str(alpha), exponents)


# ---------------------------------------------------------------------------
# Temperley-Lieb action
# ---------------------------------------------------------------------------


def suite_tl_relations(ctx: SuiteContext, rec: CheckRecorder, n: int) -> None:
    sign = ctx.delta_sign
    loop = delta(sign)  # type: ignore[arg-type]
    rng = ctx.rng(n)
    ops = {i: ei_matrix(n, i, sign) for i in range(1, n)}  # type: ignore[arg-type]
    for _ in range(RANDOM_TRIALS):
        x, z = random_vector(n, rng), random_vector(n, rng)
        for i, e in ops.items():
            rec.equal("e_i^2 = delta e_i", e(e(x)), e(x).scale(loop), i=i, x=x)
            rec.equal("e_i self-adjoint", bilinear_form(e(x), z), bilinear_form(x, e(z)), i=i)
            for j, f in ops.items():
                if abs(i - j) > 1:
                    rec.equal("e_i e_j = e_j e_i", e(f(x)), f(e(x)), i=i, j=j)
                elif abs(i - j) == 1:
                    rec.equal("e_i e_j e_i = e_i", e(f(e(x))), e(x), i=i, j=j)
    diagrams = enumerate_diagrams(n)
    rec.equal("Catalan many diagrams", len(diagrams), catalan(n), n=n)
    for i in range(1, n):
        d, loops = compose_diagrams(generator(n, i), generator(n, i))
        rec.expect("e_i o e_i", d == generator(n, i) and loops == 1, i=i)
    x = random_vector(n, rng)
    for _ in range(RANDOM_TRIALS):
        d1, d2 = rng.choice(diagrams), rng.choice(diagrams)
        a, b = TLElement.of(d1, sign), TLElement.of(d2, sign)  # type: ignore[arg-type]
        lhs = tl_act_on_tensor(a * b, x)
        rec.equal("action is multiplicative", lhs, tl_act_on_tensor(a, tl_act_on_tensor(b, x)), d1=d1, d2=d2)


def suite_commute(ctx: SuiteContext, rec: CheckRecorder, n: int) -> None:
    rng = ctx.rng(n)
    for _ in range(RANDOM_TRIALS):
        x = random_vector(n, rng)
        for i in range(1, n):
            e = ei_matrix(n, i, ctx.delta_sign)  # type: ignore[arg-type]
            rec.equal("e_i E = E e_i", e(act_E(x)), act_E(e(x)), i=i)
            rec.equal("e_i F = F e_i", e(act_F(x)), act_F(e(x)), i=i)
            for k in x_weights(n):
                rec.equal("e_i 1_k = 1_k e_i", e(act_weight_idempotent(k, x)), act_weight_idempotent(k, e(x)), i=i, k=k)


def _random_tl_element(n: int, rng: random.Random, sign: str) -> TLElement:
    diagrams = enumerate_diagrams(n)
    terms = {rng.choice(diagrams): random_scalar(rng) for _ in range(RANDOM_TRIALS)}
    return TLElement(n, terms, sign)  # type: ignore[arg-type]


def suite_cellular(ctx: SuiteContext, rec: CheckRecorder, n: int) -> None:
    sign = ctx.delta_sign
    rng = ctx.rng(n)
    for s in ctx.shapes(n):
        links = link_diagrams(n, s.weight)
        images = {phi_map(link) for link in links}
        rec.equal("phi is injective on the basis", len(images), len(links), shape=s)
        for link in links:
            elem = CellModuleElement.basis(link, sign)  # type: ignore[arg-type]
            for i in range(1, n):
                lhs = ei_matrix(n, i, sign)(phi_map(link))  # type: ignore[arg-type]
                rhs = phi_element(cell_act(generator(n, i), elem))
                rec.equal("e_i phi = phi e_i", lhs, rhs, link=link, i=i)
            x = _random_tl_element(n, rng, sign)
            lhs = tl_act_on_tensor(x, phi_map(link))
            rec.equal("x phi = phi x", lhs, phi_element(tl_act_on_cell(x, elem)), link=link, x=x)


def suite_ei_omega(ctx: SuiteContext, rec: CheckRecorder, n: int) -> None:
    for s in ctx.shapes(n):
        for alpha in enumerate_one_factors(s):
            for i in range(1, n):
                lhs = _omega_sum(ei_on_omega(alpha, i, ctx.delta_sign), n)  # type: ignore[arg-type]
                rhs = ei_matrix(n, i, ctx.delta_sign)(build_omega(alpha))  # type: ignore[arg-type]
                rec.equal("e_i omega closed form", lhs, rhs, alpha=alpha, i=i)


def suite_stability(ctx: SuiteContext, rec: CheckRecorder, n: int) -> None:
    for s in ctx.shapes(n):
        for alpha in enumerate_one_factors(s):
            for i in range(1, n):
                x = ei_matrix(n, i, ctx.delta_sign)(build_omega(alpha))  # type: ignore[arg-type]
                rec.equal("e_i omega stays in the span", _omega_sum(omega_coordinates(x, s), n), x, alpha=alpha, i=i)


def suite_schur_weyl(ctx: SuiteContext, rec: CheckRecorder, n: int) -> None:
    rec.equal(
        "rank of diagram operators",
        diagram_span_rank(n, ctx.rank_v0, ctx.delta_sign),  # type: ignore[arg-type]
        catalan(n),
        n=n,
        v0=ctx.rank_v0,
    )


SUITES: dict[str, SuiteFn] = {
    "qscalars": suite_qscalars,
    "dimensions": suite_dimensions,
    "shapes": suite_shapes,
    "tensor": suite_tensor,
    "schur": suite_schur,
    "orthogonality": suite_orthogonality,
    "nu": suite_nu,
    "pairing": suite_pairing,
    "recursion": suite_recursion,
    "inverse": suite_inverse,
    "pipp": suite_pipp,
    "orbit": suite_orbit,
    "tl-relations": suite_tl_relations,
    "commute": suite_commute,
    "cellular": suite_cellular,
    "ei-omega": suite_ei_omega,
    "stability": suite_stability,
    "schur-weyl": suite_schur_weyl,
}

# suites whose equalities are meaningful after specializing v
SPECIALIZABLE = ("orthogonality", "pairing", "inverse", "tl-relations", "commute", "cellular", "ei-omega")


def _sizes(n: int, shape: Shape | None) -> Iterable[int]:
    if shape is not None:
        return [shape.n]
    return range(1, n + 1)


def run_suite(
    name: str,
    n: int | None = None,
    settings: Settings | None = None,
    *,
    shape: Shape | None = None,
    seed: int | None = None,
    delta_sign: str | None = None,
    specialize_at: Fraction | None = None,
) -> VerificationReport:
    """Run one suite for every size up to n; CLI values override ``settings``."""
    if name not in SUITES:
        raise ConfigError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    settings = settings or Settings()
    n = n if n is not None else (shape.n if shape is not None else settings.n_max(name))
    ctx = SuiteContext(
        seed=settings.seed if seed is None else seed,
        delta_sign=delta_sign or settings.delta_sign,
        shape=shape,
        rank_v0=parse_rational(settings.rank_specialization),
    )
    rec = CheckRecorder(name, n, specialize_at)
    logger.info("suite %s: n <= %d, delta sign %s", name, n, ctx.delta_sign)
    for size in _sizes(n, shape):
        SUITES[name](ctx, rec, size)
    report = rec.finish()
    report.shape = None if shape is None else str(shape)
    report.seed, report.delta_sign = ctx.seed, ctx.delta_sign
    level = "passed" if report.passed else f"failed {len(report.failures)} of"
    logger.info("suite %s %s %d checks in %.2fs", name, level, report.checks_run, report.wall_time)
    return report


def run_all(settings: Settings | None = None, **kwargs: Any) -> list[VerificationReport]:
    """Every suite, or only the specializable ones when a specialization value is given."""
    settings = settings or Settings()
    names = SPECIALIZABLE if kwargs.get("specialize_at") is not None else tuple(SUITES)
    return [run_suite(name, settings=settings, **kwargs) for name in names]
