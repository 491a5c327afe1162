"""
Tests for modules.transitions
-----------------------------
Closed and recursive pairings, the matrices P and P', and the pi'' polynomials.
"""

import pytest
import sympy

from orthotl.combinatorics.shapes import OneFactor, Shape, enumerate_one_factors
from orthotl.core import matrices as mx
from orthotl.core.errors import ShapeMismatchError
from orthotl.core.qscalars import SCALAR_ONE, bracket
from orthotl.modules.maximal import build_nu, build_omega, combine
from orthotl.modules.transitions import (
    expand_nu_in_omega,
    expand_omega_in_nu,
    inverse_checks,
    matrix_P,
    matrix_Pprime,
    pairing_value,
    pairing_value_direct,
    pairing_value_recursive,
    pi_double_prime,
    pi_entry,
    pipp_table,
    s_prime_values,
)

pytestmark = pytest.mark.unit

UP, MIXED = OneFactor((1, 1, -1)), OneFactor((1, -1, 1))


def test_pairings_of_shape_21(v, q2):
    assert s_prime_values(UP, UP) == (3,)
    assert s_prime_values(UP, MIXED) == (-1,)
    assert pairing_value(UP, UP) == v * bracket(3)
    assert pairing_value(UP, MIXED) == -v
    assert pi_entry(UP, UP) == q2.inverse()
    assert pi_entry(UP, MIXED) == -q2.inverse()
    assert pairing_value(MIXED, UP) == 0


def test_P_and_Pprime_for_shape_21(shape_21, q2):
    p, pp = matrix_P(shape_21), matrix_Pprime(shape_21)
    assert p.index == (MIXED, UP)
    assert pp.row(UP) == {MIXED: SCALAR_ONE, UP: q2}
    assert pp.row(MIXED) == {MIXED: SCALAR_ONE}
    assert p.entry(UP, MIXED) == -q2.inverse()
    assert mx.is_identity(p @ pp)


@pytest.mark.parametrize("shape", [Shape(2, 2), Shape(3, 2), Shape(3, 3), Shape(4, 3)])
def test_pairing_routes_agree(shape):
    factors = enumerate_one_factors(shape)
    for alpha in factors:
        for beta in factors:
            closed = pairing_value(alpha, beta)
            assert closed == pairing_value_direct(alpha, beta)
            assert closed == pairing_value_recursive(alpha, beta)


def test_worked_omega_expansion(alpha_33, q2):
    row = expand_omega_in_nu(alpha_33)
    assert row == {
        OneFactor((1, 1, 1, -1, -1, -1)): bracket(3) * q2,
        OneFactor((1, 1, -1, 1, -1, -1)): q2 * q2,
        OneFactor((1, 1, -1, -1, 1, -1)): q2,
        OneFactor((1, -1, 1, 1, -1, -1)): q2,
        OneFactor((1, -1, 1, -1, 1, -1)): bracket(3) + 1,
    }
    assert combine(row, "nu") == build_omega(alpha_33)


def test_nu_expansion_in_omega(alpha_33):
    assert combine(expand_nu_in_omega(alpha_33)) == build_nu(alpha_33)


@pytest.mark.parametrize("shape", [Shape(3, 1), Shape(3, 3), Shape(4, 2), Shape(5, 3)])
def test_transition_matrices_are_inverse_and_triangular(shape):
    assert inverse_checks(shape) == (True, True)
    for m in (matrix_P(shape), matrix_Pprime(shape)):
        assert m.is_triangular()
        assert m.has_nonzero_diagonal()


def test_closed_and_gram_routes_give_same_P():
    shape = Shape(3, 2)
    assert mx.equal(matrix_P(shape).entries, matrix_P(shape, "gram").entries)


def test_shape_mismatch():
    with pytest.raises(ShapeMismatchError):
        pairing_value(UP, OneFactor((1, 1, 1)))


def test_worked_pi_double_prime():
    alpha = OneFactor((1, 1, 1, 1, 1, -1, -1, -1))
    beta = OneFactor((1, -1, 1, -1, 1, -1, 1, 1))
    poly = pi_double_prime(alpha, beta)
    t1, t2, t3, t4, t5 = poly.symbols()
    expected = t1**3 + 2 * t1**2 * t3 + t1 * t3**2 + t1**2 * t5 + t1 * t3 * t5
    assert sympy.expand(poly.as_expr() - expected) == 0
    assert poly.has_nonnegative_coefficients()
    assert poly.substitute_quantum() == matrix_Pprime(Shape(5, 3)).entry(alpha, beta)


def test_pipp_table_reproduces_Pprime():
    shape = Shape(3, 2)
    pp = matrix_Pprime(shape)
    table = pipp_table(shape)
    for alpha in pp.index:
        for beta in pp.index:
            poly = table.get((alpha, beta))
            value = poly.substitute_quantum() if poly is not None else 0
            assert value == pp.entry(alpha, beta)


def test_single_sequence_polynomial_is_monomial():
    poly = pi_double_prime(MIXED, MIXED)
    assert poly.is_monomial()
    assert poly.substitute_quantum() == SCALAR_ONE
