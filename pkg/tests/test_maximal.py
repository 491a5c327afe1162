"""
Tests for modules.maximal
-------------------------
The omega and nu vectors, nesting, norms and F-orbits.
"""

import pytest

from orthotl.combinatorics.shapes import BratteliWalk, LinkDiagramHalf, OneFactor, Shape, enumerate_one_factors
from orthotl.core.errors import InhomogeneousError, NotInvariantError
from orthotl.core.matrices import is_diagonal
from orthotl.core.qscalars import bracket, vpow
from orthotl.modules.maximal import (
    basis_F_orbit,
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
    phi2,
    phi2_nu_expansion,
    psi_nest,
)
from orthotl.modules.tensor_rep import bilinear_form, gram_matrix, is_maximal, tensor, y

pytestmark = pytest.mark.unit


def test_degree_two_vectors_are_z0(v):
    z0 = y(1, -1) - y(-1, 1).scale(v)
    alpha = OneFactor((1, -1))
    assert build_omega(alpha) == z0
    assert build_nu(alpha) == z0
    assert build_omega(BratteliWalk("VD")) == z0


def test_omega_of_length_three(v, q2):
    expected = y(1, 1, -1).scale(q2) - y(1, -1, 1).scale(vpow(2)) - y(-1, 1, 1).scale(v)
    assert build_omega(OneFactor((1, 1, -1))) == expected


def test_all_defects_gives_top_tensor():
    assert build_nu(OneFactor((1, 1, 1))) == y(1, 1, 1)
    assert build_omega(OneFactor((1, 1, 1))) == y(1, 1, 1)


@pytest.mark.parametrize("shape", [Shape(2, 2), Shape(3, 2), Shape(3, 3), Shape(4, 2)])
def test_omega_vectors_are_orthogonal_and_maximal(shape):
    ordered = build_basis(shape, "omega").ordered()
    gram = gram_matrix([w for _, w in ordered])
    assert is_diagonal(gram)
    for k, (alpha, w) in enumerate(ordered):
        assert is_maximal(w)
        assert gram[k, k] == nu_norm(alpha)


def test_nu_by_nesting_matches_switch_expansion():
    for shape in (Shape(3, 3), Shape(4, 2)):
        for alpha in enumerate_one_factors(shape):
            assert build_nu_by_nesting(alpha) == build_nu(alpha)
    link = LinkDiagramHalf(4, ((1, 4), (2, 3)))
    assert build_nu_by_nesting(link) == build_nu(OneFactor((1, 1, -1, -1)))


def test_nu_recursions():
    for alpha in enumerate_one_factors(Shape(3, 1)):
        assert phi2(build_nu(alpha), alpha.weight) == phi2_nu_expansion(alpha)
        assert nu_reconstruct_minus(alpha) == build_nu(alpha.minus())


def test_nesting_and_phi2_errors(v):
    with pytest.raises(NotInvariantError):
        psi_nest(y(1, -1))
    with pytest.raises(InhomogeneousError):
        phi2(y(1, 1), 0)
    z0 = y(1, -1) - y(-1, 1).scale(v)
    assert psi_nest(z0) == tensor(y(1), z0, y(-1)) - tensor(y(-1), z0, y(1)).scale(v)


def test_norm_of_z0():
    assert nu_norm(OneFactor((1, -1))) == 1 + vpow(2)


def test_nu_norm_is_the_omega_length_not_the_nu_length():
    nested = OneFactor((1, 1, -1, -1))
    omega = build_omega(nested)
    assert nu_norm(nested) == bilinear_form(omega, omega)
    assert nu_norm(nested) != bilinear_form(build_nu(nested), build_nu(nested))
    flat = OneFactor((1, -1, 1, -1))
    assert nu_norm(flat) == bilinear_form(build_omega(flat), build_omega(flat))


def test_orbit_norms_are_powers_of_v():
    alpha = OneFactor((1, 1, -1, 1))
    orbit = basis_F_orbit(alpha)
    assert len(orbit) == alpha.weight + 1
    for a in range(alpha.weight + 1):
        assert monomial_exponent(orbit_norm_ratio(alpha, a)) is not None
    assert monomial_exponent(bracket(2)) is None
    assert monomial_exponent(vpow(-3)) == -3


def test_F_orbits_are_orthogonal():
    shape = Shape(3, 1)
    vectors = [x for alpha in enumerate_one_factors(shape) for x in basis_F_orbit(alpha)]
    assert is_diagonal(gram_matrix(vectors))


def test_omega_coordinates_recover_combinations(q2):
    shape = Shape(2, 1)
    coeffs = {OneFactor((1, -1, 1)): q2, OneFactor((1, 1, -1)): vpow(-1)}
    x = combine(coeffs)
    assert omega_coordinates(x, shape) == coeffs
    assert bilinear_form(x, build_omega(OneFactor((1, -1, 1)))) == q2 * nu_norm(OneFactor((1, -1, 1)))
