"""
Tests for modules.tensor_rep
----------------------------
Positional action of E and F, the bilinear form and maximal-vector counts.
"""

import numpy as np
import pytest

from orthotl.core.errors import InhomogeneousError, LengthMismatchError, ZeroVectorError
from orthotl.core.qscalars import SCALAR_ZERO, bracket, vpow
from orthotl.modules.tensor_rep import (
    TensorVector,
    act_E,
    act_F,
    act_K,
    act_K_inverse,
    act_power,
    all_signs,
    bilinear_form,
    commutator_rhs,
    is_invariant,
    is_maximal,
    maximal_space_dimension,
    pack_signs,
    random_vector,
    unpack_signs,
    weight_space_basis,
    y,
)

pytestmark = pytest.mark.unit


def test_F_and_E_on_basis_tensors():
    assert act_F(y(1, 1)) == y(1, -1) + y(-1, 1).scale(vpow(-1))
    assert act_E(y(-1, -1)) == y(1, -1) + y(-1, 1).scale(vpow(-1))
    assert act_E(y(1, 1)).is_zero()
    assert bilinear_form(act_F(y(1, 1)), y(1, 1)) == 0


def test_K_acts_by_weight():
    x = y(1, 1, -1)
    assert act_K(x) == x.scale(vpow(1))
    assert act_K_inverse(act_K(x)) == x


def test_invariant_of_degree_two(v):
    z0 = y(1, -1) - y(-1, 1).scale(v)
    assert is_invariant(z0)
    assert is_maximal(z0)
    assert bilinear_form(z0, z0) == 1 + vpow(2)


def test_commutator(rng):
    for _ in range(3):
        x = random_vector(4, rng)
        assert act_E(act_F(x)) - act_F(act_E(x)) == commutator_rhs(x)


def test_adjointness(rng):
    for k in (-2, 0):
        b, b2 = random_vector(4, rng, weight=k), random_vector(4, rng, weight=k + 2)
        assert bilinear_form(act_E(b), b2) == vpow(k + 1) * bilinear_form(b, act_F(b2))


def test_divided_power_of_F_on_top_vector():
    top = y(1, 1, 1)
    f3 = act_power(act_F, 3, top)
    assert f3.weights() == {-3}
    assert f3.coeff((-1, -1, -1)) == bracket(3) * bracket(2)


def test_weight_spaces_and_maximal_dimensions():
    assert weight_space_basis(2, 0) == [(1, -1), (-1, 1)]
    assert weight_space_basis(3, 0) == []
    assert maximal_space_dimension(4, 0) == 2
    assert maximal_space_dimension(4, 2) == 3
    assert maximal_space_dimension(4, 4) == 1


def test_errors():
    with pytest.raises(ZeroVectorError):
        is_maximal(TensorVector.zero(2))
    with pytest.raises(InhomogeneousError):
        (y(1) + y(-1)).weight()
    with pytest.raises(LengthMismatchError):
        bilinear_form(y(1), y(1, 1))


def test_json_round_trip():
    x = y(1, -1).scale(bracket(2)) - y(-1, 1)
    assert TensorVector.from_json(x.to_json()) == x


def test_packed_sign_masks():
    assert pack_signs((1, 1, 1)) == 0
    assert pack_signs((-1, 1, -1)) == 0b101
    assert unpack_signs(0b101, 3) == (-1, 1, -1)
    assert all(unpack_signs(pack_signs(s), 4) == s for s in weight_space_basis(4, 0))


def test_dense_coefficients_follow_packed_masks(v):
    x = y(1, -1) - y(-1, 1).scale(v)
    dense = x.to_dense()
    assert dense.shape == (4,)
    assert dense[0b10] == 1 and dense[0b01] == -v
    assert not dense[0] and not dense[0b11]
    assert TensorVector.from_dense(2, dense) == x
    with pytest.raises(LengthMismatchError):
        TensorVector.from_dense(3, dense)


def test_dense_and_sparse_paths_agree():
    signs = all_signs(4)
    x = TensorVector(4, {s: vpow(k) + 1 for k, s in enumerate(signs)})
    z = TensorVector(4, {s: bracket(k + 2) for k, s in enumerate(signs[:12])})
    assert x.is_dense() and z.is_dense() and not y(1, 1, 1, 1).is_dense()
    assert x.density == 1.0
    expected = TensorVector(4, {s: x.coeff(s) + z.coeff(s) for s in signs})
    assert x + z == expected
    pairing = SCALAR_ZERO
    for s in signs[:12]:
        pairing = pairing + x.coeff(s) * z.coeff(s)
    assert bilinear_form(x, z) == pairing
    assert bilinear_form(x, y(1, 1, 1, 1)) == x.coeff((1, 1, 1, 1))
    assert np.count_nonzero([bool(c) for c in expected.to_dense()]) == 16
