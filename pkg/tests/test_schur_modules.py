"""
Tests for modules.schur_modules
-------------------------------
Word parsing, the simple modules V(m) and identities in the faithful representation of S(n).
"""

import pytest

from orthotl.core.errors import InvalidCombinatorialDataError
from orthotl.core.qscalars import bracket
from orthotl.modules.schur_modules import (
    E,
    F,
    FaithfulRep,
    GeneratorWord,
    VmVector,
    apply_involution,
    basis_rank,
    blocks_equal,
    involution_matrix_checks,
    one,
    relation_checks,
    schur_dimension,
    spanning_words,
    top_idempotent_sides,
    verify_lu_identity,
    vm_act,
)

pytestmark = pytest.mark.unit


@pytest.fixture(scope="module")
def rep3():
    return FaithfulRep(3)


def test_word_parsing():
    w = GeneratorWord.parse("F^(2) 1_2 E")
    assert w == GeneratorWord.of(F(2, True), one(2), E())
    assert str(w) == "F^(2) 1_2 E"
    assert len(GeneratorWord.parse("E^3 * F K^-1")) == 3
    with pytest.raises(InvalidCombinatorialDataError):
        GeneratorWord.parse("E G")


def test_involutions_on_words():
    w = GeneratorWord.parse("E 1_2 F")
    assert apply_involution(w, "omega") == GeneratorWord.parse("F 1_-2 E")
    assert apply_involution(w, "star") == GeneratorWord.parse("E 1_2 F")
    assert apply_involution(GeneratorWord.parse("E F F"), "star") == GeneratorWord.parse("E E F")


def test_simple_module_action():
    x0 = VmVector.basis(2, 0)
    assert vm_act(F(), x0) == VmVector.basis(2, 1)
    assert vm_act(E(), VmVector.basis(2, 1)) == VmVector.basis(2, 0).scale(bracket(2))
    assert vm_act(F(2, True), x0) == VmVector.basis(2, 2).scale(bracket(2).inverse())
    assert vm_act(one(0), VmVector.basis(2, 1)) == VmVector.basis(2, 1)
    assert vm_act(one(2), VmVector.basis(2, 1)).coords == {}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_defining_relations(n):
    rep = FaithfulRep(n)
    assert all(relation_checks(rep).values())
    assert blocks_equal(*top_idempotent_sides(rep))


def test_divided_power_identities(rep3):
    for a in range(3):
        for b in range(3):
            for i in (3, 1, -1, -3):
                assert verify_lu_identity(3, a, b, i, rep3)


def test_dimension_and_rank():
    assert [schur_dimension(n) for n in range(1, 6)] == [4, 10, 20, 35, 56]
    assert basis_rank(2) == schur_dimension(2)
    assert basis_rank(3, words=spanning_words(3)) == schur_dimension(3)


def test_truncation_kills_top_idempotents(rep3):
    small = rep3.truncate()
    assert small.block_sizes() == (2,)
    assert blocks_equal(small.word_matrix("1_3"), small.zero())
    assert blocks_equal(small.word_matrix("1_-3"), small.zero())


def test_involution_matrix_checks(rep3):
    checks = involution_matrix_checks(rep3, GeneratorWord.parse("F^(2) 1_1 E"), GeneratorWord.parse("E K F"))
    assert all(checks.values())
