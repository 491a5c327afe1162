"""
Tests for combinatorics.shapes
------------------------------
1-factors, the bijections with walks, link diagrams and tableaux, dominance and counting.
"""

import pytest

from orthotl.combinatorics.shapes import (
    BratteliWalk,
    Dominance,
    LinkDiagramHalf,
    OneFactor,
    Shape,
    StandardTableau2Row,
    catalan,
    compare_dominance,
    convert,
    count_paths,
    count_walks_brute_force,
    diamond_sequences,
    dominant_weights,
    dominated_by,
    enumerate_one_factors,
    is_compatible,
    shapes_of,
    x_weights,
)
from orthotl.core.errors import InvalidCombinatorialDataError, LengthMismatchError

pytestmark = pytest.mark.unit


def test_shape_parsing_and_weights():
    shape = Shape.parse("3,1")
    assert shape == Shape(3, 1)
    assert (shape.n, shape.weight) == (4, 2)
    assert Shape.from_weight(4, 2) == shape
    with pytest.raises(InvalidCombinatorialDataError):
        Shape(1, 2)
    with pytest.raises(InvalidCombinatorialDataError):
        Shape.parse("3")


def test_weight_sets():
    assert x_weights(3) == [3, 1, -1, -3]
    assert dominant_weights(4) == [4, 2, 0]
    assert [s.n for s in shapes_of(5)] == [5, 5, 5]


def test_one_factor_data():
    alpha = OneFactor((1, 1, -1, -1))
    assert alpha.pairs == ((2, 3), (1, 4))
    assert alpha.defects == ()
    assert alpha.shape == Shape(2, 2)
    beta = OneFactor.parse("++-")
    assert beta == OneFactor((1, 1, -1))
    assert beta.defects == (1,)
    assert beta.weight == 1
    assert beta.is_defect(1) and not beta.is_defect(2)
    assert OneFactor.parse("1,-1,1") == OneFactor((1, -1, 1))


def test_invalid_one_factors():
    with pytest.raises(InvalidCombinatorialDataError):
        OneFactor((1, -1, -1))
    with pytest.raises(InvalidCombinatorialDataError):
        OneFactor((1, 0))
    with pytest.raises(InvalidCombinatorialDataError):
        OneFactor((1, -1)).minus()


def test_derived_one_factors():
    assert OneFactor((1, 1)).link(1) == OneFactor((1, -1))
    assert OneFactor((1,)).plus_link(1) == OneFactor((1, -1))
    assert OneFactor((1, 1)).plus_link(2) == OneFactor((1, 1, -1))
    assert OneFactor((1, 1)).plus_link(1) == OneFactor((1, -1, 1))
    with pytest.raises(InvalidCombinatorialDataError):
        OneFactor((1, 1)).link(2)


def test_statistics():
    alpha = OneFactor((1, 1, -1, 1, -1, -1))
    assert alpha.max_weight == 2
    assert alpha.w(1) == 0 and alpha.w(4) == 1
    assert alpha.minus_positions() == (3, 5, 6)
    assert alpha.s_values() == (2, 2, 1)


def test_bijections():
    alpha = OneFactor((1, 1, -1, -1))
    assert convert(alpha, "walk") == BratteliWalk("VVDD")
    assert convert(alpha, "link") == LinkDiagramHalf(4, ((1, 4), (2, 3)))
    assert convert(alpha, "tableau") == StandardTableau2Row((1, 2), (3, 4))
    for kind in ("walk", "link", "tableau"):
        assert convert(convert(alpha, kind), "one_factor") == alpha
    assert str(convert(OneFactor((1, -1, 1)), "link")) == "()|"


def test_invalid_link_diagrams():
    with pytest.raises(InvalidCombinatorialDataError):
        LinkDiagramHalf(4, ((1, 3), (2, 4)))
    with pytest.raises(InvalidCombinatorialDataError):
        LinkDiagramHalf(3, ((1, 3),))
    assert LinkDiagramHalf.from_json([2, 1, 0]).links == ((1, 2),)


def test_enumeration_order_and_counts(shape_21):
    assert enumerate_one_factors(shape_21) == (OneFactor((1, -1, 1)), OneFactor((1, 1, -1)))
    assert len(enumerate_one_factors(Shape(3, 3))) == catalan(3) == 5
    for n in range(1, 9):
        for s in shapes_of(n):
            assert count_paths(s) == count_walks_brute_force(s) == len(enumerate_one_factors(s))


def test_dimension_identities():
    for n in range(1, 13):
        shapes = shapes_of(n)
        assert sum(count_paths(s) * (s.weight + 1) for s in shapes) == 2**n
        assert sum(count_paths(s) ** 2 for s in shapes) == catalan(n)


def test_dominance():
    low, high = OneFactor((1, -1, 1, -1)), OneFactor((1, 1, -1, -1))
    assert compare_dominance(low, high) is Dominance.LESS
    assert compare_dominance(high, low) is Dominance.GREATER
    assert compare_dominance(low, low) is Dominance.EQUAL
    assert dominated_by(low, high) and not dominated_by(high, low)
    with pytest.raises(LengthMismatchError):
        compare_dominance(low, OneFactor((1, -1)))


def test_compatibility_and_defect_obstruction():
    alpha = OneFactor((1, 1, -1, -1))
    assert is_compatible(alpha, OneFactor((1, -1, 1, -1)))
    assert is_compatible(alpha, alpha)
    # alpha has a defect at 3, beta is -1 there
    alpha, beta = OneFactor((1, -1, 1, 1)), OneFactor((1, 1, -1, 1))
    assert not is_compatible(alpha, beta)


def test_diamond_sequences_of_worked_pair():
    alpha = OneFactor((1, 1, 1, 1, 1, -1, -1, -1))
    beta = OneFactor((1, -1, 1, -1, 1, -1, 1, 1))
    sequences = diamond_sequences(alpha, beta)
    assert len(sequences) == 6
    assert all(seq.factors[-1] == beta for seq in sequences)
    assert all(len(seq.variables) == 3 for seq in sequences)


@pytest.mark.parametrize("n", range(1, 9))
def test_every_diamond_sequence_ends_at_beta(n):
    for s in shapes_of(n):
        factors = enumerate_one_factors(s)
        for alpha in factors:
            for beta in factors:
                for seq in diamond_sequences(alpha, beta):
                    assert seq.factors[-1] == beta
                    assert len(seq.factors) == n + 1


@pytest.mark.parametrize("n", range(1, 9))
def test_plus_links_are_strictly_ordered(n):
    for s in shapes_of(n):
        for alpha in enumerate_one_factors(s):
            links = [alpha.plus_link(j) for j in range(1, alpha.weight + 1)]
            for lower, higher in zip(links, links[1:]):
                assert compare_dominance(higher, lower) is Dominance.GREATER


def test_plus_links_of_three_defects():
    links = [OneFactor((1, 1, 1)).plus_link(j) for j in (1, 2, 3)]
    assert links == [OneFactor((1, -1, 1, 1)), OneFactor((1, 1, -1, 1)), OneFactor((1, 1, 1, -1))]
