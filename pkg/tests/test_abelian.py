import math
from fractions import Fraction

import pytest

from intersective.abelian import (GroupSpec, RootOfUnity, character_value,
                                  count_character_extensions, element_order, format_element,
                                  parse_element, parse_element_set, parse_group,
                                  subgroup_generated)


def test_group_spec_basics():
    G = GroupSpec((2, 4))
    assert G.order == 8
    assert G.rank == 2
    assert not G.is_cyclic()
    assert GroupSpec((2, 3)).is_cyclic()
    assert G.zero() == (0, 0)
    assert G.add((1, 3), (1, 2)) == (0, 1)
    assert G.neg((1, 3)) == (1, 1)
    assert G.sub((0, 1), (1, 3)) == (1, 2)
    assert G.scale(3, (1, 1)) == (1, 3)
    assert str(G) == "2x4"
    assert len(list(G.elements())) == 8


def test_group_spec_rejects_bad_orders():
    with pytest.raises(ValueError):
        GroupSpec(())
    with pytest.raises(ValueError):
        GroupSpec((1,))
    with pytest.raises(ValueError):
        GroupSpec((0, 4))


def test_element_coercion():
    G = GroupSpec((5,))
    assert G.element(7) == (2,)      # bare int for rank 1
    assert G.element((-1,)) == (4,)
    with pytest.raises(ValueError):
        GroupSpec((2, 2)).element((1,))


def test_canonical_sorts_factors():
    assert GroupSpec((4, 2)).canonical() == GroupSpec((2, 4))


@pytest.mark.parametrize("orders,g,order", [
    ((6,), (1,), 6),
    ((6,), (2,), 3),
    ((6,), (3,), 2),
    ((6,), (0,), 1),
    ((2, 4), (1, 2), 2),
    ((2, 4), (1, 1), 4),
    ((3, 5), (1, 1), 15),
])
def test_element_order(orders, g, order):
    assert element_order(GroupSpec(orders), g) == order


def test_subgroup_generated():
    G = GroupSpec((12,))
    H = subgroup_generated(G, [(4,)])
    assert H.order == 3
    assert H.index == 4
    assert H.contains((8,))
    assert not H.contains((2,))
    assert H.sorted_members() == [(0,), (4,), (8,)]

    G2 = GroupSpec((2, 4))
    H2 = subgroup_generated(G2, [(1, 0), (0, 2)])
    assert H2.order == 4
    assert H2.index == 2
    assert H2.contains((1, 2))


def test_subgroup_trivial_and_full():
    G = GroupSpec((7,))
    assert subgroup_generated(G, []).order == 1
    assert subgroup_generated(G, [(3,)]).order == 7


def test_root_of_unity_exact_arithmetic():
    w = RootOfUnity.from_fraction(Fraction(1, 3))
    assert w.angle == Fraction(1, 3)
    assert (w * w).angle == Fraction(2, 3)
    assert (w * w * w).is_one()
    assert w.conjugate().angle == Fraction(2, 3)
    z = w.to_complex()
    assert abs(z - complex(-0.5, math.sqrt(3) / 2)) < 1e-12


def test_character_value_is_exact_angle():
    G = GroupSpec((6,))
    # chi_2(5) = e(2*5/6) = e(5/3)
    assert character_value(G, (2,), (5,)).angle == Fraction(2, 3)
    G2 = GroupSpec((2, 4))
    # e(1/2 + 2/4) = e(1)
    assert character_value(G2, (1, 1), (1, 2)).angle == 0


def test_character_orthogonality_small():
    """Sum of chi(g) over g is |G| at the trivial character, else 0."""
    G = GroupSpec((3, 4))
    for chi in G.elements():
        total = sum(character_value(G, chi, g).to_complex() for g in G.elements())
        expected = G.order if chi == G.zero() else 0
        assert abs(total - expected) < 1e-9, chi


def test_count_character_extensions():
    G = GroupSpec((6,))
    # characters with chi(2) = e(x/3) number [G:<2>] = 2 for every x
    for x in range(3):
        assert count_character_extensions(G, (2,), x) == 2
    with pytest.raises(ValueError):
        count_character_extensions(G, (2,), 5)


def test_parse_group_round_trip():
    assert parse_group("105").orders == (105,)
    assert parse_group("2x4").orders == (2, 4)
    assert parse_group(" 2X4 ").orders == (2, 4)
    with pytest.raises(ValueError):
        parse_group("Z7")


def test_parse_element_and_set():
    G = parse_group("2x4")
    assert parse_element(G, "1,3") == (1, 3)
    assert parse_element_set(G, "0,0;1,3;0,0") == [(0, 0), (1, 3)]
    with pytest.raises(ValueError):
        parse_element(G, "3")
    with pytest.raises(ValueError):
        parse_element_set(G, "")
    G1 = parse_group("9")
    assert parse_element(G1, "11") == (2,)
    assert format_element((1, 3)) == "1,3"
    assert format_element((4,)) == "4"
