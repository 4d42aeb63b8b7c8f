import pickle
from itertools import product

import pytest
from hypothesis import given, strategies as st

from freeboole.algebra import (
    OMEGA, Element, GeneratorFamily, Homomorphism, PartialMap, SetAlgebra, closure,
    elementary_product, identity_hom, is_n_preserving, minimal_zero_masks, parse_degree,
    check_degree, point_signatures, sikorski_extends, zero_subsets_closure,
)
from freeboole.errors import DimensionError, MembershipError, PreconditionError

import oracles


@st.composite
def families(draw, max_ground=6, max_members=4):
    g = draw(st.integers(1, max_ground))
    full = (1 << g) - 1
    masks = draw(st.lists(st.integers(1, full), min_size=1, max_size=max_members, unique=True))
    return g, masks


def test_omega_orders_above_integers():
    assert OMEGA > 10 ** 9 and not OMEGA < 3 and OMEGA == OMEGA
    assert max(3, OMEGA) is OMEGA
    assert pickle.loads(pickle.dumps(OMEGA)) is OMEGA
    assert parse_degree("omega") is OMEGA and parse_degree("3") == 3


@pytest.mark.parametrize("bad", [0, -1, True, 1.5, "2"])
def test_check_degree_rejects(bad):
    with pytest.raises(ValueError):
        check_degree(bad)


def test_element_ops():
    a = Element.from_points(5, [0, 1, 2])
    b = Element.from_points(5, [2, 3])
    assert (a & b).points == (2,)
    assert (a | b).points == (0, 1, 2, 3)
    assert (a - b).points == (0, 1)
    assert (~a).points == (3, 4)
    assert Element.from_points(5, [2]) <= a and not b <= a
    assert a.disjoint(~a) and len(a) == 3 and 4 not in a and 7 not in a
    with pytest.raises(DimensionError):
        a & Element(4, 1)
    with pytest.raises(ValueError):
        Element(3, 8)
    with pytest.raises(ValueError):
        Element.from_points(3, [3])


@given(families())
def test_closure_matches_brute_force(case):
    g, masks = case
    alg = closure(g, [Element(g, m) for m in masks])
    expected = oracles.generated_subalgebra(masks, g)
    assert {e.mask for e in alg.elements()} == expected
    assert sorted(alg.atom_masks) == oracles.atoms_of(expected)
    assert alg.size == len(expected)


def test_powerset_and_membership():
    p = SetAlgebra.powerset(3)
    assert p.num_atoms == 3 and p.size == 8
    half = SetAlgebra(4, [Element(4, 0b0011)])
    assert Element(4, 0b0011) in half and Element(4, 0b0001) not in half
    with pytest.raises(MembershipError):
        half.atoms_below(Element(4, 0b0001))
    with pytest.raises(PreconditionError):
        SetAlgebra(0)
    with pytest.raises(DimensionError):
        SetAlgebra(3, [Element(4, 1)])


def test_family_validation():
    a = SetAlgebra.powerset(3)
    with pytest.raises(PreconditionError):
        GeneratorFamily(a, [Element(3, 0)])
    with pytest.raises(PreconditionError):
        GeneratorFamily(a, [Element(3, 1), Element(3, 1)])
    with pytest.raises(MembershipError):
        GeneratorFamily(SetAlgebra(3, [Element(3, 0b011)]), [Element(3, 0b001)])


def test_elementary_product():
    fam = GeneratorFamily.generating(3, [Element(3, 0b011), Element(3, 0b110)])
    assert elementary_product(fam, {}).is_one()
    assert elementary_product(fam, {0: 1, 1: 0}).mask == 0b001
    with pytest.raises(ValueError):
        elementary_product(fam, {0: 2})
    with pytest.raises(IndexError):
        elementary_product(fam, {5: 1})


@given(families())
def test_minimal_zero_sets_match_brute_force(case):
    g, masks = case
    sigs = point_signatures(g, masks)
    got = [tuple(i for i in range(len(masks)) if z >> i & 1)
           for z in minimal_zero_masks(sigs, len(masks))]
    assert got == oracles.minimal_zero_sets(masks, g)
    down = zero_subsets_closure(sigs)
    full = (1 << g) - 1
    for s in range(1 << len(masks)):
        nonzero = oracles.meet((masks[i] for i in range(len(masks)) if s >> i & 1), full) != 0
        assert (s in down) == nonzero


@given(families(max_ground=5, max_members=3), st.integers(1, 2), st.data())
def test_sikorski_matches_homomorphism_search(case, t, data):
    g, masks = case
    images = data.draw(st.lists(st.integers(0, (1 << t) - 1),
                                min_size=len(masks), max_size=len(masks)))
    fam = GeneratorFamily.generating(g, [Element(g, m) for m in masks])
    pmap = PartialMap(fam, SetAlgebra.powerset(t), [Element(t, y) for y in images])
    hom = sikorski_extends(pmap)
    assert (hom is not None) == oracles.extends_by_search(masks, g, images, t)
    if hom is not None:
        assert [hom(x).mask for x in fam.members] == images
        # a homomorphism preserves every Boolean operation
        for x, y in product(list(fam.algebra.elements())[:8], repeat=2):
            assert hom(x | y) == hom(x) | hom(y)
            assert hom(~x) == ~hom(x)


@given(families(max_ground=5, max_members=4), st.data())
def test_n_preserving_against_definition(case, data):
    g, masks = case
    t = 2
    images = data.draw(st.lists(st.integers(0, 3), min_size=len(masks), max_size=len(masks)))
    fam = GeneratorFamily.generating(g, [Element(g, m) for m in masks])
    pmap = PartialMap(fam, SetAlgebra.powerset(t), [Element(t, y) for y in images])
    full_src, full_tgt = (1 << g) - 1, (1 << t) - 1
    for n in (1, 2, 3, OMEGA):
        cap = len(masks) if n is OMEGA else n
        expected = all(
            oracles.meet((images[i] for i in s), full_tgt) == 0
            for s in oracles.subsets(range(len(masks)), 1, cap)
            if oracles.meet((masks[i] for i in s), full_src) == 0)
        assert is_n_preserving(pmap, n) == expected


def test_partial_map_and_hom_validation():
    fam = GeneratorFamily.generating(2, [Element(2, 1)])
    with pytest.raises(PreconditionError):
        PartialMap(fam, SetAlgebra.powerset(2), [])
    with pytest.raises(MembershipError):
        PartialMap(fam, SetAlgebra(2, []), [Element(2, 1)])
    a = SetAlgebra.powerset(2)
    with pytest.raises(PreconditionError):
        Homomorphism(a, a, (Element(2, 1), Element(2, 1)))
    with pytest.raises(PreconditionError):
        Homomorphism(a, a, (Element(2, 1), Element(2, 0)))
    ident = identity_hom(a)
    assert all(ident(x) == x for x in a.elements())


def test_non_generating_family_maps_from_generated_subalgebra():
    a = SetAlgebra.powerset(3)
    fam = GeneratorFamily(a, [Element(3, 0b011)])
    hom = sikorski_extends(PartialMap(fam, SetAlgebra.powerset(1), [Element(1, 1)]))
    assert hom is not None and hom.source == fam.generated() and hom.source != a
