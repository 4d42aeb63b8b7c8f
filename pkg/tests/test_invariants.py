import random

import pytest
from hypothesis import given, strategies as st

from freeboole.algebra import OMEGA, Element, GeneratorFamily, SetAlgebra
from freeboole.errors import BudgetError, PreconditionError
from freeboole.free import anticlique_algebra, clique_algebra, independence_report
from freeboole.graphs import Graph, enumerate_anticliques, enumerate_cliques, graph_classes
from freeboole.invariants import (
    elementary_products, invariant_report, is_ideal_independent, is_incomparable,
    is_irredundant, is_moderate_in, is_saturated, is_weakly_dense, max_independent_subfamily,
    max_pairwise_disjoint, maximal_ideal_independent_check, maximal_n_independent_families,
    n_ind_number, norm, prefix_product_family,
)
from freeboole.search import maximal_sets

import oracles


def els(g, masks):
    return [Element(g, m) for m in masks]


@given(st.integers(0, 7), st.lists(st.integers(0, 63), min_size=0, max_size=7))
def test_maximal_sets_match_filter(count, weights):
    weights = (weights + [1] * count)[:count]

    def ok(s):  # hereditary: weight bound, and no two odd weights
        return sum(weights[i] for i in s) <= 70 and not any(
            weights[i] & weights[j] & 1 for i in s for j in s if i < j)

    got = maximal_sets(count, lambda chosen, d: ok(chosen + (d,)))
    assert got == oracles.maximal_by_filter(count, ok)


def test_maximal_sets_budget():
    with pytest.raises(BudgetError):
        maximal_sets(12, lambda chosen, d: True if len(chosen) < 6 else False, nodes=50)


def test_pairwise_disjoint_examples():
    assert max_pairwise_disjoint(anticlique_algebra(Graph.complete(4)).family)[0] == 4
    assert max_pairwise_disjoint(anticlique_algebra(Graph.empty(3)).family)[0] == 1
    assert max_pairwise_disjoint(anticlique_algebra(Graph.path(3)).family)[0] == 2


def test_independent_subfamily_examples():
    assert max_independent_subfamily(anticlique_algebra(Graph.path(3)).family) == (2, (0, 2))
    assert max_independent_subfamily(anticlique_algebra(Graph.complete(4)).family)[0] == 1
    assert max_independent_subfamily(anticlique_algebra(Graph.empty(4)).family)[0] == 4


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_clique_and_anticlique_numbers(n):
    for g in graph_classes(n):
        fam = anticlique_algebra(g).family
        omega = max(len(c) for c in enumerate_cliques(g).sets())
        alpha = max(len(a) for a in enumerate_anticliques(g).sets())
        assert max_pairwise_disjoint(fam)[0] == omega
        assert max_independent_subfamily(fam)[0] == alpha


def test_n_ind_examples():
    p2 = SetAlgebra.powerset(2)
    size, witness = n_ind_number(p2, 2)
    assert size == 1 and not witness[0].is_one()
    for k in range(1, 6):
        a = SetAlgebra.powerset(k)
        sizes = [n_ind_number(a, n)[0] for n in (1, 2, 3, OMEGA)]
        assert sizes == sorted(sizes)
    with pytest.raises(BudgetError):
        n_ind_number(SetAlgebra.powerset(7), 2)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_n_ind_below_max_ideal_independent(k):
    a = SetAlgebra.powerset(k)
    ideal = maximal_ideal_independent_check(a)
    for n in (1, 2, OMEGA):
        assert n_ind_number(a, n)[0] <= ideal.max_size


def test_maximal_families_p2():
    rep = maximal_n_independent_families(SetAlgebra.powerset(2), 2)
    assert sorted(f[0].mask for f in rep.families) == [1, 2]
    assert all(len(f) == 1 for f in rep.families)
    assert rep.min_size == 1 and rep.complements_are_atoms


@pytest.mark.parametrize("n", [1, 2, OMEGA])
def test_maximal_families_p3_against_filter(n):
    a = SetAlgebra.powerset(3)
    rep = maximal_n_independent_families(a, n)
    cand = list(range(1, 8))
    deg = None if n is OMEGA else n
    expected = oracles.maximal_by_filter(
        len(cand), lambda s: not s or oracles.definition_n_independent(
            [cand[i] for i in s], 3, deg))
    assert sorted(tuple(x.mask for x in f) for f in rep.families) == [
        tuple(cand[i] for i in s) for s in expected]
    if n != 1:
        for f in rep.families:
            assert 7 & ~oracles.join(x.mask for x in f) in (1, 2, 4)


def test_maximal_independent_complement_can_be_large():
    # classical independence: a lone atom is maximal and leaves two atoms uncovered
    rep = maximal_n_independent_families(SetAlgebra.powerset(3), 1)
    assert not rep.complements_are_atoms


def test_degenerate_two_element_algebra():
    p1 = SetAlgebra.powerset(1)
    rep = maximal_n_independent_families(p1, 2)
    assert rep.families == ((),) and rep.min_size == 0 and "two-element" in rep.note
    ideal = maximal_ideal_independent_check(p1)
    assert ideal.families == ((),) and not ideal.all_join_one


def test_ideal_independence_examples():
    a, b, c = els(3, [1, 2, 4])
    assert is_ideal_independent([a | b, c])
    assert not is_ideal_independent([a, a | b])
    assert not is_ideal_independent([a, a])
    with pytest.raises(PreconditionError):
        is_ideal_independent([a, a | b | c])
    with pytest.raises(PreconditionError):
        is_ideal_independent([Element(3, 0)])


def test_maximal_ideal_independent_p2():
    rep = maximal_ideal_independent_check(SetAlgebra.powerset(2))
    assert [tuple(x.mask for x in f) for f in rep.families] == [(1, 2)]
    assert rep.all_join_one and rep.min_size == 2


@pytest.mark.parametrize("k", [3, 4])
def test_maximal_ideal_independent_against_filter(k):
    a = SetAlgebra.powerset(k)
    rep = maximal_ideal_independent_check(a)
    full = (1 << k) - 1
    cand = list(range(1, full))

    def ok(s):
        ms = [cand[i] for i in s]
        return all(m & ~oracles.join(ms[:i] + ms[i + 1:]) for i, m in enumerate(ms))

    expected = oracles.maximal_by_filter(len(cand), ok)
    assert sorted(tuple(x.mask for x in f) for f in rep.families) == [
        tuple(cand[i] for i in s) for s in expected]
    assert rep.all_join_one


def test_weak_density_examples():
    p3 = SetAlgebra.powerset(3)
    assert is_weakly_dense(p3.atoms, p3)
    assert is_weakly_dense([p3.atoms[0]], p3)
    assert not is_weakly_dense([Element(3, 0b011)], p3)
    with pytest.raises(PreconditionError):
        is_weakly_dense([Element(3, 0)], p3)


@given(st.integers(1, 4), st.data())
def test_weak_density_against_definition(k, data):
    full = (1 << k) - 1
    ys = data.draw(st.lists(st.integers(1, full), min_size=1, max_size=4))
    a = SetAlgebra.powerset(k)
    expected = all(any(y & ~e == 0 or y & e == 0 for y in ys) for e in range(1, full + 1))
    assert is_weakly_dense(els(k, ys), a) == expected


def test_elementary_products():
    x, y = els(4, [0b0011, 0b0101])
    got = {e.mask for e in elementary_products([x, y])}
    assert got == {0b1111, 0b0011, 0b1100, 0b0101, 0b1010, 0b0001, 0b0010, 0b0100, 0b1000}


def test_incomparable_and_irredundant():
    a, b, c = els(3, [1, 2, 4])
    assert not is_incomparable([a, a | b])
    # atoms of P(3): incomparable, but the last is the complement of the others' join
    assert is_incomparable([a, b, c]) and not is_irredundant([a, b, c])
    assert not is_irredundant([a, b, a | b])
    # incomparable and irredundant without being omega-independent
    sep = [a | b, b | c]
    assert is_incomparable(sep) and is_irredundant(sep)
    assert not independence_report(GeneratorFamily.generating(3, sep)).omega_independent


def test_norm_examples():
    disjoint = els(4, [1, 2, 4])
    assert len(norm(disjoint[0], disjoint)) == 0 and is_saturated(disjoint[0], disjoint)
    x = els(4, [0b0011, 0b0101])
    assert norm(x[0], x).split_members == (1,)
    g = Graph.path(4)
    fam = clique_algebra(g).family
    for v in range(4):
        nbrs = tuple(u for u in range(4) if g.adjacent(u, v))
        assert norm(fam[v], fam.members).split_members == nbrs
    assert is_moderate_in(fam.members, fam.members)
    assert is_moderate_in(fam.members, fam.members, bound=2)
    assert not is_moderate_in(fam.members, fam.members, bound=1)
    # in BA(g) the split members are the non-neighbours instead
    ba = anticlique_algebra(g).family
    assert norm(ba[0], ba.members).split_members == (2, 3)


@given(st.lists(st.integers(1, 31), min_size=1, max_size=5, unique=True),
       st.integers(0, 31), st.integers(0, 31))
def test_norm_lemma(fmasks, a, b):
    f = els(5, fmasks)
    na, nb = set(norm(Element(5, a), f).split_members), set(norm(Element(5, b), f).split_members)
    assert set(norm(~Element(5, a), f).split_members) == na
    assert set(norm(Element(5, a | b), f).split_members) <= na | nb
    assert set(norm(Element(5, a & b), f).split_members) <= na | nb


def test_prefix_family_two_generators():
    x0, x1 = els(4, [0b0011, 0b0101])
    fam = prefix_product_family([x0, x1])
    assert {e.mask for e in fam.members} == {0b0011, 0b1100, 0b0001, 0b0010, 0b0100, 0b1000}
    assert fam.dropped_zero == 0 and fam.generates() and fam.norm_within_prefixes()
    assert len(norm(x0, fam.members)) == 0
    with pytest.raises(PreconditionError):
        prefix_product_family([])


def test_prefix_family_random():
    rng = random.Random(4)
    for _ in range(300):
        g = rng.randint(1, 6)
        gens = els(g, [rng.randrange(1, 1 << g) for _ in range(rng.randint(1, 4))])
        fam = prefix_product_family(gens)
        assert fam.generates() and fam.norm_within_prefixes()
        assert all(not e.is_zero() for e in fam.members)


def test_omega_independent_families_are_bridged():
    rng = random.Random(9)
    seen = 0
    for _ in range(400):
        g = rng.randint(2, 5)
        masks = rng.sample(range(1, (1 << g) - 1), min(rng.randint(1, 4), (1 << g) - 2))
        fam = GeneratorFamily.generating(g, els(g, masks))
        if not independence_report(fam).omega_independent:
            continue
        seen += 1
        assert is_ideal_independent(fam.members)
        assert is_incomparable(fam.members) and is_irredundant(fam.members)
    assert seen > 50


def test_invariant_report():
    fam = anticlique_algebra(Graph.path(3)).family
    rep = invariant_report(fam)
    assert rep.atom_count == 5 and rep.family_size == 3
    assert rep.max_pairwise_disjoint_in_family[0] == 2
    assert set(rep.n_ind) == {"1", "2", "omega"}
    big = anticlique_algebra(Graph.empty(3)).family
    assert any("skipped" in n for n in invariant_report(big).notes)
