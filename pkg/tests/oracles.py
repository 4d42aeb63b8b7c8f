"""Brute-force reference implementations, written straight from the definitions.

Nothing here uses signatures, Sikorski's criterion or the Bron-Kerbosch search
from the library; elements are plain integer point masks over ``range(ground)``.
"""
from __future__ import annotations

from itertools import chain, combinations, product


def subsets(seq, min_size=0, max_size=None):
    seq = list(seq)
    top = len(seq) if max_size is None else min(max_size, len(seq))
    return chain.from_iterable(combinations(seq, r) for r in range(min_size, top + 1))


def meet(masks, full):
    acc = full
    for m in masks:
        acc &= m
    return acc


def join(masks):
    acc = 0
    for m in masks:
        acc |= m
    return acc


def generated_subalgebra(masks, ground):
    """Close under complement and union until nothing new appears."""
    full = (1 << ground) - 1
    elems = {0, full} | set(masks)
    while True:
        new = {full & ~x for x in elems} | {x | y for x in elems for y in elems}
        if new <= elems:
            return elems
        elems |= new


def atoms_of(elems):
    nz = [e for e in elems if e]
    return sorted(e for e in nz if not any(o != e and o & e == o for o in nz))


def definition_n_independent(masks, ground, n):
    """(perp 1), (perp 2)_n and (perp 3) checked over all nonempty F, G.

    ``n=None`` stands for omega (drops (perp 2)).
    """
    full = (1 << ground) - 1
    if any(m == 0 for m in masks):
        return False
    idx = range(len(masks))
    for f in subsets(idx, 1):
        if join(masks[i] for i in f) == full:
            return False
        p = meet((masks[i] for i in f), full)
        if n is not None and p == 0:
            if not any(meet((masks[i] for i in g), full) == 0 for g in subsets(f, 1, n)):
                return False
        if p:
            for g in subsets(idx, 1):
                if p & ~join(masks[i] for i in g) == 0 and not set(f) & set(g):
                    return False
    return True


def prop_a_n_independent(masks, ground, n):
    """Zero elementary products must be witnessed by a zero meet of at most n
    positively-signed members.  ``n=None`` means omega."""
    full = (1 << ground) - 1
    if any(m == 0 for m in masks):
        return False
    k = len(masks)
    for r in subsets(range(k)):
        for eps in product((0, 1), repeat=len(r)):
            p = full
            for i, e in zip(r, eps):
                p &= masks[i] if e else full & ~masks[i]
            if p:
                continue
            pos = [i for i, e in zip(r, eps) if e]
            cap = len(pos) if n is None else n
            if not any(meet((masks[i] for i in s), full) == 0 for s in subsets(pos, 1, cap)):
                return False
    return True


def oracle_degree(masks, ground, check=prop_a_n_independent):
    """Least n for which the family is n-independent; None if not omega-independent."""
    if not check(masks, ground, None):
        return None
    for n in range(1, len(masks) + 1):
        if check(masks, ground, n):
            return n
    return max(1, len(masks))


def minimal_zero_sets(masks, ground):
    full = (1 << ground) - 1
    zero = [s for s in subsets(range(len(masks)), 1) if meet((masks[i] for i in s), full) == 0]
    return sorted((s for s in zero if not any(set(t) < set(s) for t in zero)),
                  key=lambda s: (len(s), s))


def homomorphisms(source_atoms, target_ground):
    """All homomorphisms from the algebra with the given atoms into P(target_ground),
    as functions point -> source atom index (each target point picks an ultrafilter)."""
    return product(range(len(source_atoms)), repeat=target_ground)


def apply_point_map(choice, source_atoms, x):
    """Image of x under the homomorphism given by ``choice``."""
    return sum(1 << q for q, a in enumerate(choice) if source_atoms[a] & x == source_atoms[a])


def extends_by_search(gen_masks, ground, images, target_ground):
    """Does some homomorphism from <gens> into P(target) send gens to images?"""
    atoms = atoms_of(generated_subalgebra(gen_masks, ground))
    for choice in homomorphisms(atoms, target_ground):
        if all(apply_point_map(choice, atoms, g) == y for g, y in zip(gen_masks, images)):
            return True
    return False


def anticliques(n, edges):
    return sorted(s for s in range(1 << n) if not any(e & s == e for e in edges))


def is_linked(sets, n):
    full = -1
    return all(meet(c, full) != 0 for c in subsets(sets, 1, n))


def is_n_ary_naive(sets, n):
    """Every nonempty n-linked subfamily has a common point."""
    for fam in subsets(range(len(sets)), 1):
        chosen = [sets[i] for i in fam]
        if is_linked(chosen, n) and meet(chosen, -1) == 0:
            return False
    return True


def maximal_by_filter(count, ok):
    """Inclusion-maximal subsets of range(count) satisfying ``ok`` (all subsets scanned)."""
    good = [frozenset(s) for s in subsets(range(count)) if ok(s)]
    return sorted(tuple(sorted(s)) for s in good if not any(s < t for t in good))
