"""Finite Boolean set algebras.

An algebra lives inside the powerset of a ground set ``[0, ground_size)``.  Elements
are bit masks over that range.  A :class:`SetAlgebra` is the subalgebra generated
by a list of elements; its atoms are the cells of the *signature partition*: two
points share a cell iff they agree on membership in every generator.

Homomorphisms are stored by their values on source atoms, which is all a map out
of a finite algebra needs.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import total_ordering
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import DimensionError, MembershipError, PreconditionError


@total_ordering
class _Omega:
    """The degree ``omega``: larger than every positive integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "omega"

    __str__ = __repr__

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("omega")

    def __reduce__(self):
        return (_Omega, ())


OMEGA = _Omega()


def check_degree(n) -> int | _Omega:
    if n is OMEGA:
        return n
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"freeness degree must be a positive integer or OMEGA, got {n!r}")
    return n


def parse_degree(text: str) -> int | _Omega:
    if text.strip().lower() in ("omega", "w", "ω"):
        return OMEGA
    return check_degree(int(text))


def degree_cap(n, size: int) -> int:
    """Largest subset size that matters for degree ``n`` in a family of ``size``."""
    return size if n is OMEGA else min(n, size)


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits_of(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


@dataclass(frozen=True, slots=True)
class Element:
    """A subset of ``[0, ground_size)`` stored as a bit mask."""

    ground_size: int
    mask: int

    def __post_init__(self):
        if self.ground_size < 0:
            raise ValueError("ground_size must be non-negative")
        if self.mask < 0 or self.mask >> self.ground_size:
            raise ValueError(f"mask {self.mask:#x} has points outside [0, {self.ground_size})")

    @classmethod
    def from_points(cls, ground_size: int, points: Iterable[int]) -> "Element":
        mask = 0
        for p in points:
            if not 0 <= p < ground_size:
                raise ValueError(f"point {p} outside [0, {ground_size})")
            mask |= 1 << p
        return cls(ground_size, mask)

    @classmethod
    def zero(cls, ground_size: int) -> "Element":
        return cls(ground_size, 0)

    @classmethod
    def one(cls, ground_size: int) -> "Element":
        return cls(ground_size, (1 << ground_size) - 1)

    @property
    def points(self) -> tuple[int, ...]:
        return tuple(bits_of(self.mask))

    @property
    def full(self) -> int:
        return (1 << self.ground_size) - 1

    def is_zero(self) -> bool:
        return self.mask == 0

    def is_one(self) -> bool:
        return self.mask == self.full

    def _same(self, other: "Element"):
        if not isinstance(other, Element):
            return NotImplemented
        if other.ground_size != self.ground_size:
            raise DimensionError(
                f"ground sizes differ: {self.ground_size} vs {other.ground_size}")
        return other

    def __and__(self, other: "Element") -> "Element":
        self._same(other)
        return Element(self.ground_size, self.mask & other.mask)

    def __or__(self, other: "Element") -> "Element":
        self._same(other)
        return Element(self.ground_size, self.mask | other.mask)

    def __sub__(self, other: "Element") -> "Element":
        self._same(other)
        return Element(self.ground_size, self.mask & ~other.mask)

    def __invert__(self) -> "Element":
        return Element(self.ground_size, self.full & ~self.mask)

    def __le__(self, other: "Element") -> bool:
        self._same(other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "Element") -> bool:
        return self <= other and self.mask != other.mask

    def __ge__(self, other: "Element") -> bool:
        return other <= self

    def __gt__(self, other: "Element") -> bool:
        return other < self

    def disjoint(self, other: "Element") -> bool:
        self._same(other)
        return self.mask & other.mask == 0

    def __len__(self) -> int:
        return popcount(self.mask)

    def __iter__(self) -> Iterator[int]:
        return iter(bits_of(self.mask))

    def __contains__(self, point: int) -> bool:
        return 0 <= point < self.ground_size and bool(self.mask >> point & 1)

    def __repr__(self):
        return f"Element({self.ground_size}, {set(self.points) or '{}'})"


def meet(elements: Iterable[Element], ground_size: int) -> Element:
    """Intersection of ``elements``; the empty meet is the full ground set."""
    mask = (1 << ground_size) - 1
    for e in elements:
        if e.ground_size != ground_size:
            raise DimensionError(f"ground sizes differ: {e.ground_size} vs {ground_size}")
        mask &= e.mask
    return Element(ground_size, mask)


def join(elements: Iterable[Element], ground_size: int) -> Element:
    mask = 0
    for e in elements:
        if e.ground_size != ground_size:
            raise DimensionError(f"ground sizes differ: {e.ground_size} vs {ground_size}")
        mask |= e.mask
    return Element(ground_size, mask)


def point_signatures(ground_size: int, masks: Sequence[int]) -> list[int]:
    """Signature of every point: bit ``i`` set iff the point lies in ``masks[i]``."""
    sigs = [0] * ground_size
    for i, m in enumerate(masks):
        bit = 1 << i
        p = 0
        while m:
            if m & 1:
                sigs[p] |= bit
            m >>= 1
            p += 1
    return sigs


def signature_cells(ground_size: int, masks: Sequence[int]) -> dict[int, int]:
    """Map each realized signature to the mask of points carrying it."""
    cells: dict[int, int] = {}
    for p, s in enumerate(point_signatures(ground_size, masks)):
        cells[s] = cells.get(s, 0) | (1 << p)
    return cells


class SetAlgebra:
    """Subalgebra of ``P(ground_size)`` generated by ``generators``.

    The atom partition is computed once, at construction, and atoms are ordered by
    their smallest point.
    """

    __slots__ = ("ground_size", "generators", "atoms", "_atom_of_point", "_atom_masks")

    def __init__(self, ground_size: int, generators: Sequence[Element] = ()):
        if ground_size < 1:
            raise PreconditionError("ground set must be nonempty")
        gens = tuple(generators)
        for g in gens:
            if not isinstance(g, Element):
                raise TypeError(f"generator {g!r} is not an Element")
            if g.ground_size != ground_size:
                raise DimensionError(
                    f"generator over ground {g.ground_size} in algebra over {ground_size}")
        cells = signature_cells(ground_size, [g.mask for g in gens])
        atom_masks = sorted(cells.values(), key=lambda m: (m & -m))
        self.ground_size = ground_size
        self.generators = gens
        self._atom_masks = tuple(atom_masks)
        self.atoms = tuple(Element(ground_size, m) for m in atom_masks)
        owner = [0] * ground_size
        for i, m in enumerate(atom_masks):
            for p in bits_of(m):
                owner[p] = i
        self._atom_of_point = tuple(owner)

    @classmethod
    def powerset(cls, k: int) -> "SetAlgebra":
        """``P(k)``: the algebra of all subsets of a ``k``-point ground set."""
        return cls(k, [Element(k, 1 << i) for i in range(k)])

    @property
    def atom_masks(self) -> tuple[int, ...]:
        return self._atom_masks

    @property
    def num_atoms(self) -> int:
        return len(self.atoms)

    @property
    def size(self) -> int:
        return 1 << len(self.atoms)

    @property
    def zero(self) -> Element:
        return Element.zero(self.ground_size)

    @property
    def one(self) -> Element:
        return Element.one(self.ground_size)

    def atom_of_point(self, p: int) -> int:
        return self._atom_of_point[p]

    def contains_mask(self, mask: int) -> bool:
        if mask >> self.ground_size:
            return False
        for m in self._atom_masks:
            part = mask & m
            if part and part != m:
                return False
        return True

    def __contains__(self, e: Element) -> bool:
        return (isinstance(e, Element) and e.ground_size == self.ground_size
                and self.contains_mask(e.mask))

    def atoms_below(self, e: Element) -> int:
        """Bit mask over atom indices of the atoms making up ``e``."""
        if e.ground_size != self.ground_size:
            raise DimensionError(f"ground sizes differ: {e.ground_size} vs {self.ground_size}")
        if not self.contains_mask(e.mask):
            raise MembershipError(f"{e!r} is not a union of atoms")
        out = 0
        for i, m in enumerate(self._atom_masks):
            if e.mask & m:
                out |= 1 << i
        return out

    def from_atoms(self, atom_set: int | Iterable[int]) -> Element:
        if not isinstance(atom_set, int):
            atom_set = sum(1 << i for i in set(atom_set))
        mask = 0
        for i in bits_of(atom_set):
            mask |= self._atom_masks[i]
        return Element(self.ground_size, mask)

    def elements(self) -> Iterator[Element]:
        """All ``2^atoms`` elements, in order of their atom-index masks."""
        for s in range(self.size):
            yield self.from_atoms(s)

    def nonzero_elements(self) -> list[Element]:
        return [self.from_atoms(s) for s in range(1, self.size)]

    def is_atom(self, e: Element) -> bool:
        return e in self and e.mask in self._atom_masks

    def __eq__(self, other):
        if not isinstance(other, SetAlgebra):
            return NotImplemented
        return self.ground_size == other.ground_size and self._atom_masks == other._atom_masks

    def __hash__(self):
        return hash((self.ground_size, self._atom_masks))

    def __repr__(self):
        return f"SetAlgebra(ground={self.ground_size}, atoms={self.num_atoms})"


def closure(ground_size: int, generators: Sequence[Element]) -> SetAlgebra:
    """The subalgebra generated by ``generators``."""
    return SetAlgebra(ground_size, generators)


class GeneratorFamily:
    """A distinguished set of nonzero elements of an algebra.

    Members keep their given order (the index set of the family); duplicates and
    the zero element are rejected.
    """

    __slots__ = ("algebra", "members", "_masks")

    def __init__(self, algebra: SetAlgebra, members: Sequence[Element]):
        members = tuple(members)
        seen = set()
        for x in members:
            if x.ground_size != algebra.ground_size:
                raise DimensionError(
                    f"member over ground {x.ground_size} in algebra over {algebra.ground_size}")
            if x.is_zero():
                raise PreconditionError("0 may not belong to a generator family")
            if x not in algebra:
                raise MembershipError(f"{x!r} is not an element of the algebra")
            if x.mask in seen:
                raise PreconditionError(f"duplicate family member {x!r}")
            seen.add(x.mask)
        self.algebra = algebra
        self.members = members
        self._masks = tuple(x.mask for x in members)

    @classmethod
    def generating(cls, ground_size: int, members: Sequence[Element]) -> "GeneratorFamily":
        """Family over the algebra its own members generate."""
        return cls(closure(ground_size, members), members)

    @property
    def masks(self) -> tuple[int, ...]:
        return self._masks

    @property
    def ground_size(self) -> int:
        return self.algebra.ground_size

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i):
        return self.members[i]

    def signatures(self) -> set[int]:
        """Signatures (over member indices) realized by points of the ground set."""
        return set(point_signatures(self.ground_size, self._masks))

    def generated(self) -> SetAlgebra:
        return closure(self.ground_size, self.members)

    def generates(self) -> bool:
        return self.generated() == self.algebra

    def subfamily(self, indices: Iterable[int]) -> "GeneratorFamily":
        return GeneratorFamily(self.algebra, [self.members[i] for i in indices])

    def product(self, subset: int) -> Element:
        """Meet of the members indexed by the bit mask ``subset``."""
        mask = (1 << self.ground_size) - 1
        for i in bits_of(subset):
            mask &= self._masks[i]
        return Element(self.ground_size, mask)

    def __repr__(self):
        return f"GeneratorFamily({len(self.members)} members, {self.algebra!r})"


def elementary_product(family: GeneratorFamily, exponents: Mapping[int, int]) -> Element:
    """``prod x_i^e_i`` over the domain of ``exponents`` (x^1 = x, x^0 = -x).

    Keys of ``exponents`` are member indices.  The empty product is 1.
    """
    n = family.ground_size
    full = (1 << n) - 1
    mask = full
    for i, e in exponents.items():
        if not 0 <= i < len(family.members):
            raise IndexError(f"exponent index {i} outside family of {len(family.members)}")
        if e not in (0, 1):
            raise ValueError(f"exponent must be 0 or 1, got {e!r}")
        x = family.masks[i]
        mask &= x if e else full & ~x
    return Element(n, mask)


@dataclass(frozen=True)
class PartialMap:
    """An assignment of target elements to the members of a source family."""

    source: GeneratorFamily
    target: SetAlgebra
    images: tuple[Element, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if len(images) != len(self.source.members):
            raise PreconditionError(
                f"{len(images)} images for a family of {len(self.source.members)}")
        for y in images:
            if y.ground_size != self.target.ground_size:
                raise DimensionError("image over the wrong ground set")
            if y not in self.target:
                raise MembershipError(f"image {y!r} is not in the target algebra")

    def image_signatures(self) -> set[int]:
        return set(point_signatures(self.target.ground_size, [y.mask for y in self.images]))


@dataclass(frozen=True)
class Homomorphism:
    """A Boolean homomorphism given by the images of the source atoms."""

    source: SetAlgebra
    target: SetAlgebra
    atom_images: tuple[Element, ...] = field(repr=False)

    def __post_init__(self):
        imgs = tuple(self.atom_images)
        object.__setattr__(self, "atom_images", imgs)
        if len(imgs) != self.source.num_atoms:
            raise PreconditionError("need exactly one image per source atom")
        seen = 0
        for y in imgs:
            if y.ground_size != self.target.ground_size:
                raise DimensionError("atom image over the wrong ground set")
            if y not in self.target:
                raise MembershipError(f"atom image {y!r} is not in the target algebra")
            if seen & y.mask:
                raise PreconditionError("images of distinct atoms must be disjoint")
            seen |= y.mask
        if seen != (1 << self.target.ground_size) - 1:
            raise PreconditionError("atom images must cover the target ground set")

    def __call__(self, e: Element) -> Element:
        return apply_hom(self, e)


def identity_hom(a: SetAlgebra) -> Homomorphism:
    return Homomorphism(a, a, a.atoms)


def apply_hom(h: Homomorphism, e: Element) -> Element:
    below = h.source.atoms_below(e)
    mask = 0
    for i in bits_of(below):
        mask |= h.atom_images[i].mask
    return Element(h.target.ground_size, mask)


def sikorski_extends(pmap: PartialMap) -> Homomorphism | None:
    """Extend a map on generators to a homomorphism on the algebra they generate.

    The map extends iff every elementary product over the whole family that is 0
    in the source stays 0 under the images.  With full exponent maps the
    elementary products are exactly the signature cells, so the test reduces to:
    every signature realized by a target point is realized by a source point.

    Returns ``None`` when no extension exists.  The homomorphism's source is the
    family's algebra when the family generates it, otherwise the subalgebra the
    family generates.
    """
    fam = pmap.source
    source_cells = signature_cells(fam.ground_size, fam.masks)
    target_cells = signature_cells(pmap.target.ground_size, [y.mask for y in pmap.images])
    if not set(target_cells) <= set(source_cells):
        return None
    generated = fam.generated()
    by_mask = {m: s for s, m in source_cells.items()}
    tg = pmap.target.ground_size
    images = tuple(Element(tg, target_cells.get(by_mask[m], 0)) for m in generated.atom_masks)
    src = fam.algebra if generated == fam.algebra else generated
    return Homomorphism(src, pmap.target, images)


def zero_subsets_closure(signatures: Iterable[int]) -> set[int]:
    """Down-closure of a set of signatures: index sets with nonzero meet."""
    down: set[int] = set()
    stack = list(set(signatures))
    while stack:
        s = stack.pop()
        if s in down:
            continue
        down.add(s)
        rest = s
        while rest:
            low = rest & -rest
            t = s & ~low
            if t not in down:
                stack.append(t)
            rest &= rest - 1
    return down


def minimal_zero_masks(signatures: Iterable[int], size: int) -> list[int]:
    """All inclusion-minimal index sets whose meet is 0.

    An index set has nonzero meet iff it is contained in some realized signature,
    so the minimal zero sets are the minimal sets outside the down-closure.  They
    are found by extending each nonzero set by one index and keeping the results
    all of whose one-smaller subsets are nonzero.  Sorted by size, then by
    index tuple.
    """
    nonzero = zero_subsets_closure(signatures)
    found = set()
    for d in nonzero:
        for i in range(size):
            bit = 1 << i
            if d & bit:
                continue
            f = d | bit
            if f in nonzero or f in found:
                continue
            rest = f
            ok = True
            while rest:
                low = rest & -rest
                if (f & ~low) not in nonzero:
                    ok = False
                    break
                rest &= rest - 1
            if ok:
                found.add(f)
    return sorted(found, key=lambda m: (popcount(m), bits_of(m)))


def is_n_preserving(pmap: PartialMap, n) -> bool:
    """Every subfamily of at most ``n`` members with meet 0 keeps meet 0 under the map.

    Members of a zero meet may repeat in the definition; meets are idempotent, so
    subsets suffice, and any zero subset of size <= n contains a minimal one of
    size <= n.
    """
    n = check_degree(n)
    k = len(pmap.source.members)
    cap = degree_cap(n, k)
    target_sigs = pmap.image_signatures()
    for z in minimal_zero_masks(pmap.source.signatures(), k):
        if popcount(z) > cap:
            break
        if any(s & z == z for s in target_sigs):
            return False
    return True


def subsets_up_to(k: int, cap: int) -> Iterator[int]:
    """Masks of all nonempty subsets of ``range(k)`` with at most ``cap`` elements."""
    for r in range(1, cap + 1):
        for combo in combinations(range(k), r):
            yield sum(1 << i for i in combo)
