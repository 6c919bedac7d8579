"""Openly isotone families of opens, collections of them, and hyperfilters.

The hyperspace C(X,$) is the lattice of opens of X.  A subset of it (a
"hyperset") is an int bitmask over the indices of ``space.opens``.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from ._bits import as_list, full_mask, members
from .errors import DegenerateFilter, NotIsotone
from .space import FiniteSpace


class OpenLattice:
    """Order data of the opens of a space, indexed like ``space.opens``."""

    def __init__(self, space: FiniteSpace):
        self.space = space
        self.opens = space.opens
        self.m = len(space.opens)
        self.full = full_mask(self.m)
        self.index = space.open_index
        below, above = [], []
        for u in self.opens:
            b = a = 0
            for j, v in enumerate(self.opens):
                if v & ~u == 0:
                    b |= 1 << j
                if u & ~v == 0:
                    a |= 1 << j
            below.append(b)
            above.append(a)
        self.below = tuple(below)
        self.above = tuple(above)
        self.comparable = tuple(b | a for b, a in zip(below, above))

    def hyperset(self, opens: Iterable[int]) -> int:
        m = 0
        for u in opens:
            m |= 1 << self.index[u]
        return m

    def opens_of(self, hmask: int) -> list[int]:
        return [self.opens[i] for i in members(hmask)]

    def upclose(self, hmask: int) -> int:
        m = 0
        for i in members(hmask):
            m |= self.above[i]
        return m

    def downclose(self, hmask: int) -> int:
        m = 0
        for i in members(hmask):
            m |= self.below[i]
        return m

    def minimal(self, hmask: int) -> int:
        """Elements of ``hmask`` with nothing strictly below them inside ``hmask``."""
        out = 0
        for i in members(hmask):
            if self.below[i] & hmask == 1 << i:
                out |= 1 << i
        return out

    def principal_up(self, u: int) -> int:
        return self.above[self.index[u]]

    def antichains(self) -> Iterable[int]:
        """Every antichain of the opens lattice, as hyperset masks."""
        m = self.m
        stack = [(0, 0, 0)]
        while stack:
            start, chosen, blocked = stack.pop()
            yield chosen
            for i in range(start, m):
                if not blocked >> i & 1:
                    stack.append((i + 1, chosen | 1 << i, blocked | self.comparable[i]))


@functools.lru_cache(maxsize=256)
def open_lattice(space: FiniteSpace) -> OpenLattice:
    return OpenLattice(space)


class IsotoneFamily:
    """An openly isotone family, stored as the antichain of its minimal opens."""

    __slots__ = ("space", "minimals", "hyperset")

    def __init__(self, space: FiniteSpace, minimals: Iterable[int]):
        mins = tuple(sorted(set(minimals)))
        for u in mins:
            if not space.is_open(u):
                raise NotIsotone(f"{as_list(u)} is not an open of the space")
        for a, b in itertools.combinations(mins, 2):
            if a & ~b == 0 or b & ~a == 0:
                raise NotIsotone(f"minimals {as_list(a)} and {as_list(b)} are comparable")
        self.space = space
        self.minimals = mins
        lat = open_lattice(space)
        self.hyperset = lat.upclose(lat.hyperset(mins))

    @classmethod
    def from_opens(cls, space: FiniteSpace, opens: Iterable[int]) -> "IsotoneFamily":
        """𝒪_X of a collection of opens."""
        lat = open_lattice(space)
        return cls(space, lat.opens_of(lat.minimal(lat.hyperset(opens))))

    @classmethod
    def from_hyperset(cls, space: FiniteSpace, hmask: int) -> "IsotoneFamily":
        lat = open_lattice(space)
        if lat.upclose(hmask) != hmask:
            raise NotIsotone("hyperset is not closed upward among opens")
        return cls(space, lat.opens_of(lat.minimal(hmask)))

    def __contains__(self, u: int) -> bool:
        return any(m & ~u == 0 for m in self.minimals)

    def members(self) -> list[int]:
        return open_lattice(self.space).opens_of(self.hyperset)

    @property
    def is_empty(self) -> bool:
        return not self.minimals

    def __and__(self, other: "IsotoneFamily") -> "IsotoneFamily":
        return IsotoneFamily.from_hyperset(self.space, self.hyperset & other.hyperset)

    def __or__(self, other: "IsotoneFamily") -> "IsotoneFamily":
        return IsotoneFamily.from_opens(self.space, self.minimals + other.minimals)

    def __le__(self, other: "IsotoneFamily") -> bool:
        """Containment of families."""
        return self.hyperset & ~other.hyperset == 0

    def __eq__(self, other):
        return (isinstance(other, IsotoneFamily) and self.space == other.space
                and self.minimals == other.minimals)

    def __hash__(self):
        return hash((self.space, self.minimals))

    def __repr__(self):
        return f"IsotoneFamily({[as_list(u) for u in self.minimals]})"

    def to_json(self) -> list:
        return [as_list(u) for u in self.minimals]


def isotone_family(space: FiniteSpace, generating_sets: Iterable[int]) -> IsotoneFamily:
    """⋃_D 𝒪_X(D) for subsets D of points (not necessarily open)."""
    return IsotoneFamily.from_opens(space, [space.hull(d) for d in generating_sets])


def principal_family(space: FiniteSpace, subset: int) -> IsotoneFamily:
    """𝒪_X(D): opens containing D."""
    return IsotoneFamily(space, [space.hull(subset)])


# compactness -----------------------------------------------------------------

def _has_finite_subfamily(opens: Sequence[int], family: IsotoneFamily) -> bool:
    for size in range(len(opens) + 1):
        for sub in itertools.combinations(opens, size):
            u = 0
            for v in sub:
                u |= v
            if u in family:
                return True
    return False


def is_compact_family(family: IsotoneFamily) -> bool:
    """Literal compactness: every collection of opens whose union is in the family
    has a finite subcollection whose union is in the family.

    Only antichains are tested: a collection and its maximal elements have the
    same union, and subcollections of the latter are subcollections of the former.
    """
    lat = open_lattice(family.space)
    for ac in lat.antichains():
        opens = lat.opens_of(ac)
        u = 0
        for v in opens:
            u |= v
        if u in family and not _has_finite_subfamily(opens, family):
            return False
    return True


def is_compact_subset(space: FiniteSpace, subset: int) -> bool:
    """Every open cover of ``subset`` has a finite subcover (literal check)."""
    lat = open_lattice(space)
    for ac in lat.antichains():
        opens = lat.opens_of(ac)
        u = 0
        for v in opens:
            u |= v
        if subset & ~u:
            continue
        found = False
        for size in range(len(opens) + 1):
            for sub in itertools.combinations(opens, size):
                w = 0
                for v in sub:
                    w |= v
                if subset & ~w == 0:
                    found = True
                    break
            if found:
                break
        if not found:
            return False
    return True


# collections -------------------------------------------------------------------

class AlphaCollection:
    """A collection α of openly isotone families on one space."""

    def __init__(self, space: FiniteSpace, families: Iterable[IsotoneFamily], label: str = "custom"):
        fams = set(families)
        for f in fams:
            if f.space != space:
                raise ValueError("family belongs to a different space")
        self.space = space
        self.families = tuple(sorted(fams, key=lambda f: (len(f.minimals), f.minimals)))
        self.label = label

    def __iter__(self):
        return iter(self.families)

    def __len__(self):
        return len(self.families)

    def __contains__(self, fam) -> bool:
        return fam in set(self.families)

    def __eq__(self, other):
        return (isinstance(other, AlphaCollection) and self.space == other.space
                and set(self.families) == set(other.families))

    def __hash__(self):
        return hash((self.space, frozenset(self.families)))

    def __repr__(self):
        return f"AlphaCollection({self.label!r}, {len(self.families)} families)"

    @property
    def nondegenerate(self) -> bool:
        return any(not f.is_empty for f in self.families)

    @property
    def hypersets(self) -> tuple[int, ...]:
        return tuple(f.hyperset for f in self.families)

    def is_intersection_closed(self) -> bool:
        hs = set(self.hypersets)
        return all(a & b in hs for a, b in itertools.combinations(hs, 2))

    def intersection_closure(self) -> "AlphaCollection":
        hs = set(self.hypersets)
        frontier = set(hs)
        while frontier:
            new = set()
            for a in frontier:
                for b in list(hs):
                    c = a & b
                    if c not in hs and c not in new:
                        new.add(c)
            hs |= new
            frontier = new
        fams = [IsotoneFamily.from_hyperset(self.space, h) for h in hs]
        return AlphaCollection(self.space, fams, self.label + "^cap")

    def to_json(self) -> list:
        return [f.to_json() for f in self.families]


def _union_closure(space: FiniteSpace, generators: Iterable[IsotoneFamily]) -> set[IsotoneFamily]:
    gens = set(generators)
    out = {IsotoneFamily(space, [])}
    frontier = set(out)
    while frontier:
        new = set()
        for a in frontier:
            for g in gens:
                c = a | g
                if c not in out:
                    new.add(c)
        out |= new
        frontier = new
    return out


def p_collection(space: FiniteSpace) -> AlphaCollection:
    """Families generated by sets of finite subsets: unions of 𝒪(F), F finite."""
    gens = [principal_family(space, f) for f in range(1 << space.n)]
    return AlphaCollection(space, _union_closure(space, gens), "p")


def k_collection(space: FiniteSpace) -> AlphaCollection:
    """Families generated by sets of compact subsets."""
    gens = [principal_family(space, c) for c in range(1 << space.n)
            if is_compact_subset(space, c)]
    return AlphaCollection(space, _union_closure(space, gens), "k")


def kappa_collection(space: FiniteSpace) -> AlphaCollection:
    """All compact openly isotone families (the Scott-open sets of the opens)."""
    lat = open_lattice(space)
    fams = []
    for ac in lat.antichains():
        fam = IsotoneFamily(space, lat.opens_of(ac))
        if is_compact_family(fam):
            fams.append(fam)
    return AlphaCollection(space, fams, "kappa")


def s_collection(space: FiniteSpace) -> AlphaCollection:
    """{𝒪(x) : x a point}; duplicates collapse when points share neighbourhoods."""
    return AlphaCollection(space, [principal_family(space, 1 << x) for x in range(space.n)], "s")


@functools.lru_cache(maxsize=128)
def standard_alphas(space: FiniteSpace) -> dict[str, AlphaCollection]:
    return {"p": p_collection(space), "k": k_collection(space),
            "kappa": kappa_collection(space), "s": s_collection(space)}


# filters on the hyperspace ------------------------------------------------------

class HyperFilter:
    """A filter on C(X,$); finite, hence principal and given by its kernel."""

    __slots__ = ("space", "kernel")

    def __init__(self, space: FiniteSpace, kernel: int):
        if kernel == 0:
            raise DegenerateFilter("a filter kernel must be nonempty")
        if kernel & ~open_lattice(space).full:
            raise ValueError("kernel refers to opens outside the space")
        self.space = space
        self.kernel = kernel

    @classmethod
    def principal(cls, space: FiniteSpace, opens: Iterable[int]) -> "HyperFilter":
        return cls(space, open_lattice(space).hyperset(opens))

    @classmethod
    def of_family(cls, family: IsotoneFamily) -> "HyperFilter":
        """The principal filter of a nonempty family."""
        return cls(family.space, family.hyperset)

    def kernel_opens(self) -> list[int]:
        return open_lattice(self.space).opens_of(self.kernel)

    def contains(self, hmask: int) -> bool:
        return self.kernel & ~hmask == 0

    def leq(self, other: "HyperFilter") -> bool:
        """self ≤ other: other is finer (contains every member of self)."""
        return other.kernel & ~self.kernel == 0

    def sup(self, other: "HyperFilter") -> "HyperFilter":
        k = self.kernel & other.kernel
        if not k:
            raise DegenerateFilter("filters have no common refinement")
        return HyperFilter(self.space, k)

    def inf(self, other: "HyperFilter") -> "HyperFilter":
        return HyperFilter(self.space, self.kernel | other.kernel)

    def regularize(self) -> "HyperFilter":
        """𝒪^♮: the filter generated by the isotone hulls of its members."""
        return HyperFilter(self.space, open_lattice(self.space).upclose(self.kernel))

    @property
    def is_regular(self) -> bool:
        return open_lattice(self.space).upclose(self.kernel) == self.kernel

    def family(self) -> IsotoneFamily:
        return IsotoneFamily.from_hyperset(self.space, self.regularize().kernel)

    def __eq__(self, other):
        return (isinstance(other, HyperFilter) and self.space == other.space
                and self.kernel == other.kernel)

    def __hash__(self):
        return hash((self.space, self.kernel))

    def __repr__(self):
        return f"HyperFilter(kernel={[as_list(u) for u in self.kernel_opens()]})"

    def to_json(self) -> list:
        return [as_list(u) for u in self.kernel_opens()]


# mesh, refinement, ideals ------------------------------------------------------

def _as_sets(arg) -> list[int]:
    if isinstance(arg, HyperFilter):
        return [arg.kernel]
    if isinstance(arg, IsotoneFamily):
        return [arg.hyperset]
    if isinstance(arg, int):
        return [arg]
    return list(arg)


def mesh(first, second) -> bool:
    """Every member of one meets every member of the other.

    A bare int is a single set ``A`` (so ``mesh(A, B)`` means ``{A} # B``); a
    filter meshes exactly when its kernel does.
    """
    a, b = _as_sets(first), _as_sets(second)
    return all(x & y for x in a for y in b)


def refines(P: Iterable[int], R: Iterable[int]) -> bool:
    R = list(R)
    return all(any(p & ~r == 0 for r in R) for p in P)


def o_natural(space: FiniteSpace, P: Iterable[int]) -> list[int]:
    """{𝒪_X(P) : P ∈ 𝒫} as hyperset masks."""
    lat = open_lattice(space)
    return [lat.principal_up(space.hull(p)) for p in P]


def family_leq(A: Iterable[int], B: Iterable[int]) -> bool:
    """A ≤ B for families of sets: each member of A contains a member of B."""
    B = list(B)
    return all(any(b & ~a == 0 for b in B) for a in A)


@dataclass(frozen=True)
class IdealInfo:
    is_ideal_subbase: bool
    ideal_closure: frozenset


def ideal_ops(P: Iterable[int]) -> IdealInfo:
    P = list(dict.fromkeys(P))
    closure = set(P)
    frontier = set(P)
    while frontier:
        new = set()
        for a in frontier:
            for b in P:
                c = a | b
                if c not in closure:
                    new.add(c)
        closure |= new
        frontier = new
    # finite subfamilies: their unions are exactly the closure elements (plus ∅)
    ok = all(any(u & ~q == 0 for q in P) for u in closure | {0}) if P else False
    return IdealInfo(ok, frozenset(closure))


def is_ideal_subbase(P: Iterable[int]) -> bool:
    return ideal_ops(P).is_ideal_subbase


def reduced_ideal(gamma: HyperFilter) -> frozenset:
    """{⋂𝒢 : 𝒢 ∈ γ}.  Members of γ are the supersets S of the kernel, and
    ⋂S = ⋂kernel ∩ ⋂(S ∖ kernel); the second factor runs over all opens."""
    core = gamma.space.full
    for u in gamma.kernel_opens():
        core &= u
    return frozenset(core & u for u in gamma.space.opens)


def saturation(space: FiniteSpace, subset: int) -> int:
    """Union of the comparability components meeting ``subset``."""
    m = 0
    for block in space.components:
        if block & subset:
            m |= block
    return m


@dataclass(frozen=True)
class SeparationResult:
    separated: bool
    witnesses: dict
    failure: int | None = None


def is_functionally_separated(family: IsotoneFamily) -> SeparationResult:
    """For every O in the family some A′ in it has its component saturation inside O.

    Real-valued continuous maps on a finite space are constant on components,
    so h = 0 on the saturation of A′ and 1 elsewhere is the separating map.
    """
    space = family.space
    witnesses = {}
    for o in family.members():
        found = None
        for a in family.minimals:
            if saturation(space, a) & ~o == 0:
                found = a
                break
        if found is None:
            return SeparationResult(False, witnesses, o)
        sat = saturation(space, found)
        h = tuple(0 if block & sat else 1 for block in space.components)
        witnesses[o] = (found, h)
    return SeparationResult(True, witnesses)


__all__ = [
    "OpenLattice", "open_lattice", "IsotoneFamily", "isotone_family", "principal_family",
    "is_compact_family", "is_compact_subset", "AlphaCollection", "p_collection",
    "k_collection", "kappa_collection", "s_collection", "standard_alphas", "HyperFilter",
    "mesh", "refines", "o_natural", "family_leq", "IdealInfo", "ideal_ops",
    "is_ideal_subbase", "reduced_ideal", "saturation", "SeparationResult",
    "is_functionally_separated",
]
