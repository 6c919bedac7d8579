"""Finite topological spaces.

Points are ``0..n-1`` and every subset is an int bitmask.  A finite topology is
the same thing as a preorder on its points (Alexandrov duality): the opens are
exactly the up-sets of the specialization preorder.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from ._bits import as_list, full_mask, mask_of, members
from .errors import InconsistentSpec, NotATopology


class FiniteSpace:
    """An immutable finite topological space.

    ``up[x]`` is the smallest open containing ``x``; ``x ⊑ y`` iff ``y`` lies in
    ``up[x]``.  All derived data is computed once in the constructor.
    """

    __slots__ = ("n", "full", "opens", "open_index", "up", "components",
                 "_open_set", "name", "__weakref__")

    def __init__(self, n: int, opens: Iterable[int], name: str = ""):
        if n < 0:
            raise InconsistentSpec("point count must be non-negative")
        full = full_mask(n)
        fam = sorted(set(int(o) for o in opens))
        for o in fam:
            if o < 0 or o & ~full:
                raise InconsistentSpec(f"open {as_list(o)} uses points outside 0..{n - 1}")
        fam_set = frozenset(fam)
        if 0 not in fam_set:
            raise NotATopology("the empty set is not open")
        if full not in fam_set:
            raise NotATopology("the whole space is not open")
        for a, b in itertools.combinations(fam, 2):
            if a | b not in fam_set:
                raise NotATopology(f"union of {as_list(a)} and {as_list(b)} is not open")
            if a & b not in fam_set:
                raise NotATopology(f"intersection of {as_list(a)} and {as_list(b)} is not open")
        self.n = n
        self.full = full
        self.opens = tuple(fam)
        self._open_set = fam_set
        self.open_index = {o: i for i, o in enumerate(self.opens)}
        up = []
        for x in range(n):
            m = full
            for o in fam:
                if o >> x & 1:
                    m &= o
            up.append(m)
        self.up = tuple(up)
        self.components = _components(n, self.up)
        self.name = name

    # constructors -------------------------------------------------------

    @classmethod
    def from_opens(cls, n: int, opens: Iterable[Iterable[int]], name: str = "") -> "FiniteSpace":
        masks = []
        for o in opens:
            pts = list(o)
            for p in pts:
                if not 0 <= p < n:
                    raise InconsistentSpec(f"point id {p} out of range for {n} points")
            masks.append(mask_of(pts))
        return cls(n, masks, name)

    @classmethod
    def from_preorder(cls, n: int, pairs: Iterable[tuple[int, int]], name: str = "") -> "FiniteSpace":
        """Space whose specialization preorder is generated by ``pairs`` (a ⊑ b)."""
        above = [1 << x for x in range(n)]
        for a, b in pairs:
            if not (0 <= a < n and 0 <= b < n):
                raise InconsistentSpec(f"pair ({a}, {b}) out of range for {n} points")
            above[a] |= 1 << b
        above = transitive_closure(above)
        return cls(n, upsets_of(above), name)

    # basic queries ------------------------------------------------------

    def is_open(self, subset: int) -> bool:
        return subset in self._open_set

    def is_closed(self, subset: int) -> bool:
        return (self.full & ~subset) in self._open_set

    def leq(self, x: int, y: int) -> bool:
        """Specialization: every open containing x contains y."""
        return bool(self.up[x] >> y & 1)

    def specialization(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(self.n) for y in range(self.n) if self.leq(x, y)]

    def hull(self, subset: int) -> int:
        """Smallest open containing ``subset``."""
        m = 0
        for x in members(subset):
            m |= self.up[x]
        return m

    def interior(self, subset: int) -> int:
        m = 0
        for x in range(self.n):
            if self.up[x] & ~subset == 0:
                m |= 1 << x
        return m

    def closure(self, subset: int) -> int:
        return self.full & ~self.interior(self.full & ~subset)

    @property
    def closed_sets(self) -> tuple[int, ...]:
        return tuple(self.full & ~o for o in self.opens)

    def separation_profile(self) -> dict:
        return separation_profile(self)

    # value semantics ----------------------------------------------------

    def key(self) -> tuple:
        return (self.n, self.opens)

    def __eq__(self, other):
        return isinstance(other, FiniteSpace) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<FiniteSpace{label} n={self.n} opens={[as_list(o) for o in self.opens]}>"

    def to_json(self) -> dict:
        return {"points": self.n, "opens": [as_list(o) for o in self.opens]}

    def canonical(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def transitive_closure(above: Sequence[int]) -> list[int]:
    """Warshall on rows given as bitmasks: row[a] has bit b when a relates to b."""
    rows = list(above)
    n = len(rows)
    for k in range(n):
        bk = 1 << k
        rk = rows[k]
        for i in range(n):
            if rows[i] & bk:
                rows[i] |= rk
    return rows


def upsets_of(above: Sequence[int]) -> list[int]:
    """All up-sets of a preorder given by its (reflexive, transitive) rows."""
    n = len(above)
    out = []
    for s in range(1 << n):
        ok = True
        for x in members(s):
            if above[x] & ~s:
                ok = False
                break
        if ok:
            out.append(s)
    return out


def _components(n: int, up: Sequence[int]) -> tuple[int, ...]:
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x in range(n):
        for y in members(up[x]):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
    blocks: dict[int, int] = {}
    for x in range(n):
        blocks[find(x)] = blocks.get(find(x), 0) | 1 << x
    return tuple(sorted(blocks.values(), key=lambda b: (b & -b)))


def build_space(spec) -> FiniteSpace:
    """Build a space from ``{"points": n, "opens": [...]}`` or ``{"points": n, "le": [...]}``."""
    if isinstance(spec, FiniteSpace):
        return spec
    if not isinstance(spec, dict) or "points" not in spec:
        raise InconsistentSpec("space description needs a 'points' entry")
    n = spec["points"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise InconsistentSpec("'points' must be a non-negative integer")
    has_opens, has_le = "opens" in spec, "le" in spec
    if has_opens == has_le:
        raise InconsistentSpec("give exactly one of 'opens' or 'le'")
    name = spec.get("name", "")
    if has_opens:
        return FiniteSpace.from_opens(n, spec["opens"], name)
    pairs = []
    for pair in spec["le"]:
        if len(pair) != 2:
            raise InconsistentSpec(f"relation entry {pair!r} is not a pair")
        pairs.append((pair[0], pair[1]))
    return FiniteSpace.from_preorder(n, pairs, name)


def load_space(path) -> FiniteSpace:
    return build_space(json.loads(Path(path).read_text()))


# standard spaces ---------------------------------------------------------

def sierpinski() -> FiniteSpace:
    return FiniteSpace(2, [0b00, 0b10, 0b11], "sierpinski")


def discrete(n: int) -> FiniteSpace:
    return FiniteSpace(n, range(1 << n), f"discrete{n}")


def indiscrete(n: int) -> FiniteSpace:
    return FiniteSpace(n, {0, full_mask(n)}, f"indiscrete{n}")


def chain(n: int) -> FiniteSpace:
    """Points 0 ⊑ 1 ⊑ ... ⊑ n-1; opens are the final segments."""
    opens = [full_mask(n) & ~full_mask(k) for k in range(n + 1)]
    return FiniteSpace(n, opens, f"chain{n}")


def point() -> FiniteSpace:
    return FiniteSpace(1, [0, 1], "point")


def disjoint_union(X: FiniteSpace, Y: FiniteSpace) -> FiniteSpace:
    opens = [a | b << X.n for a in X.opens for b in Y.opens]
    name = f"{X.name}+{Y.name}" if X.name and Y.name else ""
    return FiniteSpace(X.n + Y.n, opens, name)


def product(X: FiniteSpace, Y: FiniteSpace) -> FiniteSpace:
    """Product topology; the point (x, y) gets index ``x * Y.n + y``."""
    n = X.n * Y.n

    def box(a, b):
        m = 0
        for x in members(a):
            for y in members(b):
                m |= 1 << (x * Y.n + y)
        return m

    boxes = {box(a, b) for a in X.opens for b in Y.opens}
    opens = set(boxes) | {0}
    frontier = list(opens)
    while frontier:
        nxt = []
        for u in frontier:
            for b in boxes:
                v = u | b
                if v not in opens:
                    opens.add(v)
                    nxt.append(v)
        frontier = nxt
    return FiniteSpace(n, opens)


# continuity ----------------------------------------------------------------

@dataclass(frozen=True)
class ContinuousMap:
    source: FiniteSpace
    target: FiniteSpace
    table: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.table[x]

    def preimage(self, subset: int) -> int:
        m = 0
        for x, fx in enumerate(self.table):
            if subset >> fx & 1:
                m |= 1 << x
        return m

    def image(self, subset: int) -> int:
        return mask_of(self.table[x] for x in members(subset))

    def compose(self, inner: "ContinuousMap") -> "ContinuousMap":
        """``self ∘ inner``."""
        return ContinuousMap(inner.source, self.target,
                             tuple(self.table[v] for v in inner.table))


def is_continuous(X: FiniteSpace, Z: FiniteSpace, table: Sequence[int]) -> bool:
    # monotone for specialization is equivalent to continuity on finite spaces,
    # but we test the definition directly
    for u in Z.opens:
        pre = 0
        for x, fx in enumerate(table):
            if u >> fx & 1:
                pre |= 1 << x
        if not X.is_open(pre):
            return False
    return True


def continuous_maps(X: FiniteSpace, Z: FiniteSpace) -> list[ContinuousMap]:
    out = []
    for table in itertools.product(range(Z.n), repeat=X.n):
        if is_continuous(X, Z, table):
            out.append(ContinuousMap(X, Z, tuple(table)))
    return out


def components(space: FiniteSpace) -> tuple[int, ...]:
    return space.components


def interior(space: FiniteSpace, subset: int) -> int:
    return space.interior(subset)


def closure(space: FiniteSpace, subset: int) -> int:
    return space.closure(subset)


# separation -----------------------------------------------------------------

def _separable(space: FiniteSpace, c1: int, c2: int) -> bool:
    for u1 in space.opens:
        if c1 & ~u1:
            continue
        for u2 in space.opens:
            if c2 & ~u2 == 0 and u1 & u2 == 0:
                return True
    return False


def separation_profile(space: FiniteSpace) -> dict:
    """t0, t1, normal and regular flags; normality and regularity are brute force."""
    n = space.n
    t0 = all(space.up[x] != space.up[y] for x in range(n) for y in range(x + 1, n))
    t1 = all(space.up[x] == 1 << x for x in range(n))
    closed = space.closed_sets
    normal = all(_separable(space, c1, c2)
                 for c1 in closed for c2 in closed if c1 & c2 == 0)
    regular = all(_separable(space, 1 << x, c)
                  for x in range(n) for c in closed if not c >> x & 1)
    return {"t0": t0, "t1": t1, "normal": normal, "regular": regular}


def is_symmetric(space: FiniteSpace) -> bool:
    """Specialization is an equivalence relation (every open is closed)."""
    return all(space.is_closed(o) for o in space.opens)


__all__ = [
    "FiniteSpace", "ContinuousMap", "build_space", "load_space", "sierpinski",
    "discrete", "indiscrete", "chain", "point", "disjoint_union", "product",
    "continuous_maps", "is_continuous", "components", "separation_profile",
    "interior", "closure", "is_symmetric", "transitive_closure", "upsets_of",
]
