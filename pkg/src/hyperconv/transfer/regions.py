"""Exact regions of C(X,R) for a finite space X.

A continuous real map on a finite space is constant on each comparability
component, so C(X,R) is the set of rational-or-real vectors indexed by
components.  A region is a finite union of cylinders; a cylinder fixes, for
every component, a finite union of intervals (``portion`` intervals with
``Fraction`` endpoints) that the value must lie in.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import portion as P

from .._bits import members
from ..errors import NonPositiveSlope
from ..space import FiniteSpace

REAL = P.open(-P.inf, P.inf)
ZERO = P.singleton(Fraction(0))
DEFAULT_DEPTH = 8


def ladder(depth: int) -> list:
    """W_n = (-1/(n+1), 1/(n+1)) for n < depth."""
    if depth < 1:
        raise ValueError("ladder depth must be at least 1")
    return [P.open(-Fraction(1, n + 1), Fraction(1, n + 1)) for n in range(depth)]


def interval(lo, hi, closed: bool = False):
    """Open (or closed) interval with rational endpoints; None means unbounded."""
    lo = -P.inf if lo is None else Fraction(lo)
    hi = P.inf if hi is None else Fraction(hi)
    return P.closed(lo, hi) if closed else P.open(lo, hi)


class RealModel:
    """C(X,R) as vectors indexed by the comparability components of X."""

    def __init__(self, space: FiniteSpace):
        self.space = space
        self.components = tuple(space.components)
        self.dim = len(self.components)
        blocks = []
        for t in range(1 << self.dim):
            m = 0
            for c in members(t):
                m |= self.components[c]
            blocks.append(m)
        self.blocks = tuple(blocks)
        self.block_index = tuple(space.open_index[b] for b in blocks)

    def meeting(self, subset: int) -> int:
        """Mask of components that meet ``subset``."""
        t = 0
        for c, block in enumerate(self.components):
            if block & subset:
                t |= 1 << c
        return t

    def preimage(self, vector: Sequence, W) -> int:
        """Point mask of f⁻(W) for the map with the given component values."""
        m = 0
        for c, v in enumerate(vector):
            if Fraction(v) in W:
                m |= self.components[c]
        return m

    def full_region(self) -> "FunctionRegion":
        return FunctionRegion(self.dim, [(REAL,) * self.dim])

    def zero_vector(self) -> tuple:
        return (Fraction(0),) * self.dim

    def __eq__(self, other):
        return isinstance(other, RealModel) and self.space == other.space

    def __hash__(self):
        return hash(self.space)

    def __repr__(self):
        return f"<RealModel dim={self.dim}>"


# cylinders ---------------------------------------------------------------------

def _box_empty(box) -> bool:
    return any(side.empty for side in box)


def _box_le(a, b) -> bool:
    return all(x in y for x, y in zip(a, b))


def _box_and(a, b):
    return tuple(x & y for x, y in zip(a, b))


def _box_minus(a, b) -> list:
    """a \\ b as disjoint boxes."""
    meet = _box_and(a, b)
    if _box_empty(meet):
        return [a]
    out = []
    for k in range(len(a)):
        rest = a[k] - b[k]
        if not rest.empty:
            out.append(meet[:k] + (rest,) + a[k + 1:])
    return out


def _side_key(side) -> tuple:
    key = []
    for atom in side:
        lo = atom.lower
        hi = atom.upper
        key.append((
            -1 if lo == -P.inf else 0, 0 if lo in (-P.inf, P.inf) else lo,
            atom.left == P.CLOSED,
            1 if hi == P.inf else 0, 0 if hi in (-P.inf, P.inf) else hi,
            atom.right == P.CLOSED,
        ))
    return tuple(key)


def _canonical(dim: int, boxes: Iterable) -> tuple:
    work = []
    seen = set()
    for box in boxes:
        box = tuple(box)
        if len(box) != dim:
            raise ValueError(f"cylinder has {len(box)} sides, expected {dim}")
        if _box_empty(box) or box in seen:
            continue
        seen.add(box)
        work.append(box)
    changed = True
    while changed:
        changed = False
        # drop boxes inside another box
        kept = []
        for i, box in enumerate(work):
            if any(j != i and _box_le(box, other) and (j < i or not _box_le(other, box))
                   for j, other in enumerate(work)):
                changed = True
                continue
            kept.append(box)
        work = kept
        # merge two boxes that differ in at most one side
        merged = False
        for i in range(len(work)):
            for j in range(i + 1, len(work)):
                a, b = work[i], work[j]
                diff = [k for k in range(dim) if a[k] != b[k]]
                if len(diff) == 1:
                    k = diff[0]
                    new = a[:k] + (a[k] | b[k],) + a[k + 1:]
                    work = [w for idx, w in enumerate(work) if idx not in (i, j)] + [new]
                    merged = changed = True
                    break
            if merged:
                break
    return tuple(sorted(work, key=lambda box: tuple(_side_key(s) for s in box)))


class FunctionRegion:
    """A finite union of cylinders in R^dim, kept in a merged normal form.

    Equality is set equality, decided exactly.
    """

    __slots__ = ("dim", "cylinders")

    def __init__(self, dim: int, cylinders: Iterable = ()):
        self.dim = dim
        self.cylinders = _canonical(dim, cylinders)

    @classmethod
    def empty(cls, dim: int) -> "FunctionRegion":
        return cls(dim, ())

    @classmethod
    def point(cls, vector: Sequence) -> "FunctionRegion":
        return cls(len(vector), [tuple(P.singleton(Fraction(v)) for v in vector)])

    # set algebra ----------------------------------------------------------------

    def is_empty(self) -> bool:
        return not self.cylinders

    def __or__(self, other: "FunctionRegion") -> "FunctionRegion":
        self._check(other)
        return FunctionRegion(self.dim, self.cylinders + other.cylinders)

    def __and__(self, other: "FunctionRegion") -> "FunctionRegion":
        self._check(other)
        return FunctionRegion(self.dim, [_box_and(a, b) for a in self.cylinders for b in other.cylinders])

    def __sub__(self, other: "FunctionRegion") -> "FunctionRegion":
        self._check(other)
        return FunctionRegion(self.dim, self._minus_boxes(other))

    def _minus_boxes(self, other: "FunctionRegion") -> list:
        out = []
        for box in self.cylinders:
            pieces = [box]
            for cut in other.cylinders:
                pieces = [p for piece in pieces for p in _box_minus(piece, cut)]
                if not pieces:
                    break
            out.extend(pieces)
        return out

    def complement(self) -> "FunctionRegion":
        return FunctionRegion(self.dim, [(REAL,) * self.dim]) - self

    def issubset(self, other: "FunctionRegion") -> bool:
        self._check(other)
        if all(any(_box_le(a, b) for b in other.cylinders) for a in self.cylinders):
            return True
        return not self._minus_boxes(other)

    def __le__(self, other: "FunctionRegion") -> bool:
        return self.issubset(other)

    def __eq__(self, other):
        if not isinstance(other, FunctionRegion) or other.dim != self.dim:
            return NotImplemented
        if self.cylinders == other.cylinders:
            return True
        return self.issubset(other) and other.issubset(self)

    def __hash__(self):
        # semantic equality does not fix the representation, so hash coarsely
        return hash((self.dim, self.is_empty()))

    def __contains__(self, vector) -> bool:
        vals = [Fraction(v) for v in vector]
        return any(all(v in side for v, side in zip(vals, box)) for box in self.cylinders)

    def _check(self, other):
        if other.dim != self.dim:
            raise ValueError(f"regions of dimension {self.dim} and {other.dim} do not combine")

    # points -----------------------------------------------------------------------

    def sample(self) -> tuple | None:
        """Some vector inside the region, or None when it is empty."""
        if not self.cylinders:
            return None
        return tuple(_pick(side) for side in self.cylinders[0])

    # maps ---------------------------------------------------------------------------

    def affine(self, slope, intercept=0) -> "FunctionRegion":
        """Image under v ↦ slope*v + intercept applied to every component."""
        slope, intercept = Fraction(slope), Fraction(intercept)
        if slope <= 0:
            raise NonPositiveSlope(f"slope {slope} is not positive")
        return FunctionRegion(self.dim, [tuple(_affine_side(s, slope, intercept) for s in box)
                                         for box in self.cylinders])

    def translate(self, shift: Sequence) -> "FunctionRegion":
        if len(shift) != self.dim:
            raise ValueError("shift vector has the wrong length")
        return FunctionRegion(self.dim, [tuple(_affine_side(s, Fraction(1), Fraction(t))
                                               for s, t in zip(box, shift))
                                         for box in self.cylinders])

    # serialization ----------------------------------------------------------------

    def to_json(self) -> list:
        return [[side_to_json(s) for s in box] for box in self.cylinders]

    @classmethod
    def from_json(cls, dim: int, data) -> "FunctionRegion":
        return cls(dim, [tuple(side_from_json(s) for s in box) for box in data])

    def __repr__(self):
        if not self.cylinders:
            return "FunctionRegion(∅)"
        return "FunctionRegion(" + " ∪ ".join(
            "×".join(P.to_string(s) for s in box) for box in self.cylinders) + ")"


def _pick(side):
    atom = next(iter(side))
    lo, hi = atom.lower, atom.upper
    if lo == hi:
        return lo
    if lo == -P.inf and hi == P.inf:
        return Fraction(0)
    if lo == -P.inf:
        return hi - 1
    if hi == P.inf:
        return lo + 1
    return (lo + hi) / 2


def _affine_side(side, slope: Fraction, intercept: Fraction):
    def move(x):
        return x if x in (P.inf, -P.inf) else slope * x + intercept

    return side.apply(lambda atom: (atom.left, move(atom.lower), move(atom.upper), atom.right))


def _bound_json(x):
    if x == P.inf:
        return "inf"
    if x == -P.inf:
        return "-inf"
    return str(Fraction(x))


def _bound_parse(s):
    if s == "inf":
        return P.inf
    if s == "-inf":
        return -P.inf
    return Fraction(s)


def side_to_json(side) -> list:
    return [[atom.left == P.CLOSED, _bound_json(atom.lower), _bound_json(atom.upper),
             atom.right == P.CLOSED] for atom in side]


def side_from_json(data):
    out = P.empty()
    for left, lo, hi, right in data:
        out |= P.Interval.from_atomic(P.CLOSED if left else P.OPEN, _bound_parse(lo),
                                      _bound_parse(hi), P.CLOSED if right else P.OPEN)
    return out


def cylinder(model: RealModel, sides: dict) -> FunctionRegion:
    """Region constraining component c to ``sides[c]`` and leaving the rest free."""
    box = tuple(sides.get(c, REAL) for c in range(model.dim))
    return FunctionRegion(model.dim, [box])


__all__ = [
    "REAL", "ZERO", "DEFAULT_DEPTH", "ladder", "interval", "RealModel", "FunctionRegion",
    "cylinder", "side_to_json", "side_from_json",
]
