"""Filters on C(X,R) given by descending bases of regions, and the transfer
between them and filters on the hyperspace C(X,$)."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import portion as P

from .._bits import members
from ..errors import EmptyBase, NotIsotone, NotSolid, TruncationInsufficient
from ..hyperfamily import (HyperFilter, IsotoneFamily, is_functionally_separated,
                           open_lattice, reduced_ideal)
from ..hyperspace import HyperConvergence, scott_convergence, solidity_check
from ..space import FiniteSpace
from .regions import DEFAULT_DEPTH, REAL, ZERO, FunctionRegion, RealModel, ladder


class SymbolicFilter:
    """Filter on C(X,R) generated by a descending base ``base[0] ⊇ base[1] ⊇ ...``.

    The base is indexed by ladder depth; the last element is the deepest
    region available at this truncation.
    """

    def __init__(self, model: RealModel, base: Sequence[FunctionRegion], label: str = ""):
        base = tuple(base)
        if not base:
            raise ValueError("a symbolic filter needs at least one base region")
        for n, region in enumerate(base):
            if region.dim != model.dim:
                raise ValueError(f"base region {n} has the wrong dimension")
            if region.is_empty():
                raise EmptyBase(f"base region {n} is empty")
        for n in range(len(base) - 1):
            if not base[n + 1].issubset(base[n]):
                raise ValueError(f"base is not descending at depth {n + 1}")
        self.model = model
        self.base = base
        self.label = label

    @classmethod
    def constant(cls, model: RealModel, region: FunctionRegion, depth: int = DEFAULT_DEPTH,
                 label: str = "") -> "SymbolicFilter":
        return cls(model, [region] * depth, label)

    @classmethod
    def principal_at(cls, model: RealModel, vector: Sequence, depth: int = DEFAULT_DEPTH) -> "SymbolicFilter":
        return cls.constant(model, FunctionRegion.point(vector), depth, "principal")

    @property
    def depth(self) -> int:
        return len(self.base)

    @property
    def deepest(self) -> FunctionRegion:
        return self.base[-1]

    def leq(self, other: "SymbolicFilter") -> bool:
        """self ≤ other: every base member of self contains a member of other."""
        return all(other.deepest.issubset(region) for region in self.base)

    def equals(self, other: "SymbolicFilter") -> bool:
        return self.leq(other) and other.leq(self)

    def same_base(self, other: "SymbolicFilter") -> bool:
        return self.depth == other.depth and all(a == b for a, b in zip(self.base, other.base))

    def rescale(self, slope, intercept=0) -> "SymbolicFilter":
        """Image filter under composition with v ↦ slope*v + intercept."""
        return SymbolicFilter(self.model, [r.affine(slope, intercept) for r in self.base],
                              f"{self.label}*{slope}")

    def to_json(self) -> dict:
        return {"label": self.label, "dim": self.model.dim,
                "base": [r.to_json() for r in self.base]}

    @classmethod
    def from_json(cls, model: RealModel, data: dict) -> "SymbolicFilter":
        return cls(model, [FunctionRegion.from_json(model.dim, r) for r in data["base"]],
                   data.get("label", ""))

    def __repr__(self):
        return f"<SymbolicFilter {self.label!r} depth={self.depth}>"


def descend(regions: Sequence[FunctionRegion]) -> list[FunctionRegion]:
    """Cumulative intersections, so that the result is descending."""
    out = []
    for region in regions:
        if out:
            prev = out[-1]
            if region.issubset(prev):
                pass
            elif prev.issubset(region):
                region = prev
            else:
                region = prev & region
        if region.is_empty():
            raise EmptyBase(f"cumulative intersection is empty at depth {len(out)}")
        out.append(region)
    return out


# brackets -------------------------------------------------------------------------

def _family_test(space: FiniteSpace, family, strict: bool):
    """Membership test for opens plus the sets to pin for the {0} bracket."""
    if isinstance(family, HyperFilter):
        family = family.kernel
    if isinstance(family, IsotoneFamily):
        return (lambda u: u in family), list(family.minimals)
    lat = open_lattice(space)
    hmask = int(family)
    if strict and lat.upclose(hmask) != hmask:
        raise NotIsotone("bracket needs an openly isotone family")
    return (lambda u: bool(hmask >> space.open_index[u] & 1)), lat.opens_of(hmask)


def bracket_region(model: RealModel, family, W, strict: bool = True) -> FunctionRegion:
    """[𝒦,W] = {f : f⁻(W) ∈ 𝒦} as a region.

    ``family`` is an IsotoneFamily, a HyperFilter (its kernel) or a hyperset
    mask.  With ``strict`` a mask must be openly isotone.  For W = {0} the
    closed-set form {f : some A ∈ 𝒦 has A ⊆ f⁻(0)} is used.
    """
    test, gens = _family_test(model.space, family, strict)
    if W == ZERO:
        boxes = []
        for a in gens:
            t = model.meeting(a)
            boxes.append(tuple(ZERO if t >> c & 1 else REAL for c in range(model.dim)))
        return FunctionRegion(model.dim, boxes)
    outside = REAL - W
    boxes = []
    for t in range(1 << model.dim):
        if test(model.blocks[t]):
            boxes.append(tuple(W if t >> c & 1 else outside for c in range(model.dim)))
    return FunctionRegion(model.dim, boxes)


def _regular_kernel(alpha) -> IsotoneFamily:
    if isinstance(alpha, IsotoneFamily):
        return alpha
    return alpha.family()


def erected_filter(alpha, depth: int = DEFAULT_DEPTH) -> SymbolicFilter:
    """[α,𝒩(0)] truncated to ``depth`` ladder levels (α regularized first)."""
    fam = _regular_kernel(alpha)
    model = RealModel(fam.space)
    base = descend([bracket_region(model, fam, w) for w in ladder(depth)])
    return SymbolicFilter(model, base, "erected")


def sup_erected(alphas: Sequence, depth: int = DEFAULT_DEPTH) -> SymbolicFilter:
    """⋁ₙ[αₙ,Wₙ]; a list shorter than ``depth`` is continued by its last entry."""
    if not alphas:
        raise ValueError("need at least one filter")
    fams = [_regular_kernel(a) for a in alphas]
    fams = fams[:depth] + [fams[-1]] * max(0, depth - len(fams))
    model = RealModel(fams[0].space)
    base = descend([bracket_region(model, f, w) for f, w in zip(fams, ladder(depth))])
    return SymbolicFilter(model, base, "sup-erected")


def zero_bracket_filter(alpha, depth: int = DEFAULT_DEPTH) -> SymbolicFilter:
    """The constant filter [α,{0}]."""
    fam = _regular_kernel(alpha)
    model = RealModel(fam.space)
    return SymbolicFilter.constant(model, bracket_region(model, fam, ZERO), depth, "zero-bracket")


# preimages -------------------------------------------------------------------------

def _side_kind(side, W) -> int:
    """1 forced in, -1 forced out, 0 optional."""
    if side in W:
        return 1
    if (side & W).empty:
        return -1
    return 0


def _preimages_from_kinds(model: RealModel, kinds_per_box) -> int:
    idx = model.block_index
    hmask = 0
    for kinds in kinds_per_box:
        forced = 0
        optional = 0
        for c, k in enumerate(kinds):
            if k == 1:
                forced |= 1 << c
            elif k == 0:
                optional |= 1 << c
        s = optional
        while True:
            hmask |= 1 << idx[forced | s]
            if s == 0:
                break
            s = (s - 1) & optional
    return hmask


def region_preimage(model: RealModel, region: FunctionRegion, W) -> int:
    """Hyperset {f⁻(W) : f ∈ region}."""
    return _preimages_from_kinds(model, [[_side_kind(s, W) for s in box] for box in region.cylinders])


@dataclass(frozen=True)
class PreimageFilter:
    filter: HyperFilter
    stabilized: bool
    kernels: tuple = ()

    @property
    def kernel(self) -> int:
        return self.filter.kernel


def filter_preimage(F: SymbolicFilter, W) -> PreimageFilter:
    """𝓕⁻(W), generated by R⁻(W) along the base.

    The kernels descend with the base; the flag reports whether the last two
    depths agree.
    """
    if W.empty:
        raise ValueError("W must be nonempty")
    ks = tuple(region_preimage(F.model, r, W) for r in F.base[-2:])
    stable = len(F.base) >= 2 and ks[0] == ks[-1]
    return PreimageFilter(HyperFilter(F.model.space, ks[-1]), stable, ks)


def _checked_depth(F: SymbolicFilter, levels: int | None) -> int:
    if levels is None:
        levels = F.depth - 1
    if levels < 1 or levels > F.depth - 1:
        raise TruncationInsufficient(
            f"{levels} ladder levels need a base of depth at least {levels + 1}, got {F.depth}")
    return levels


def stable_preimage(F: SymbolicFilter, W) -> PreimageFilter:
    pre = filter_preimage(F, W)
    if not pre.stabilized:
        raise TruncationInsufficient(f"preimage under {P.to_string(W)} has not stabilized")
    return pre


def _require_solid(tau: HyperConvergence) -> None:
    report = tau.__dict__.get("_solidity")
    if report is None:
        report = solidity_check(tau)
        tau.__dict__["_solidity"] = report
    if not report.solid:
        raise NotSolid(f"{tau.name} is not solid: {report.as_dict()}")


def lift_limit_at_zero(tau: HyperConvergence, F: SymbolicFilter, levels: int | None = None) -> bool:
    """0̄ ∈ lim F for the lift of τ, tested as X ∈ lim_τ F⁻(Wₙ) for n < ``levels``.

    ``levels`` defaults to one less than the base depth, the deepest level at
    which stabilization can be observed.
    """
    _require_solid(tau)
    levels = _checked_depth(F, levels)
    top = tau.space.open_index[tau.space.full]
    for w in ladder(levels):
        pre = stable_preimage(F, w)
        if not tau.lim(pre.kernel) >> top & 1:
            return False
    return True


# direct route: quantify over all open subsets of R -----------------------------------

def _cells(endpoints: Sequence[Fraction]):
    """Alternating open gaps and points, each with a representative value."""
    pts = sorted(set(endpoints))
    cells = []
    prev = None
    for e in pts:
        rep = e - 1 if prev is None else (prev + e) / 2
        cells.append(("gap", rep))
        cells.append(("point", e))
        prev = e
    cells.append(("gap", pts[-1] + 1))
    return cells


def _endpoints(side) -> list:
    out = []
    for atom in side:
        for b in (atom.lower, atom.upper):
            if b not in (P.inf, -P.inf):
                out.append(Fraction(b))
    return out


def open_set_statuses(sides: Sequence, must_contain=None, must_avoid=None) -> set:
    """All (meets, misses) mask pairs realized by open sets O ⊆ R.

    Bit i of ``meets`` says O meets sides[i]; bit i of ``misses`` says some
    point of sides[i] lies outside O.  O ranges over open sets containing the
    interval ``must_contain`` and avoiding the point ``must_avoid``.
    """
    ends = [Fraction(0)]
    for s in list(sides) + [x for x in (must_contain,) if x is not None]:
        ends.extend(_endpoints(s))
    if must_avoid is not None:
        ends.append(Fraction(must_avoid))
    cells = _cells(ends)
    cell_sides = []
    allowed = []
    for kind, rep in cells:
        m = 0
        for i, s in enumerate(sides):
            if rep in s:
                m |= 1 << i
        cell_sides.append(m)
        opts = ("full", "empty") if kind == "point" else ("full", "empty", "partial")
        if must_contain is not None and rep in must_contain:
            opts = ("full",)
        if must_avoid is not None and kind == "point" and rep == must_avoid:
            opts = ("empty",)
        allowed.append(opts)
    states = {(None, 0, 0)}
    for (kind, _), m, opts in zip(cells, cell_sides, allowed):
        nxt = set()
        for prev, meets, misses in states:
            for st in opts:
                # an open set containing a point contains a neighbourhood of it
                if st == "empty" and prev == "full" and kind == "gap":
                    continue
                if st == "full" and kind == "point" and prev == "empty":
                    continue
                nm = meets | (m if st != "empty" else 0)
                nx = misses | (m if st != "full" else 0)
                nxt.add((st, nm, nx))
        states = nxt
    # a trailing point cannot exist (cells end with a gap); drop the tag
    return {(meets, misses) for _, meets, misses in states}


def zero_limit_direct(tau: HyperConvergence, F: SymbolicFilter, levels: int | None = None) -> bool:
    """0̄ ∈ lim F tested on every open O ⊆ R: 0̄⁻(O) ∈ lim_τ F⁻(O).

    Open sets containing 0 are those containing the deepest checked ladder
    interval; open sets missing 0 are all taken.  Uses the deepest region.
    """
    levels = _checked_depth(F, levels)
    space = tau.space
    model = F.model
    region = F.deepest
    sides = []
    index = {}
    for box in region.cylinders:
        for s in box:
            if s not in index:
                index[s] = len(sides)
                sides.append(s)
    box_sides = [[index[s] for s in box] for box in region.cylinders]
    inner = ladder(levels)[-1]
    top = space.open_index[space.full]
    bottom = space.open_index[0]

    def kernel_of(meets, misses):
        kinds = []
        for ids in box_sides:
            row = []
            for i in ids:
                if not misses >> i & 1:
                    row.append(1)
                elif not meets >> i & 1:
                    row.append(-1)
                else:
                    row.append(0)
            kinds.append(row)
        return _preimages_from_kinds(model, kinds)

    for meets, misses in open_set_statuses(sides, must_contain=inner):
        if not tau.lim(kernel_of(meets, misses)) >> top & 1:
            return False
    for meets, misses in open_set_statuses(sides, must_avoid=Fraction(0)):
        if not tau.lim(kernel_of(meets, misses)) >> bottom & 1:
            return False
    return True


# the compact-transfer theorem ---------------------------------------------------------

@dataclass(frozen=True)
class TransferCompact:
    leq: bool
    eq: bool
    separated: bool
    preimage_kernel: int
    regular_kernel: int

    def as_dict(self) -> dict:
        return {"leq": self.leq, "eq": self.eq, "separated": self.separated}


def verify_transfer_compact(alpha, W=None, depth: int = DEFAULT_DEPTH) -> TransferCompact:
    """Compare α with [α,𝒩(0)]⁻(W); both sides are taken 𝒪^♮-regularized."""
    fam = _regular_kernel(alpha)
    W = ladder(1)[0] if W is None else W
    pre = stable_preimage(erected_filter(fam, depth), W)
    lat = open_lattice(fam.space)
    back = lat.upclose(pre.kernel)
    leq = back & ~fam.hyperset == 0
    return TransferCompact(leq, back == fam.hyperset, is_functionally_separated(fam).separated,
                           pre.kernel, fam.hyperset)


# auxiliary constructions ------------------------------------------------------------

def rescale(target, slope, intercept=0):
    """Image of a region or symbolic filter under v ↦ slope*v + intercept."""
    if isinstance(target, SymbolicFilter):
        return target.rescale(slope, intercept)
    return target.affine(slope, intercept)


def translate(region: FunctionRegion, shift: Sequence) -> FunctionRegion:
    return region.translate(shift)


def preimage_bracket(F: SymbolicFilter, W) -> FunctionRegion:
    """Kernel region of [𝓕⁻(W),W]; the preimage kernel need not be isotone."""
    pre = stable_preimage(F, W)
    return bracket_region(F.model, pre.kernel, W, strict=False)


def f_upper(F: SymbolicFilter, levels: int | None = None) -> SymbolicFilter:
    """𝓕^{𝒩(0)} = ⋁ₙ[𝓕⁻(Wₙ),Wₙ] over n < ``levels``."""
    levels = _checked_depth(F, levels)
    base = descend([preimage_bracket(F, w) for w in ladder(levels)])
    return SymbolicFilter(F.model, base, f"{F.label}^N0")


class Relation:
    """A subset of C(X,R) × opens × {0..N-1}, stored as regions per (A, k)."""

    def __init__(self, model: RealModel, slices: dict):
        self.model = model
        self.slices = {key: r for key, r in slices.items() if not r.is_empty()}

    def restrict(self, keep) -> "Relation":
        return Relation(self.model, {key: r for key, r in self.slices.items() if keep(*key)})

    def __and__(self, other: "Relation") -> "Relation":
        out = {}
        for key, r in self.slices.items():
            if key in other.slices:
                out[key] = r & other.slices[key]
        return Relation(self.model, out)

    def first_projection(self) -> FunctionRegion:
        acc = FunctionRegion.empty(self.model.dim)
        for r in self.slices.values():
            acc = acc | r
        return acc


def delta_relation(model: RealModel, depth: int) -> Relation:
    """Δ = {(f, A, k) : A ⊆ f⁻(W_k)} over all opens A and k < depth."""
    slices = {}
    for k, w in enumerate(ladder(depth)):
        for a in model.space.opens:
            t = model.meeting(a)
            box = tuple(w if t >> c & 1 else REAL for c in range(model.dim))
            slices[(a, k)] = FunctionRegion(model.dim, [box])
    return Relation(model, slices)


def delta_reconstruction(alpha, depth: int = DEFAULT_DEPTH) -> SymbolicFilter:
    """Δ₁(Δ₂⁻α ∨ Δ₃⁻𝒩) with 𝒩 replaced by the tails {k ≥ n} of {0..depth-1}."""
    fam = _regular_kernel(alpha)
    model = RealModel(fam.space)
    delta = delta_relation(model, depth)
    inside = set(fam.members())
    by_family = delta.restrict(lambda a, k: a in inside)
    base = []
    for n in range(depth):
        tail = delta.restrict(lambda a, k, n=n: k >= n)
        base.append((by_family & tail).first_projection())
    return SymbolicFilter(model, base, "delta")


# functional separation of convergent filters -------------------------------------------

@dataclass
class SeparatedCoarsening:
    """Coarser filter 𝒪^♮(closed ideal base) built from a Scott-convergent γ."""
    closed_pieces: dict
    ideal_top: int
    alpha: HyperFilter
    coarser: bool
    converges: bool
    separated: bool
    reduced_matches: bool
    transfer_matches: bool
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return (self.coarser and self.converges and self.separated
                and self.reduced_matches and self.transfer_matches)


def separated_coarsening(gamma: HyperFilter, target: int, W=None,
                         depth: int = DEFAULT_DEPTH) -> SeparatedCoarsening:
    """For a filter γ with ``target`` in its Scott limit, pick for every point x
    of the target the closure of its minimal neighbourhood and form
    α = 𝒪^♮ of the finite unions of those closed pieces."""
    space = gamma.space
    lat = open_lattice(space)
    pieces = {x: space.closure(space.up[x]) for x in members(target)}
    top = 0
    for v in pieces.values():
        top |= v
    # 𝒪^♮ of the ideal base {⋃ pieces over finite S}: the generated filter is 𝒪(top)
    alpha = HyperFilter(space, lat.principal_up(space.hull(top)))
    coarser = alpha.leq(gamma)
    scott = scott_convergence(space)
    converges = bool(scott.lim(alpha.kernel) >> space.open_index[target] & 1)
    separated = is_functionally_separated(alpha.family()).separated

    def o_natural_of_ideal(ideal) -> int:
        # generated filter of {𝒪(R) : R in the ideal}: opens containing every R
        union = 0
        for r in ideal:
            union |= r
        return lat.principal_up(space.hull(union))

    reduced_matches = o_natural_of_ideal(reduced_ideal(alpha)) == alpha.kernel
    W = ladder(1)[0] if W is None else W
    pre = stable_preimage(erected_filter(alpha, depth), W)
    transfer_matches = o_natural_of_ideal(reduced_ideal(HyperFilter(space, pre.kernel))) == alpha.kernel
    return SeparatedCoarsening(pieces, top, alpha, coarser, converges, separated,
                               reduced_matches, transfer_matches)


__all__ = [
    "SymbolicFilter", "descend", "bracket_region", "erected_filter", "sup_erected",
    "zero_bracket_filter", "region_preimage", "PreimageFilter", "filter_preimage",
    "stable_preimage", "lift_limit_at_zero", "open_set_statuses", "zero_limit_direct",
    "TransferCompact", "verify_transfer_compact", "rescale", "translate", "preimage_bracket",
    "f_upper", "Relation", "delta_relation", "delta_reconstruction", "SeparatedCoarsening",
    "separated_coarsening",
]
