"""Convergences on C(X,Z) for finite X and Z."""
from __future__ import annotations

import functools
from typing import Iterable, Sequence

from ._bits import members
from .convergence import Convergence, initial, topology_from_subbase
from .errors import DegenerateAlpha
from .hyperfamily import AlphaCollection, IsotoneFamily, open_lattice
from .hyperspace import HyperConvergence, complement_view
from .space import ContinuousMap, FiniteSpace, continuous_maps

LITERAL_NATURAL_LIMIT = 8


class FunctionCarrier:
    """All continuous maps X -> Z with preimage tables."""

    def __init__(self, X: FiniteSpace, Z: FiniteSpace):
        self.X = X
        self.Z = Z
        self.maps = tuple(continuous_maps(X, Z))
        self.size = len(self.maps)
        self.index = {f.table: i for i, f in enumerate(self.maps)}
        # pre[j][i]: preimage of Z.opens[j] under map i, as a point mask of X
        self.pre = tuple(tuple(f.preimage(u) for f in self.maps) for u in Z.opens)

    def preimage(self, f: int, u: int) -> int:
        return self.pre[self.Z.open_index[u]][f]

    def preimage_set(self, f: int, subset: int) -> int:
        return self.maps[f].preimage(subset)

    def kernel_preimage(self, kernel: int, u: int) -> list[int]:
        row = self.pre[self.Z.open_index[u]]
        return [row[i] for i in members(kernel)]

    def mask(self, pred) -> int:
        m = 0
        for i, f in enumerate(self.maps):
            if pred(f):
                m |= 1 << i
        return m

    def __repr__(self):
        return f"<FunctionCarrier {self.size} maps>"


@functools.lru_cache(maxsize=256)
def function_carrier(X: FiniteSpace, Z: FiniteSpace) -> FunctionCarrier:
    return FunctionCarrier(X, Z)


class FunctionConvergence(Convergence):
    """A convergence on a FunctionCarrier, tagged with how it was built."""

    functions: FunctionCarrier
    provenance: str

    @classmethod
    def wrap(cls, fc: FunctionCarrier, conv: Convergence, provenance: str) -> "FunctionConvergence":
        out = cls.__new__(cls)
        out.__dict__.update(conv.__dict__)
        out.functions = fc
        out.provenance = provenance
        return out


# brackets ---------------------------------------------------------------------

def bracket(fc: FunctionCarrier, arg, U: int) -> int:
    """[D,U] for a point set D, or [𝒜,U] for an isotone family."""
    if isinstance(arg, IsotoneFamily):
        return fc.mask(lambda f: f.preimage(U) in arg)
    return fc.mask(lambda f: arg & ~f.preimage(U) == 0)


def closed_bracket(fc: FunctionCarrier, family: IsotoneFamily, C: int) -> int:
    """[𝒜,C] := {f : some A ∈ 𝒜 lies inside f⁻(C)} for a closed C."""
    return fc.mask(lambda f: any(a & ~f.preimage(C) == 0 for a in family.minimals))


def alpha_function_topology(alpha: AlphaCollection, Z: FiniteSpace) -> FunctionConvergence:
    """Topology on C(X,Z) with subbase {[𝒜,U] : 𝒜 ∈ α, U open in Z}."""
    if not alpha.nondegenerate:
        raise DegenerateAlpha(f"collection {alpha.label!r} has no nonempty family")
    fc = function_carrier(alpha.space, Z)
    subbase = [bracket(fc, fam, u) for fam in alpha for u in Z.opens]
    conv = topology_from_subbase(fc.maps, subbase, f"{alpha.label}(X,Z)")
    return FunctionConvergence.wrap(fc, conv, "alpha-topology")


def natural_convergence(X: FiniteSpace, Z: FiniteSpace, literal: bool | None = None) -> FunctionConvergence:
    """f0 ∈ lim(K) iff for every open U of Z and x ∈ f0⁻(U) some member F of the
    filter has ⋂_{f∈F} f⁻(U) a neighbourhood of x.

    Members of the principal filter are supersets of K and only shrink the
    intersection, so F = K is the best choice; ``literal`` scans all supersets.
    """
    fc = function_carrier(X, Z)
    if literal is None:
        literal = fc.size <= LITERAL_NATURAL_LIMIT
    full = (1 << fc.size) - 1
    opens = [u for u in Z.opens]

    def inter(kernel, row):
        acc = X.full
        for i in members(kernel):
            acc &= row[i]
        return acc

    def rule(kernel):
        out = 0
        for f0 in range(fc.size):
            ok = True
            for j, u in enumerate(opens):
                row = fc.pre[j]
                need = row[f0]
                if not need:
                    continue
                if literal:
                    got = 0
                    free = full & ~kernel
                    extra = free
                    while True:
                        got |= X.interior(inter(kernel | extra, row))
                        if extra == 0:
                            break
                        extra = (extra - 1) & free
                else:
                    got = X.interior(inter(kernel, row))
                if need & ~got:
                    ok = False
                    break
            if ok:
                out |= 1 << f0
        return out

    conv = Convergence(fc.maps, rule, name="[X,Z]")
    return FunctionConvergence.wrap(fc, conv, "natural")


# preimage-wise lifts -------------------------------------------------------------

def _open_index_map(fc: FunctionCarrier, u: int) -> list[int]:
    idx = fc.X.open_index
    return [idx[p] for p in fc.pre[fc.Z.open_index[u]]]


def preimage_lift(tau: HyperConvergence, Z: FiniteSpace, basis: Iterable[int] | None = None) -> FunctionConvergence:
    """τ^⇑ as the initial convergence of the maps f ↦ f⁻(U), U in ``basis``
    (all opens of Z by default)."""
    fc = function_carrier(tau.space, Z)
    basis = list(Z.opens if basis is None else basis)
    maps = [_open_index_map(fc, u) for u in basis]
    conv = initial(maps, [tau] * len(maps), fc.maps, name=f"{tau.name}^lift")
    return FunctionConvergence.wrap(fc, conv, "lift")


def preimage_lift_direct(tau: HyperConvergence, Z: FiniteSpace) -> FunctionConvergence:
    """f ∈ lim(K) iff f⁻(U) ∈ lim_τ{g⁻(U) : g ∈ K} for every open U of Z."""
    X = tau.space
    fc = function_carrier(X, Z)
    idx = X.open_index

    def rule(kernel):
        out = 0
        limits = []
        for j in range(len(Z.opens)):
            row = fc.pre[j]
            hk = 0
            for g in members(kernel):
                hk |= 1 << idx[row[g]]
            limits.append(tau.lim(hk))
        for f in range(fc.size):
            if all(limits[j] >> idx[fc.pre[j][f]] & 1 for j in range(len(Z.opens))):
                out |= 1 << f
        return out

    conv = Convergence(fc.maps, rule, name=f"{tau.name}^lift-direct")
    return FunctionConvergence.wrap(fc, conv, "lift")


def preimage_lift_closed(tau: HyperConvergence, Z: FiniteSpace, closed_basis: Iterable[int]) -> FunctionConvergence:
    """Lift tested on closed sets: f⁻(C) ∈ lim_{cτ} of the preimages, C in the basis."""
    X = tau.space
    fc = function_carrier(X, Z)
    ctau = complement_view(tau)
    cidx = {c: i for i, c in enumerate(ctau.carrier)}
    maps = [[cidx[fc.preimage_set(f, c)] for f in range(fc.size)] for c in closed_basis]
    conv = initial(maps, [ctau] * len(maps), fc.maps, name=f"{tau.name}^lift-closed")
    return FunctionConvergence.wrap(fc, conv, "lift")


# dual convergence -----------------------------------------------------------------

def dual_convergence(alpha: AlphaCollection, Z: FiniteSpace) -> FunctionConvergence:
    """f ∈ lim(K) iff for every open O of Z and 𝒜 ∈ α with f ∈ [𝒜,O] some
    A ∈ 𝒜 has K ⊆ [A,O]."""
    X = alpha.space
    fc = function_carrier(X, Z)
    checks = []
    for fam in alpha:
        members_ = fam.members()
        for o in Z.opens:
            checks.append((bracket(fc, fam, o), [bracket(fc, a, o) for a in members_]))

    def rule(kernel):
        out = 0
        for f in range(fc.size):
            ok = True
            for fam_bracket, point_brackets in checks:
                if fam_bracket >> f & 1 and not any(kernel & ~b == 0 for b in point_brackets):
                    ok = False
                    break
            if ok:
                out |= 1 << f
        return out

    conv = Convergence(fc.maps, rule, name=f"[{alpha.label},Z]")
    return FunctionConvergence.wrap(fc, conv, "dual")


# maps between function spaces --------------------------------------------------------

def lower_conjugate(h: ContinuousMap, source: FunctionCarrier, target: FunctionCarrier) -> list[int]:
    """Index map f ↦ h ∘ f from C(X,Z) to C(X,W)."""
    return [target.index[h.compose(f).table] for f in source.maps]


def is_ideal_basis(Z: FiniteSpace, basis: Sequence[int]) -> bool:
    """Every open is a union of basis members and finite unions of members are
    dominated by a member."""
    basis = list(basis)
    for u in Z.opens:
        acc = 0
        for b in basis:
            if b & ~u == 0:
                acc |= b
        if acc != u:
            return False
    if not basis:
        return False
    return all(any((a | b) & ~c == 0 for c in basis) for a in basis for b in basis)


def is_filtered_closed_basis(Z: FiniteSpace, basis: Sequence[int]) -> bool:
    comp = [Z.full & ~c for c in basis]
    return all(Z.is_closed(c) for c in basis) and is_ideal_basis(Z, comp)


__all__ = [
    "FunctionCarrier", "function_carrier", "FunctionConvergence", "bracket", "closed_bracket",
    "alpha_function_topology", "natural_convergence", "preimage_lift", "preimage_lift_direct",
    "preimage_lift_closed", "dual_convergence", "lower_conjugate", "is_ideal_basis",
    "is_filtered_closed_basis",
]
