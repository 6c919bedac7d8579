"""Convergences on the hyperspace C(X,$) of opens of a finite space."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from ._bits import members, popcount
from .convergence import (Convergence, _and, _dp_over_kernels, _or, adherence,
                          min_witness_sizes, topology_from_subbase)
from .errors import DegenerateAlpha, NotACover
from .hyperfamily import AlphaCollection, ideal_ops, open_lattice
from .space import FiniteSpace

LITERAL_SCOTT_LIMIT = 8   # use the superset-union form when the space has at most this many opens
DIRECTED_EXHAUSTIVE = 20000
DIRECTED_SAMPLES = 4000


class HyperConvergence(Convergence):
    """A convergence whose carrier is the opens of ``space`` (same index order)."""

    space: FiniteSpace

    @classmethod
    def wrap(cls, space: FiniteSpace, conv: Convergence) -> "HyperConvergence":
        if conv.carrier != space.opens:
            raise ValueError("carrier is not the opens of the space")
        out = cls.__new__(cls)
        out.__dict__.update(conv.__dict__)
        out.space = space
        return out


def _downset_table(space: FiniteSpace, agg: Sequence[int]) -> list[int]:
    """For each open in ``agg``, the hyperset of opens below it."""
    lat = open_lattice(space)
    return [lat.below[lat.index[u]] for u in agg]


def scott_convergence(X: FiniteSpace, literal: bool | None = None) -> HyperConvergence:
    """Y ∈ lim(K) iff Y ⊆ ⋃_{T ⊇ K} int(⋂T).

    With ``literal`` the union over all supersets T is formed; otherwise the
    largest term, int(⋂K), is used.  The two agree (a law checks it).
    """
    lat = open_lattice(X)
    m = lat.m
    if literal is None:
        literal = m <= LITERAL_SCOTT_LIMIT
    inter = _dp_over_kernels(m, X.opens, _and, X.full)
    if literal:
        covered = [0] * (1 << m)
        for k in range(1, 1 << m):
            acc = 0
            free = lat.full & ~k
            extra = free
            while True:
                acc |= X.interior(inter[k | extra])
                if extra == 0:
                    break
                extra = (extra - 1) & free
            covered[k] = acc
    else:
        covered = [X.interior(v) for v in inter]
    table = _downset_table(X, covered)
    return HyperConvergence.wrap(X, Convergence(X.opens, table=table, name="scott", _pseudo=None))


def hyper_topology(alpha: AlphaCollection) -> HyperConvergence:
    """The topology on C(X,$) with subbase α."""
    if not alpha.nondegenerate:
        raise DegenerateAlpha(f"collection {alpha.label!r} has no nonempty family")
    conv = topology_from_subbase(alpha.space.opens, alpha.hypersets, f"{alpha.label}(X,$)")
    return HyperConvergence.wrap(alpha.space, conv)


def upclose_table(space: FiniteSpace) -> list[int]:
    lat = open_lattice(space)
    return _dp_over_kernels(lat.m, lat.above, _or, 0)


# solidity ------------------------------------------------------------------------

@dataclass
class SolidityReport:
    lower: bool
    upper_regular: bool
    compact: bool
    directed_sups: bool
    pseudotopology: bool
    solid: bool
    directed_exhaustive: bool = True
    witness: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in
                ("lower", "upper_regular", "compact", "directed_sups", "pseudotopology", "solid")}


def _comparable_pairs(m: int):
    """All (K1, K2) with ∅ ≠ K2 ⊆ K1."""
    full = (1 << m) - 1
    for k1 in range(1, full + 1):
        sub = k1
        while sub:
            yield k1, sub
            sub = (sub - 1) & k1


def lower_witness(tau: HyperConvergence) -> dict | None:
    """A kernel converging to an open but not to some smaller open, if any."""
    space = tau.space
    lat = open_lattice(space)
    t = tau.table()
    for i in range(lat.m):
        has = ((t >> np.uint32(i)) & 1).astype(bool)
        has[0] = False
        bad = has & ((t & np.uint32(lat.below[i])) != lat.below[i])
        if bad.any():
            return {"kernel": int(np.flatnonzero(bad)[0]), "open": space.opens[i]}
    return None


def upper_regular_witness(tau: HyperConvergence) -> dict | None:
    """A kernel whose limits are not kept by its upward closure, if any."""
    t = tau.table()
    up = np.asarray(upclose_table(tau.space), dtype=np.int64)
    bad = (t[1:] & ~t[up[1:]]) != 0
    if bad.any():
        return {"kernel": int(np.argmax(bad)) + 1}
    return None


def solidity_check(tau: HyperConvergence, seed: int = 0) -> SolidityReport:
    space = tau.space
    lat = open_lattice(space)
    m = lat.m
    t = tau.table()
    witness = {}

    low = lower_witness(tau)
    lower = low is None
    if low is not None:
        witness["lower"] = low
    upw = upper_regular_witness(tau)
    upper_regular = upw is None
    if upw is not None:
        witness["upper_regular"] = upw

    compact = all(tau.lim(1 << i) for i in range(m))

    # two-element directed systems: comparable kernels and comparable limits
    directed = True
    exhaustive = 3 ** m <= DIRECTED_EXHAUSTIVE
    if exhaustive:
        pairs = _comparable_pairs(m)
    else:
        rng = random.Random(seed)

        def sampled():
            for _ in range(DIRECTED_SAMPLES):
                k1 = rng.getrandbits(m) or 1
                k2 = k1 & rng.getrandbits(m) or (k1 & -k1)
                yield k1, k2
        pairs = sampled()
    for k1, k2 in pairs:
        l1, l2 = int(t[k1]), int(t[k2])
        sup = int(t[k1 & k2])
        for b1 in members(l1):
            u1 = space.opens[b1]
            for b2 in members(l2 & lat.comparable[b1]):
                u = u1 | space.opens[b2]
                if not sup >> lat.index[u] & 1:
                    directed = False
                    witness["directed_sups"] = {"kernels": [k1, k2], "opens": [u1, space.opens[b2]]}
                    break
            if not directed:
                break
        if not directed:
            break

    pseudo = tau.is_pseudotopology()
    solid = lower and upper_regular and compact and directed and pseudo
    return SolidityReport(lower, upper_regular, compact, directed, pseudo, solid, exhaustive, witness)


# covers ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CoverPredicates:
    is_cover: bool
    is_alpha_cover: bool | None


def _alpha_at(alpha: AlphaCollection, u: int) -> list[int]:
    """Hypersets of the families of α containing U."""
    idx = alpha.space.open_index[u]
    return [h for h in alpha.hypersets if h >> idx & 1]


def is_alpha_cover(P: Iterable[int], alpha: AlphaCollection, U: int | None = None) -> bool:
    """P meets every family of α that contains U (U defaults to the whole space).

    For U = X these are exactly the nonempty families, since isotone families
    that are nonempty contain X.
    """
    space = alpha.space
    if U is None:
        U = space.full
    h = open_lattice(space).hyperset(P)
    return all(h & a for a in _alpha_at(alpha, U))


def cover_predicates(P: Iterable[int], alpha: AlphaCollection | None, U: int) -> CoverPredicates:
    P = list(P)
    union = 0
    for p in P:
        union |= p
    return CoverPredicates(U & ~union == 0,
                           None if alpha is None else is_alpha_cover(P, alpha, U))


@dataclass(frozen=True)
class CoverNumbers:
    lindelof: int
    arens: int


def _alpha_cover_table(alpha: AlphaCollection, U: int) -> list[bool]:
    fams = _alpha_at(alpha, U)
    m = open_lattice(alpha.space).m
    return [all(p & a for a in fams) for p in range(1 << m)]


def _max_min(hit: Sequence[bool]) -> int:
    g = min_witness_sizes(hit)
    return int(max((g[p] for p in range(len(hit)) if hit[p]), default=0))


def lindelof_number(alpha: AlphaCollection, U: int) -> int:
    """Largest, over α-covers P of U, least size of an α-subcover of P."""
    return _max_min(_alpha_cover_table(alpha, U))


def arens_number(alpha: AlphaCollection, U: int) -> int:
    """Least |γ| with γ among the families containing U such that each of
    those families contains a member of γ: the ⊆-minimal ones are forced and suffice."""
    fams = set(_alpha_at(alpha, U))
    return sum(1 for a in fams if not any(b != a and b & ~a == 0 for b in fams))


def arens_number_bruteforce(alpha: AlphaCollection, U: int) -> int:
    fams = sorted(set(_alpha_at(alpha, U)))
    for size in range(len(fams) + 1):
        for gamma in itertools.combinations(fams, size):
            if all(any(g & ~a == 0 for g in gamma) for a in fams):
                return size
    return len(fams)


def cover_numbers(alpha: AlphaCollection, U: int) -> CoverNumbers:
    return CoverNumbers(lindelof_number(alpha, U), arens_number(alpha, U))


def adherence_cover_table(alpha: AlphaCollection, U: int) -> list[bool]:
    """For each hyperset P, whether U lies in an adherence that characterizes α-covers.

    ∩-closed α: adherence of P in α(X,$).  Otherwise α must be the point
    collection s, whose covers are the ordinary covers: adherence of the ideal
    base P^∪ in the Scott convergence.
    """
    space = alpha.space
    lat = open_lattice(space)
    idx = space.open_index[U]
    if alpha.is_intersection_closed():
        tau = hyper_topology(alpha)
        out = [bool(adherence(tau, p) >> idx & 1) for p in range(1 << lat.m)]
        # adherence of the empty hyperset is empty, while the empty hyperset
        # vacuously covers U when no family of α contains U
        out[0] = not any(h >> idx & 1 for h in alpha.hypersets)
        return out
    if alpha.label != "s":
        raise ValueError("no adherence characterization for this collection")
    # for s the empty hyperset covers U exactly when U is empty, that is when
    # the coarsest filter (kernel all of C(X,$)) Scott-converges to U
    scott = scott_convergence(space)
    out = [bool(scott.lim(lat.full) >> idx & 1)]
    for p in range(1, 1 << lat.m):
        closure = ideal_ops(lat.opens_of(p)).ideal_closure
        out.append(bool(adherence(scott, lat.hyperset(closure)) >> idx & 1))
    return out


def lindelof_via_adherence(alpha: AlphaCollection, U: int) -> int:
    return _max_min(adherence_cover_table(alpha, U))


# selection -------------------------------------------------------------------------

@dataclass(frozen=True)
class Selection:
    choice: tuple | None
    bound: int | None = None
    reason: str = ""


def selection(alpha: AlphaCollection, covers: Sequence[Iterable[int]], mode: str,
              U: int | None = None) -> Selection:
    """Hurewicz: finite 𝒱ᵢ ⊆ Pᵢ whose union is an α-cover, minimizing max |𝒱ᵢ|.
    Rothberger: one member of each Pᵢ forming an α-cover."""
    space = alpha.space
    if U is None:
        U = space.full
    covers = [sorted(set(c)) for c in covers]
    for i, c in enumerate(covers):
        if not is_alpha_cover(c, alpha, U):
            raise NotACover(i)
    if mode not in ("hurewicz", "rothberger"):
        raise ValueError(f"unknown selection mode {mode!r}")
    if not covers:
        if is_alpha_cover([], alpha, U):
            return Selection((), 0, "empty sequence; alpha is degenerate at U")
        return Selection(None, None, "empty cover sequence selects nothing")
    if mode == "rothberger":
        for pick in itertools.product(*covers):
            if is_alpha_cover(pick, alpha, U):
                return Selection(tuple(pick), 1)
        return Selection(None, None, "no single-member selection is an alpha-cover")
    top = max(len(c) for c in covers)
    for bound in range(top + 1):
        options = [[sub for size in range(min(bound, len(c)) + 1)
                    for sub in itertools.combinations(c, size)] for c in covers]
        for pick in itertools.product(*options):
            chosen = [u for part in pick for u in part]
            if is_alpha_cover(chosen, alpha, U):
                return Selection(tuple(pick), bound)
    return Selection(None, None, "no finite selection is an alpha-cover")


# closed-set view ---------------------------------------------------------------------

class ClosedView(Convergence):
    """A convergence on the closed sets of ``space``; carrier index i is the
    complement of ``space.opens[i]``."""

    space: FiniteSpace


def upper_kuratowski_view(X: FiniteSpace, literal: bool | None = None) -> ClosedView:
    """C ∈ lim(K) iff adh_X|γ| ⊆ C where |γ| = {⋃𝒢 : 𝒢 ∈ γ}.

    adh_X of the base |γ| is the intersection of closures of its members; for
    the principal filter of K those members are unions of supersets of K.
    """
    lat = open_lattice(X)
    m = lat.m
    closed = tuple(X.full & ~u for u in X.opens)
    if literal is None:
        literal = m <= LITERAL_SCOTT_LIMIT
    union = _dp_over_kernels(m, closed, _or, 0)
    if literal:
        adh = [X.full] * (1 << m)
        for k in range(1, 1 << m):
            acc = X.full
            free = lat.full & ~k
            extra = free
            while True:
                acc &= X.closure(union[k | extra])
                if extra == 0:
                    break
                extra = (extra - 1) & free
            adh[k] = acc
    else:
        adh = [X.closure(u) for u in union]
    table = []
    for a in adh:
        lim = 0
        for i, c in enumerate(closed):
            if a & ~c == 0:
                lim |= 1 << i
        table.append(lim)
    conv = Convergence(closed, table=table, name="upper-kuratowski")
    out = ClosedView.__new__(ClosedView)
    out.__dict__.update(conv.__dict__)
    out.space = X
    return out


def complement_view(tau: HyperConvergence) -> ClosedView:
    """cτ: the image of τ under complementation, on the closed sets."""
    X = tau.space
    closed = tuple(X.full & ~u for u in X.opens)
    conv = Convergence(closed, table=tau.table().copy(), name=f"c{tau.name}", validate=False,
                       _pseudo=tau._pseudo)
    out = ClosedView.__new__(ClosedView)
    out.__dict__.update(conv.__dict__)
    out.space = X
    return out


__all__ = [
    "HyperConvergence", "scott_convergence", "hyper_topology", "upclose_table",
    "SolidityReport", "solidity_check", "lower_witness", "upper_regular_witness", "CoverPredicates", "cover_predicates",
    "is_alpha_cover", "CoverNumbers", "cover_numbers", "lindelof_number", "arens_number",
    "arens_number_bruteforce", "adherence_cover_table", "lindelof_via_adherence",
    "Selection", "selection", "ClosedView", "upper_kuratowski_view", "complement_view",
]
