"""Convergences on finite carriers.

Every filter on a finite set is principal, so a convergence is a map from
nonempty kernels (bitmasks over carrier indices) to limit sets.  Small carriers
are tabulated in full; larger ones are evaluated on demand and memoized.

Throughout, ``a ≤ b`` means a is coarser than b: every limit under b is also a
limit under a.
"""
from __future__ import annotations

import random
from typing import Callable, Sequence

import numpy as np

from ._bits import full_mask, members, popcount
from .errors import ArityMismatch, NotCentered, NotMonotone, SizeTooLarge

TABLE_LIMIT = 16      # carriers up to this size get a full lim table
RULE_TABLE_LIMIT = 10  # rule-backed convergences are tabulated only up to this size
EXHAUSTIVE_LIMIT = 20  # largest carrier for which all kernels may be enumerated
MONOTONE_SAMPLES = 256


def _dp_over_kernels(size: int, single: Sequence[int], op, start: int) -> list[int]:
    """agg[K] = op over k in K of single[k]; agg[0] = start."""
    agg = [start] * (1 << size)
    for k in range(1, 1 << size):
        low = k & -k
        agg[k] = op(agg[k ^ low], single[low.bit_length() - 1])
    return agg


def _and(a, b):
    return a & b


def _or(a, b):
    return a | b


class Convergence:
    """A validated convergence on ``carrier``.

    Build it from a full ``table`` (sequence indexed by kernel, entry 0 ignored),
    from a ``rule`` (callable kernel -> limit mask), or with
    :meth:`from_vicinities` for pseudotopologies.
    """

    def __init__(self, carrier: Sequence, rule: Callable[[int], int] | None = None, *,
                 table=None, name: str = "", validate: bool = True,
                 _pseudo: bool | None = None, _vicinities=None):
        self.carrier = tuple(carrier)
        self.size = len(self.carrier)
        self.full = full_mask(self.size)
        self.name = name
        self._rule = rule
        self._memo: dict[int, int] = {}
        self._pseudo = _pseudo
        self._vicinities = tuple(_vicinities) if _vicinities is not None else None
        self._table = None
        if table is not None:
            if len(table) != 1 << self.size:
                raise ValueError("lim table must have one entry per kernel")
            self._table = np.asarray(table, dtype=np.uint32 if self.size <= 32 else object)
            self._table[0] = self.full
        elif rule is not None and self.size <= RULE_TABLE_LIMIT:
            tab = [self.full] + [rule(k) for k in range(1, 1 << self.size)]
            self._table = np.asarray(tab, dtype=np.uint32)
        elif rule is None:
            raise ValueError("need a rule or a table")
        if validate:
            self.validate()

    # construction helpers --------------------------------------------------

    @classmethod
    def from_vicinities(cls, carrier: Sequence, vicinities: Sequence[int], name: str = "") -> "Convergence":
        """Pseudotopology with x ∈ lim(K) iff K ⊆ vicinities[x]."""
        size = len(carrier)
        vic = tuple(vicinities)
        single = [0] * size
        for x, v in enumerate(vic):
            for k in members(v):
                single[k] |= 1 << x
        for x in range(size):
            if not vic[x] >> x & 1:
                raise NotCentered(carrier[x])
        if size <= TABLE_LIMIT:
            table = _dp_over_kernels(size, single, _and, full_mask(size))
            return cls(carrier, table=table, name=name, validate=False,
                       _pseudo=True, _vicinities=vic)

        def rule(kernel, single=single, full=full_mask(size)):
            m = full
            for k in members(kernel):
                m &= single[k]
            return m
        return cls(carrier, rule, name=name, validate=False, _pseudo=True, _vicinities=vic)

    # evaluation ---------------------------------------------------------------

    @property
    def tabulated(self) -> bool:
        return self._table is not None

    def lim(self, kernel: int) -> int:
        if kernel == 0:
            raise ValueError("kernels must be nonempty")
        if self._table is not None:
            return int(self._table[kernel])
        got = self._memo.get(kernel)
        if got is None:
            got = self._rule(kernel)
            self._memo[kernel] = got
        return got

    def lim_of(self, indices) -> int:
        m = 0
        for i in indices:
            m |= 1 << i
        return self.lim(m)

    def table(self) -> np.ndarray:
        if self._table is None:
            raise SizeTooLarge(f"carrier of size {self.size} is not tabulated")
        return self._table

    def singleton_limits(self) -> tuple[int, ...]:
        return tuple(self.lim(1 << k) for k in range(self.size))

    def vicinity(self, x: int) -> int:
        """{k : x ∈ lim{k}}: the union of all kernels converging to x."""
        if self._vicinities is not None:
            return self._vicinities[x]
        return sum(1 << k for k in range(self.size) if self.lim(1 << k) >> x & 1)

    def vicinities(self) -> tuple[int, ...]:
        return tuple(self.vicinity(x) for x in range(self.size))

    # validation -------------------------------------------------------------

    def validate(self, samples: int = MONOTONE_SAMPLES, seed: int = 0) -> None:
        for x in range(self.size):
            if not self.lim(1 << x) >> x & 1:
                raise NotCentered(self.carrier[x])
        if self._table is not None:
            t = self._table
            ks = np.arange(1 << self.size, dtype=np.int64)
            for b in range(self.size):
                bit = 1 << b
                big = ks[(ks & bit) != 0]
                small = big ^ bit
                keep = small != 0
                big, small = big[keep], small[keep]
                bad = (t[big] & ~t[small]) != 0
                if bad.any():
                    i = int(np.argmax(bad))
                    raise NotMonotone(int(small[i]), int(big[i]))
            return
        rng = random.Random(seed)
        for _ in range(samples):
            k = rng.getrandbits(self.size) or 1
            lk = self.lim(k)
            for b in members(k):
                smaller = k ^ (1 << b)
                if smaller and lk & ~self.lim(smaller):
                    raise NotMonotone(smaller, k)

    def kernels(self):
        if self.size > EXHAUSTIVE_LIMIT:
            raise SizeTooLarge(f"cannot enumerate kernels of a {self.size}-element carrier")
        return range(1, 1 << self.size)

    # classification -------------------------------------------------------------

    def pointwise_table(self) -> np.ndarray:
        single = self.singleton_limits()
        return np.asarray(_dp_over_kernels(self.size, single, _and, self.full), dtype=np.uint32)

    def is_pseudotopology(self) -> bool:
        """lim(K) = ⋂_{k∈K} lim{k} for every kernel."""
        if self._pseudo is None:
            if self._table is not None:
                self._pseudo = bool((self.pointwise_table()[1:] == self._table[1:]).all())
            else:
                # exact for monotone convergences: the largest kernel allowed by the
                # singleton limits at x must itself converge to x
                self._pseudo = all(self.lim(self.vicinity(x)) >> x & 1 for x in range(self.size))
        return self._pseudo

    def literal_vicinities(self) -> tuple[int, ...]:
        """V(x) = ⋃{K : x ∈ lim K}, by enumerating kernels."""
        t = self.table()
        ks = np.arange(1 << self.size, dtype=np.int64)
        out = []
        for x in range(self.size):
            sel = ((t >> np.uint32(x)) & 1).astype(bool)
            sel[0] = False
            out.append(int(np.bitwise_or.reduce(ks[sel])) if sel.any() else 0)
        return tuple(out)

    def is_pretopology(self) -> bool:
        """x ∈ lim(K) iff K is inside the vicinity kernel of x."""
        if self._table is None:
            return self.is_pseudotopology()
        vic = self.literal_vicinities()
        single = [0] * self.size
        for x, v in enumerate(vic):
            for k in members(v):
                single[k] |= 1 << x
        pre = np.asarray(_dp_over_kernels(self.size, single, _and, self.full), dtype=np.uint32)
        return bool((pre[1:] == self._table[1:]).all())

    def is_topology(self) -> bool:
        return self.is_pretopology() and equal(self, reflect(self, "T"))

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<Convergence{label} on {self.size} elements>"


# ---------------------------------------------------------------------------

def make_convergence(carrier: Sequence, lim, name: str = "") -> Convergence:
    """Validated convergence from a table (mapping or sequence over kernels) or a rule."""
    if callable(lim):
        return Convergence(carrier, lim, name=name)
    size = len(carrier)
    if isinstance(lim, dict):
        missing = [k for k in range(1, 1 << size) if k not in lim]
        if missing:
            raise ValueError(f"lim table is missing kernel {missing[0]}")
        table = [full_mask(size)] + [lim[k] for k in range(1, 1 << size)]
    else:
        table = list(lim)
    return Convergence(carrier, table=table, name=name)


def chaotic(carrier: Sequence) -> Convergence:
    size = len(carrier)
    return Convergence.from_vicinities(carrier, [full_mask(size)] * size, "chaotic")


def discrete_convergence(carrier: Sequence) -> Convergence:
    return Convergence.from_vicinities(carrier, [1 << x for x in range(len(carrier))], "discrete")


def topology_from_subbase(carrier: Sequence, subbase: Sequence[int], name: str = "") -> Convergence:
    """Topology generated by a family of subsets (bitmasks) of the carrier."""
    size = len(carrier)
    nbhd = [full_mask(size)] * size
    for s in subbase:
        for x in members(s):
            nbhd[x] &= s
    return Convergence.from_vicinities(carrier, nbhd, name)


def topology_from_opens(carrier: Sequence, opens: Sequence[int], name: str = "") -> Convergence:
    return topology_from_subbase(carrier, opens, name)


def classify(conv: Convergence) -> dict:
    return {"pseudotopology": conv.is_pseudotopology(),
            "pretopology": conv.is_pretopology(),
            "topology": conv.is_topology()}


def neighbourhood_closure(vicinities: Sequence[int]) -> list[int]:
    """Transitive closure of the relation x -> V(x), by iteration to a fixed point."""
    nb = list(vicinities)
    changed = True
    while changed:
        changed = False
        for x in range(len(nb)):
            acc = nb[x]
            for y in members(nb[x]):
                acc |= nb[y]
            if acc != nb[x]:
                nb[x] = acc
                changed = True
    return nb


def reflect(conv: Convergence, level: str) -> Convergence:
    """Finest pretopology ("P") or topology ("T") coarser than ``conv``.

    O is open in T(conv) iff it contains V(x) for each x ∈ O, so the smallest
    open around x is the closure of V under iteration.
    """
    vic = conv.literal_vicinities() if conv.tabulated else conv.vicinities()
    if level == "P":
        return Convergence.from_vicinities(conv.carrier, vic, f"P({conv.name})")
    if level == "T":
        return Convergence.from_vicinities(conv.carrier, neighbourhood_closure(vic), f"T({conv.name})")
    raise ValueError(f"unknown reflection level {level!r}")


def open_sets(conv: Convergence) -> list[int]:
    """Opens of T(conv): subsets O such that any kernel converging into O lies in O."""
    vic = conv.vicinities()
    out = []
    for o in range(1 << conv.size):
        if all(vic[x] & ~o == 0 for x in members(o)):
            out.append(o)
    return out


# order ---------------------------------------------------------------------------

def first_violation(a: Convergence, b: Convergence) -> int | None:
    """A kernel K with lim_b(K) ⊄ lim_a(K), or None when a ≤ b."""
    if a.size != b.size:
        raise ArityMismatch("convergences live on carriers of different sizes")
    if a.tabulated and b.tabulated:
        bad = (b.table()[1:] & ~a.table()[1:]) != 0
        return int(np.argmax(bad)) + 1 if bad.any() else None
    if a.is_pseudotopology():
        # lim_a(K) = ⋂ lim_a{k} and lim_b(K) ⊆ lim_b{k}, so singletons decide
        for k in range(a.size):
            if b.lim(1 << k) & ~a.lim(1 << k):
                return 1 << k
        return None
    for k in a.kernels():
        if b.lim(k) & ~a.lim(k):
            return k
    return None


def coarser(a: Convergence, b: Convergence) -> bool:
    """a ≤ b."""
    return first_violation(a, b) is None


def equal(a: Convergence, b: Convergence) -> bool:
    if a.size != b.size:
        return False
    if a.tabulated and b.tabulated:
        return bool((a.table()[1:] == b.table()[1:]).all())
    pa, pb = a.is_pseudotopology(), b.is_pseudotopology()
    if pa != pb:
        return False
    if pa:
        return a.singleton_limits() == b.singleton_limits()
    return coarser(a, b) and coarser(b, a)


def difference(a: Convergence, b: Convergence) -> int | None:
    """Some kernel on which the two differ, or None."""
    k = first_violation(a, b)
    return k if k is not None else first_violation(b, a)


# initial convergences ---------------------------------------------------------------

def initial(maps: Sequence[Sequence[int]], targets: Sequence[Convergence], carrier: Sequence,
            name: str = "") -> Convergence:
    """Coarsest convergence on ``carrier`` making each map continuous into its target.

    ``maps[i][x]`` is the index in ``targets[i]``'s carrier of the image of x.
    """
    if len(maps) != len(targets):
        raise ArityMismatch(f"{len(maps)} maps but {len(targets)} targets")
    size = len(carrier)
    for mp, tgt in zip(maps, targets):
        if len(mp) != size:
            raise ArityMismatch("map is not total on the carrier")
        if any(not 0 <= v < tgt.size for v in mp):
            raise ArityMismatch("map value outside the target carrier")
    maps = [tuple(mp) for mp in maps]

    def rule(kernel):
        out = full_mask(size)
        for mp, tgt in zip(maps, targets):
            img = 0
            for k in members(kernel):
                img |= 1 << mp[k]
            lim_t = tgt.lim(img)
            keep = 0
            for x in members(out):
                if lim_t >> mp[x] & 1:
                    keep |= 1 << x
            out = keep
            if not out:
                break
        return out

    return Convergence(carrier, rule, name=name)


def is_continuous_map(source: Convergence, target: Convergence, mapping: Sequence[int]) -> bool:
    """x ∈ lim_source(K) implies mapping(x) ∈ lim_target(mapping(K))."""
    def image(kernel):
        m = 0
        for k in members(kernel):
            m |= 1 << mapping[k]
        return m
    if target.is_pseudotopology():
        # lim_source(K) ⊆ lim_source{k}, and the target limit of an image kernel is
        # the intersection of the target limits of its points
        for k in range(source.size):
            lk = source.lim(1 << k)
            lt = target.lim(1 << mapping[k])
            for x in members(lk):
                if not lt >> mapping[x] & 1:
                    return False
        return True
    for kernel in source.kernels():
        lt = target.lim(image(kernel))
        for x in members(source.lim(kernel)):
            if not lt >> mapping[x] & 1:
                return False
    return True


# adherence and tightness --------------------------------------------------------------

def adherence(conv: Convergence, subset: int) -> int:
    """⋃{lim K : K meets subset}, enumerating the kernels."""
    if subset == 0:
        return 0
    if conv.tabulated:
        t = conv.table()
        ks = np.arange(1 << conv.size, dtype=np.int64)
        sel = (ks & subset) != 0
        return int(np.bitwise_or.reduce(t[sel]))
    acc = 0
    for k in conv.kernels():
        if k & subset:
            acc |= conv.lim(k)
    return acc


def pointwise_adherence(conv: Convergence, subset: int) -> int:
    acc = 0
    for k in members(subset):
        acc |= conv.lim(1 << k)
    return acc


def adherence_table(conv: Convergence) -> list[int]:
    """adh(S) for every S.  The union over kernels meeting S splits as a union
    over k ∈ S of the union over kernels containing k, which is exact."""
    if conv.tabulated:
        t = conv.table()
        ks = np.arange(1 << conv.size, dtype=np.int64)
        reach = [int(np.bitwise_or.reduce(t[(ks >> k) & 1 == 1])) for k in range(conv.size)]
    else:
        reach = [adherence(conv, 1 << k) for k in range(conv.size)]
    return _dp_over_kernels(conv.size, reach, _or, 0)


def min_witness_sizes(hit: Sequence[bool]) -> list[float]:
    """g[S] = min |S′| over S′ ⊆ S with hit[S′] (inf if none); ``hit`` must be
    indexed by all subsets of a ground set."""
    inf = float("inf")
    g = [inf] * len(hit)
    for s in range(len(hit)):
        best = popcount(s) if hit[s] else inf
        rest = s
        while rest:
            low = rest & -rest
            rest ^= low
            v = g[s ^ low]
            if v < best:
                best = v
        g[s] = best
    return g


def tightness_at(conv: Convergence, x: int) -> int:
    """Least m such that whenever x ∈ adh S some S′ ⊆ S with |S′| ≤ m has x ∈ adh S′."""
    if conv.size > TABLE_LIMIT:
        raise SizeTooLarge("tightness is computed for tabulated carriers only")
    adh = adherence_table(conv)
    hit = [bool(a >> x & 1) for a in adh]
    g = min_witness_sizes(hit)
    return int(max((g[s] for s in range(len(hit)) if hit[s]), default=0))


__all__ = [
    "Convergence", "make_convergence", "chaotic", "discrete_convergence",
    "topology_from_subbase", "topology_from_opens", "classify", "reflect",
    "neighbourhood_closure", "open_sets", "coarser", "equal", "first_violation",
    "difference", "initial", "is_continuous_map", "adherence", "pointwise_adherence",
    "adherence_table", "min_witness_sizes", "tightness_at", "TABLE_LIMIT", "RULE_TABLE_LIMIT",
]
