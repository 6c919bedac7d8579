"""Exhaustive enumeration of labeled finite topologies.

Topologies on n labeled points correspond to preorders, so we walk the
preorders by breadth-first search: start from the identity relation, add one
pair at a time and close transitively.  T0 spaces are the partial orders.
"""
from __future__ import annotations

import itertools
from typing import Iterator

from ..errors import SizeTooLarge
from ..space import FiniteSpace, transitive_closure, upsets_of

MAX_POINTS = 5


def _check_size(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"point count must be a positive integer, got {n!r}")
    if n > MAX_POINTS:
        raise SizeTooLarge(f"enumeration is capped at {MAX_POINTS} points, got {n}")


def preorders(n: int) -> list[tuple[int, ...]]:
    """All preorders on n points as tuples of 'above' rows, in a fixed order."""
    _check_size(n)
    start = tuple(1 << x for x in range(n))
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for rows in frontier:
            for a in range(n):
                for b in range(n):
                    if rows[a] >> b & 1:
                        continue
                    grown = list(rows)
                    grown[a] |= 1 << b
                    closed = tuple(transitive_closure(grown))
                    if closed not in seen:
                        seen.add(closed)
                        nxt.append(closed)
        frontier = nxt
    return sorted(seen)


def is_antisymmetric(rows) -> bool:
    return all(not (rows[a] >> b & 1 and rows[b] >> a & 1)
               for a in range(len(rows)) for b in range(a + 1, len(rows)))


def enumerate_spaces(n: int, t0_only: bool = False) -> Iterator[FiniteSpace]:
    """Every labeled topology on n points (only the T0 ones if asked)."""
    for k, rows in enumerate(preorders(n)):
        if t0_only and not is_antisymmetric(rows):
            continue
        yield FiniteSpace(n, upsets_of(rows), name=f"{'p' if t0_only else 't'}{n}.{k}")


def spaces_up_to(max_points: int, t0_only: bool = True) -> list[FiniteSpace]:
    out = []
    for n in range(1, max_points + 1):
        out.extend(enumerate_spaces(n, t0_only))
    return out


# independent oracles -------------------------------------------------------------

def count_preorders_bruteforce(n: int, t0_only: bool = False) -> int:
    """Filter all reflexive relations for transitivity (fine for n ≤ 4)."""
    _check_size(n)
    pairs = [(a, b) for a in range(n) for b in range(n) if a != b]
    count = 0
    for bits in range(1 << len(pairs)):
        rel = {(a, a) for a in range(n)}
        rel.update(p for i, p in enumerate(pairs) if bits >> i & 1)
        if any((a, d) not in rel for (a, b) in rel for (c, d) in rel if b == c):
            continue
        if t0_only and any((b, a) in rel for (a, b) in rel if a != b):
            continue
        count += 1
    return count


def count_topologies_bruteforce(n: int) -> int:
    """Filter all families of subsets for the topology axioms (n ≤ 3)."""
    full = (1 << n) - 1
    subsets = [s for s in range(1 << n) if s not in (0, full)]
    count = 0
    for k in range(len(subsets) + 1):
        for chosen in itertools.combinations(subsets, k):
            fam = set(chosen) | {0, full}
            if all(a | b in fam and a & b in fam for a in fam for b in fam):
                count += 1
    return count


__all__ = [
    "MAX_POINTS", "preorders", "is_antisymmetric", "enumerate_spaces", "spaces_up_to",
    "count_preorders_bruteforce", "count_topologies_bruteforce",
]
