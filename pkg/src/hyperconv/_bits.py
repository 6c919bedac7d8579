"""Small helpers for sets encoded as int bitmasks."""
from __future__ import annotations

from typing import Iterable, Iterator


def mask_of(items: Iterable[int]) -> int:
    m = 0
    for i in items:
        m |= 1 << i
    return m


def members(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def as_list(mask: int) -> list[int]:
    return list(members(mask))


def popcount(mask: int) -> int:
    return mask.bit_count()


def lowbit_index(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def supermasks(mask: int, full: int) -> Iterator[int]:
    free = full & ~mask
    for extra in submasks(free):
        yield mask | extra


def full_mask(n: int) -> int:
    return (1 << n) - 1
