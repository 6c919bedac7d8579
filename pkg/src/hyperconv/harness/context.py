"""Per-space caches and JSON helpers shared by the law checkers."""
from __future__ import annotations

import functools
import json
import random
import zlib

from .._bits import as_list, mask_of
from ..hyperfamily import AlphaCollection, HyperFilter, open_lattice, principal_family, standard_alphas
from ..hyperspace import HyperConvergence, hyper_topology, scott_convergence
from ..space import FiniteSpace, build_space, chain, discrete, disjoint_union, point, sierpinski

TARGETS = ("sierpinski", "discrete2", "chain3")


@functools.lru_cache(maxsize=4096)
def _space_cached(text: str) -> FiniteSpace:
    return build_space(json.loads(text))


def space_of(data) -> FiniteSpace:
    return _space_cached(json.dumps(data, sort_keys=True))


def space_json(X: FiniteSpace) -> dict:
    out = X.to_json()
    if X.name:
        out["name"] = X.name
    return out


def target_space(name: str) -> FiniteSpace:
    return {"sierpinski": sierpinski, "discrete2": lambda: discrete(2),
            "chain3": lambda: chain(3)}[name]()


def rng_for(*parts) -> random.Random:
    """A generator seeded from a stable digest of ``parts`` (never Python's hash)."""
    text = json.dumps(parts, sort_keys=True, default=str)
    return random.Random(zlib.crc32(text.encode()))


# hyperspace objects ------------------------------------------------------------------

@functools.lru_cache(maxsize=512)
def scott(X: FiniteSpace) -> HyperConvergence:
    return scott_convergence(X)


@functools.lru_cache(maxsize=512)
def alphas(X: FiniteSpace) -> dict:
    out = dict(standard_alphas(X))
    out["s_cap"] = out["s"].intersection_closure()
    out["pt0"] = AlphaCollection(X, [principal_family(X, 1)], "pt0")
    return out


@functools.lru_cache(maxsize=1024)
def hyper_top(X: FiniteSpace, label: str) -> HyperConvergence:
    return hyper_topology(alphas(X)[label])


def tau_of(X: FiniteSpace, name: str) -> HyperConvergence:
    """'scott' or the topology of a named collection."""
    return scott(X) if name == "scott" else hyper_top(X, name)


def regular_kernels(X: FiniteSpace) -> list[int]:
    """Kernels of all 𝒪^♮-regular filters: nonempty up-closed hypersets."""
    lat = open_lattice(X)
    out = []
    for ac in lat.antichains():
        if ac:
            out.append(lat.upclose(ac))
    return sorted(out)


def kernel_json(X: FiniteSpace, hmask: int) -> list:
    return [as_list(u) for u in open_lattice(X).opens_of(hmask)]


def kernel_of(X: FiniteSpace, data) -> int:
    return open_lattice(X).hyperset(mask_of(pts) for pts in data)


def filter_of(X: FiniteSpace, data) -> HyperFilter:
    return HyperFilter(X, kernel_of(X, data))


# curated instance spaces -----------------------------------------------------------------

def curated_transfer_spaces() -> list[FiniteSpace]:
    sp = disjoint_union(sierpinski(), point())
    sp.name = "sierpinski+point"
    return [discrete(2), discrete(3), sierpinski(), sp, chain(3)]


__all__ = [
    "TARGETS", "space_of", "space_json", "target_space", "rng_for", "scott", "alphas",
    "hyper_top", "tau_of", "regular_kernels", "kernel_json", "kernel_of", "filter_of",
    "curated_transfer_spaces",
]
