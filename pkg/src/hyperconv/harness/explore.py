"""Exploratory search: is the topological modification of [X,Z] a lift?

For tiny X and finite Z we look for a hyperconvergence τ on the opens of X
whose preimage-wise lift equals T[X,Z].  Candidates are Scott convergence and
the topologies α(X,$) for sub-collections α of compact families.  Nothing is
claimed either way; the search just reports what it finds.
"""
from __future__ import annotations

import itertools

from ..convergence import equal, reflect
from ..funcspace import natural_convergence, preimage_lift
from ..hyperfamily import AlphaCollection
from ..hyperspace import hyper_topology
from ..space import FiniteSpace
from .context import alphas, rng_for, scott

MAX_SUBCOLLECTIONS = 256


def candidate_collections(X: FiniteSpace, seed: int = 0):
    fams = [f for f in alphas(X)["kappa"] if not f.is_empty]
    if len(fams) <= 8:
        for r in range(1, len(fams) + 1):
            for combo in itertools.combinations(fams, r):
                yield AlphaCollection(X, combo, f"sub{r}")
        return
    rng = rng_for("explore", X.canonical(), seed)
    for _ in range(MAX_SUBCOLLECTIONS):
        k = rng.randint(1, len(fams))
        yield AlphaCollection(X, rng.sample(fams, k), f"sub{k}")


def search_reflection(X: FiniteSpace, Z: FiniteSpace, seed: int = 0) -> dict:
    target = reflect(natural_convergence(X, Z), "T")
    found = []
    if equal(preimage_lift(scott(X), Z), target):
        found.append("scott")
    tried = 1
    for alpha in candidate_collections(X, seed):
        tried += 1
        if equal(preimage_lift(hyper_topology(alpha), Z), target):
            found.append(alpha.to_json())
    return {"candidates": tried, "matches": len(found), "examples": found[:3]}


__all__ = ["candidate_collections", "search_reflection"]
