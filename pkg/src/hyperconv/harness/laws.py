"""The law registry: every in-scope statement as an executable check.

A law has a stable id, a descriptive anchor naming the statement it checks,
a grid of JSON instances derived from a :class:`ScopeConfig`, and a checker
``instance -> (ok, detail)``.  Instances carry everything needed to replay
a check in isolation.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

import portion as P

from .._bits import as_list, mask_of, members, popcount
from ..convergence import adherence, adherence_table, coarser, equal, reflect, tightness_at
from ..errors import EmptyBase, UnknownLaw
from ..funcspace import (alpha_function_topology, bracket, dual_convergence, function_carrier,
                         is_filtered_closed_basis, is_ideal_basis, natural_convergence,
                         preimage_lift, preimage_lift_closed, preimage_lift_direct)
from ..hyperfamily import (AlphaCollection, HyperFilter, IsotoneFamily, family_leq, ideal_ops,
                           is_compact_family, is_functionally_separated, is_ideal_subbase, mesh,
                           o_natural, open_lattice, principal_family, reduced_ideal, refines)
from ..hyperspace import (HyperConvergence, adherence_cover_table, arens_number,
                          arens_number_bruteforce, complement_view, is_alpha_cover, lower_witness,
                          lindelof_number, lindelof_via_adherence, selection, solidity_check,
                          upper_regular_witness,
                          upper_kuratowski_view)
from ..convergence import Convergence, topology_from_subbase
from ..space import FiniteSpace, discrete, is_symmetric
from ..transfer.filters import (SymbolicFilter, bracket_region, delta_reconstruction,
                                erected_filter, f_upper, filter_preimage, lift_limit_at_zero,
                                preimage_bracket, separated_coarsening, stable_preimage,
                                sup_erected, verify_transfer_compact, zero_bracket_filter,
                                zero_limit_direct)
from ..transfer.regions import (REAL, RealModel, FunctionRegion, cylinder, interval, ladder)
from .context import (TARGETS, alphas, curated_transfer_spaces, hyper_top, kernel_json,
                      kernel_of, regular_kernels, rng_for, scott, space_json, space_of,
                      target_space, tau_of)
from .enumerate import enumerate_spaces, spaces_up_to

SAMPLE = 120          # random families per space when exhaustive checking is too large
EXHAUSTIVE_OPENS = 8  # hypersets are enumerated exhaustively up to this many opens


@dataclass(frozen=True)
class ScopeConfig:
    """Which instances the laws run on."""
    max_points: int = 4
    function_points: int = 3
    depth: int = 8
    seed: int = 0
    random_posets: int = 2
    exclude: tuple = ()   # (law id, reason) pairs

    def excluded(self) -> dict:
        return dict(self.exclude)

    def as_dict(self) -> dict:
        return {"max_points": self.max_points, "function_points": self.function_points,
                "depth": self.depth, "seed": self.seed, "random_posets": self.random_posets,
                "exclude": [list(p) for p in self.exclude]}


@dataclass(frozen=True)
class LawRecord:
    id: str
    anchor: str
    grid: str
    instances: Callable[[ScopeConfig], Iterable[dict]]
    check: Callable[[dict], tuple]

    def scope(self, config: ScopeConfig) -> dict:
        if self.grid == "transfer":
            return {"grid": self.grid, "depth": config.depth}
        if self.grid == "functions":
            return {"grid": self.grid, "max_points": min(config.function_points, config.max_points)}
        return {"grid": self.grid, "max_points": config.max_points}


REGISTRY: dict[str, LawRecord] = {}


def _register(law_id: str, anchor: str, grid: str):
    def deco(pair):
        instances, check = pair
        if law_id in REGISTRY:
            raise ValueError(f"duplicate law id {law_id!r}")
        REGISTRY[law_id] = LawRecord(law_id, anchor, grid, instances, check)
        return pair
    return deco


def get_law(law_id: str) -> LawRecord:
    try:
        return REGISTRY[law_id]
    except KeyError:
        raise UnknownLaw(f"no law with id {law_id!r}") from None


def replay(law_id: str, instance: dict) -> tuple:
    """Run one check in isolation."""
    return get_law(law_id).check(instance)


# grids -------------------------------------------------------------------------------------

def _t0_spaces(limit: int) -> list[FiniteSpace]:
    return spaces_up_to(limit, t0_only=True)


def _all_spaces(limit: int) -> list[FiniteSpace]:
    """All labeled topologies up to min(limit, 3) points, T0 ones above that."""
    out = spaces_up_to(min(limit, 3), t0_only=False)
    for n in range(4, limit + 1):
        out.extend(enumerate_spaces(n, t0_only=True))
    return out


def _lattice_grid(config: ScopeConfig) -> list[dict]:
    return [{"space": space_json(X)} for X in _t0_spaces(config.max_points)]


def _general_grid(config: ScopeConfig) -> list[dict]:
    return [{"space": space_json(X)} for X in _all_spaces(config.max_points)]


def _function_spaces(config: ScopeConfig) -> list[FiniteSpace]:
    return _t0_spaces(min(config.function_points, config.max_points))


def _function_grid(config: ScopeConfig, with_targets: bool = True) -> list[dict]:
    out = []
    for X in _function_spaces(config):
        if with_targets:
            out.extend({"space": space_json(X), "Z": z} for z in TARGETS)
        else:
            out.append({"space": space_json(X)})
    return out


def _hypersets(X: FiniteSpace, seed, nonempty: bool = False) -> list[int]:
    """All hypersets when the opens are few, otherwise a seeded sample."""
    lat = open_lattice(X)
    start = 1 if nonempty else 0
    if lat.m <= EXHAUSTIVE_OPENS:
        return list(range(start, 1 << lat.m))
    rng = rng_for("hypersets", X.canonical(), seed)
    picks = {lat.full, 1 << lat.index[X.full]}
    if not nonempty:
        picks.add(0)
    while len(picks) < SAMPLE:
        h = 0
        for i in range(lat.m):
            if rng.random() < rng.choice((0.1, 0.25, 0.5)):
                h |= 1 << i
        if h or not nonempty:
            picks.add(h)
    return sorted(picks)


def _kernels(X: FiniteSpace, seed) -> list[int]:
    return _hypersets(X, ("kernels", seed), nonempty=True)


def _ok(flag: bool, **detail) -> tuple:
    return bool(flag), detail


# preimage-wise lifts and brackets -------------------------------------------------------------

def _taus_function(X: FiniteSpace) -> list[str]:
    return ["scott", "p", "kappa", "s", "pt0"]


def _inst_general_def(config):
    return [dict(inst, tau=t) for inst in _function_grid(config) for t in _taus_function(space_of(inst["space"]))]


def _check_general_def(inst):
    X, Z = space_of(inst["space"]), target_space(inst["Z"])
    tau = tau_of(X, inst["tau"])
    lifted = preimage_lift(tau, Z)
    direct = preimage_lift_direct(tau, Z)
    same = equal(lifted, direct)
    # convergence classes pass from τ to its lift
    kinds = {"pseudotopology": tau.is_pseudotopology(), "pretopology": tau.is_pretopology(),
             "topology": tau.is_topology()}
    kept = all(not v or getattr(lifted, "is_" + k)() for k, v in kinds.items())
    return _ok(same and kept, equal=same, classes_kept=kept, tau_classes=kinds)


_register("general-def", "preimage-wise lift of a hyperconvergence", "functions")(
    (_inst_general_def, _check_general_def))


def _inst_idealbasis(config):
    return [dict(inst, tau=t) for inst in _function_grid(config) for t in ("scott", "p", "s")]


def _check_idealbasis(inst):
    X, Z = space_of(inst["space"]), target_space(inst["Z"])
    tau = tau_of(X, inst["tau"])
    full = preimage_lift(tau, Z)
    bad = []
    tried = 0
    for r in range(1, len(Z.opens) + 1):
        for basis in itertools.combinations(Z.opens, r):
            if is_ideal_basis(Z, basis):
                tried += 1
                if not equal(preimage_lift(tau, Z, basis), full):
                    bad.append(["open", [as_list(b) for b in basis]])
    closed = Z.closed_sets
    for r in range(1, len(closed) + 1):
        for basis in itertools.combinations(closed, r):
            if is_filtered_closed_basis(Z, basis):
                tried += 1
                if not equal(preimage_lift_closed(tau, Z, basis), full):
                    bad.append(["closed", [as_list(b) for b in basis]])
    return _ok(not bad and tried > 0, bases=tried, failing=bad[:3])


_register("prop-idealbasis", "lift tested on an ideal basis or a filtered closed basis", "functions")(
    (_inst_idealbasis, _check_idealbasis))


def _check_brackets(inst):
    X, Z = space_of(inst["space"]), target_space(inst["Z"])
    fc = function_carrier(X, Z)
    fams = list(alphas(X)["kappa"])
    for U in Z.opens:
        for D in range(1 << X.n):
            if bracket(fc, principal_family(X, D), U) != bracket(fc, D, U):
                return _ok(False, reason="[O(D),U] != [D,U]", D=as_list(D), U=as_list(U))
        for fam in fams:
            union = 0
            for a in fam.minimals:
                union |= bracket(fc, a, U)
            if bracket(fc, fam, U) != union:
                return _ok(False, reason="union form", family=fam.to_json(), U=as_list(U))
        rng = rng_for("brackets", inst)
        for _ in range(min(40, len(fams) ** 2)):
            a, b = rng.choice(fams), rng.choice(fams)
            if bracket(fc, a & b, U) != bracket(fc, a, U) & bracket(fc, b, U):
                return _ok(False, reason="intersection", U=as_list(U))
            if bracket(fc, a | b, U) != bracket(fc, a, U) | bracket(fc, b, U):
                return _ok(False, reason="union", U=as_list(U))
    return _ok(True, maps=fc.size, families=len(fams))


_register("bracket-sets", "bracket sets [D,U] and [A,U]", "functions")(
    (lambda c: _function_grid(c), _check_brackets))


def _check_collapse(inst):
    X = space_of(inst["space"])
    A = alphas(X)
    p, k, kappa = (set(A[x].families) for x in ("p", "k", "kappa"))
    lat = open_lattice(X)
    every = {IsotoneFamily(X, lat.opens_of(ac)) for ac in lat.antichains()}
    compact = all(is_compact_family(f) for f in every)
    return _ok(p == k == kappa == every and compact, p=len(p), k=len(k), kappa=len(kappa),
               isotone=len(every), all_compact=compact)


_register("finite-collapse", "p, k and kappa collections", "general")(
    (_general_grid, _check_collapse))


def _check_scott(inst):
    X = space_of(inst["space"])
    from ..hyperspace import scott_convergence
    literal = scott_convergence(X, literal=True)
    reduced = scott_convergence(X, literal=False)
    same = equal(literal, reduced)
    # through Sierpiński-valued maps: f ↦ f⁻({1}) is a bijection onto the opens
    sierp = target_space("sierpinski")
    nat = natural_convergence(X, sierp)
    fc = nat.functions
    order = [X.open_index[fc.preimage(i, 0b10)] for i in range(fc.size)]
    bijective = sorted(order) == list(range(len(X.opens)))
    matches = bijective and all(
        sum(1 << order[j] for j in members(nat.lim(1 << i))) == reduced.lim(1 << order[i])
        for i in range(fc.size)) and nat.is_pseudotopology() and reduced.is_pseudotopology()
    return _ok(same and matches, literal_equals_reduced=same, matches_natural=matches)


_register("scott-convergence", "Scott convergence via interiors of intersections", "functions")(
    (lambda c: _function_grid(c, with_targets=False), _check_scott))


def _inst_alpha_lift(config):
    return [dict(inst, alpha=a) for inst in _function_grid(config) for a in ("p", "k", "kappa", "s")]


def _check_alpha_lift(inst):
    X, Z = space_of(inst["space"]), target_space(inst["Z"])
    alpha = alphas(X)[inst["alpha"]]
    direct = alpha_function_topology(alpha, Z)
    lifted = preimage_lift(hyper_top(X, inst["alpha"]), Z)
    return _ok(equal(direct, lifted), maps=direct.size)


_register("alpha-lift", "alpha(X,Z) is the lift of alpha(X,$)", "functions")(
    (_inst_alpha_lift, _check_alpha_lift))


def _check_natural_lift(inst):
    X, Z = space_of(inst["space"]), target_space(inst["Z"])
    nat = natural_convergence(X, Z)
    lifted = preimage_lift(scott(X), Z)
    return _ok(equal(nat, lifted), maps=nat.size)


_register("natural-lift", "[X,Z] is the lift of [X,$]", "functions")(
    (lambda c: _function_grid(c), _check_natural_lift))


def _check_upper_kuratowski(inst):
    X = space_of(inst["space"])
    uk = upper_kuratowski_view(X)
    cv = complement_view(scott(X))
    return _ok(uk.carrier == cv.carrier and bool((uk.table() == cv.table()).all()))


_register("upper-kuratowski", "upper Kuratowski convergence as the complement view", "lattice")(
    (_lattice_grid, _check_upper_kuratowski))


# hyperconvergence axioms ------------------------------------------------------------------

def _check_solidity(inst):
    X = space_of(inst["space"])
    reports = {"scott": solidity_check(scott(X), seed=0).as_dict()}
    for label in ("p", "k", "kappa", "s"):
        reports[label] = solidity_check(hyper_top(X, label)).as_dict()
    # a non-lower convergence must be flagged: every open isolated
    lat = open_lattice(X)
    isolated = HyperConvergence.wrap(X, Convergence.from_vicinities(
        X.opens, [1 << i for i in range(lat.m)], "isolated"))
    flagged = solidity_check(isolated).lower is (lat.m == 1)
    ok = all(r["solid"] for r in reports.values()) and flagged
    return _ok(ok, reports=reports, negative_flagged=flagged)


_register("solidity-axioms", "lower, upper regular, directed-sup respecting and solid hyperconvergences",
          "lattice")((_lattice_grid, _check_solidity))


def _inst_up_regular(config):
    return [dict(inst, seed=config.seed) for inst in _lattice_grid(config)]


def _random_subbases(X: FiniteSpace, seed) -> Iterable[list[int]]:
    lat = open_lattice(X)
    if lat.m <= 3:
        subsets = range(1 << lat.m)
        for r in range(len(subsets) + 1):
            yield from (list(c) for c in itertools.combinations(subsets, r))
        return
    rng = rng_for("subbase", X.canonical(), seed)
    for _ in range(24):
        out = []
        for _ in range(rng.randint(1, 5)):
            h = rng.getrandbits(lat.m)
            out.append(lat.upclose(h) if rng.random() < 0.7 else h)
        yield out


def _check_up_regular(inst):
    X = space_of(inst["space"])
    lower = 0
    for sub in _random_subbases(X, inst["seed"]):
        tau = HyperConvergence.wrap(X, topology_from_subbase(X.opens, sub))
        if lower_witness(tau) is None:
            lower += 1
            if upper_regular_witness(tau) is not None:
                return _ok(False, subbase=sub)
    return _ok(lower > 0, lower_topologies=lower)


_register("prop-up-regular", "lower topologies are upper regular", "lattice")(
    (_inst_up_regular, _check_up_regular))


def _between_p_and_scott(X: FiniteSpace) -> dict:
    out = {"scott": scott(X)}
    for label in ("p", "k", "kappa", "s"):
        out[label] = hyper_top(X, label)
    return out


def _nonempty_lattice_grid(config):
    return [inst for inst in _lattice_grid(config) if inst["space"]["points"] > 0]


def _check_closure(inst):
    X = space_of(inst["space"])
    lat = open_lattice(X)
    p = hyper_top(X, "p")
    for name, tau in _between_p_and_scott(X).items():
        if not (coarser(p, tau) and coarser(tau, scott(X))):
            return _ok(False, reason="not between p(X,$) and [X,$]", tau=name)
        for i in range(lat.m):
            if tau.lim(1 << i) != lat.below[i]:
                return _ok(False, tau=name, open=as_list(X.opens[i]))
    return _ok(True)


_register("lemma-closure", "closure of a point between p(X,$) and [X,$]", "lattice")(
    (_nonempty_lattice_grid, _check_closure))


def _check_t0_not_t1(inst):
    X = space_of(inst["space"])
    lat = open_lattice(X)
    top, bottom = lat.index[X.full], lat.index[0]
    for name, tau in _between_p_and_scott(X).items():
        cl = [tau.lim(1 << i) for i in range(lat.m)]
        t0 = all(not (cl[i] >> j & 1 and cl[j] >> i & 1)
                 for i in range(lat.m) for j in range(i + 1, lat.m))
        t1 = all(cl[i] == 1 << i for i in range(lat.m))
        if not t0 or t1 or not cl[top] >> bottom & 1:
            return _ok(False, tau=name, t0=t0, t1=t1)
    return _ok(True)


_register("t0-not-t1", "T0 but not T1 between p(X,$) and [X,$]", "lattice")(
    (_nonempty_lattice_grid, _check_t0_not_t1))


# families, ideals and covers -------------------------------------------------------------

def _random_families(X: FiniteSpace, seed, count: int, opens_only: bool):
    rng = rng_for("families", X.canonical(), seed, opens_only)
    pool = list(X.opens) if opens_only else list(range(1 << X.n))
    for _ in range(count):
        yield [rng.choice(pool) for _ in range(rng.randint(0, 3))]


def _inst_seeded(config):
    return [dict(inst, seed=config.seed) for inst in _lattice_grid(config)]


def _check_mesh(inst):
    X = space_of(inst["space"])
    lat = open_lattice(X)
    fams = list(_random_families(X, inst["seed"], 60, False))
    for A, B in zip(fams, fams[1:]):
        brute = all(a & b for a in A for b in B)
        if mesh(A, B) != brute or mesh(B, A) != brute:
            return _ok(False, A=[as_list(a) for a in A], B=[as_list(b) for b in B])
    for P in _random_families(X, inst["seed"], 60, True):
        if not mesh(o_natural(X, P), [lat.hyperset(P)]):
            return _ok(False, P=[as_list(p) for p in P])
    return _ok(True)


_register("mesh", "mesh of families", "lattice")((_inst_seeded, _check_mesh))


def _refine_pairs(X: FiniteSpace, seed):
    if X.n <= 2:
        subsets = range(1 << X.n)
        fams_p = [list(c) for r in range(len(subsets) + 1) for c in itertools.combinations(subsets, r)]
        fams_r = [list(c) for r in range(len(X.opens) + 1) for c in itertools.combinations(X.opens, r)]
        return itertools.product(fams_p, fams_r)
    ps = list(_random_families(X, (seed, "P"), SAMPLE, False))
    rs = list(_random_families(X, (seed, "R"), SAMPLE, True))
    return zip(ps, rs)


def _check_refine(inst):
    X = space_of(inst["space"])
    lat = open_lattice(X)
    n = 0
    for P, R in _refine_pairs(X, inst["seed"]):
        n += 1
        one = mesh([lat.hyperset(R)], o_natural(X, P))
        two = refines(P, R)
        three = family_leq(o_natural(X, P), o_natural(X, R))
        if not one == two == three:
            return _ok(False, P=[as_list(p) for p in P], R=[as_list(r) for r in R],
                       values=[one, two, three])
    return _ok(True, pairs=n)


_register("prop-refine", "refinement, mesh and order of O-natural families", "lattice")(
    (_inst_seeded, _check_refine))


def _is_filter_base(hypersets: list[int]) -> bool:
    if not hypersets:
        return False
    return all(any(c & ~(a & b) == 0 for c in hypersets) for a in hypersets for b in hypersets)


def _check_ideal_subbases(inst):
    X = space_of(inst["space"])
    lat = open_lattice(X)
    for h in _hypersets(X, inst["seed"]):
        P = lat.opens_of(h)
        if _is_filter_base(o_natural(X, P)) != is_ideal_subbase(P):
            return _ok(False, P=[as_list(p) for p in P])
    return _ok(True)


_register("ideal-subbases", "ideal subbases and filter bases", "lattice")(
    (_inst_seeded, _check_ideal_subbases))


def _check_reduced(inst):
    X = space_of(inst["space"])
    lat = open_lattice(X)
    for k in _kernels(X, inst["seed"]):
        gamma = HyperFilter(X, k)
        red = reduced_ideal(gamma)
        brute = set()
        free = lat.full & ~k
        sub = free
        while True:
            acc = X.full
            for u in lat.opens_of(k | sub):
                acc &= u
            brute.add(acc)
            if sub == 0:
                break
            sub = (sub - 1) & free
        if set(red) != brute or not is_ideal_subbase(list(red)):
            return _ok(False, kernel=kernel_json(X, k))
    return _ok(True)


def _small_lattice_grid(config):
    # the superset enumeration doubles per open; keep it to function-sized spaces
    return [dict(inst, seed=config.seed) for inst in _function_grid(config, with_targets=False)]


_register("reduced-ideal", "reduced ideal of a hyperfilter", "functions")(
    (_small_lattice_grid, _check_reduced))


def _o_natural_kernel(X: FiniteSpace, P: Iterable[int]) -> int:
    """Kernel of the filter generated by {𝒪(p) : p ∈ P} (P nonempty)."""
    lat = open_lattice(X)
    k = lat.full
    for h in o_natural(X, P):
        k &= h
    return k


def _check_base(inst):
    X = space_of(inst["space"])
    sc = scott(X)
    for k in _kernels(X, inst["seed"]):
        lim = sc.lim(k)
        if not lim:
            continue
        red = reduced_ideal(HyperFilter(X, k))
        P = sorted({X.interior(a) for a in red})
        base = o_natural(X, P)
        kb = _o_natural_kernel(X, P)
        if not is_ideal_subbase(P) or kb not in base:
            return _ok(False, reason="not a filter base", kernel=kernel_json(X, k))
        # coarser than γ and converging to every limit of γ
        if k & ~kb or lim & ~sc.lim(kb):
            return _ok(False, kernel=kernel_json(X, k))
    return _ok(True)


_register("prop-base", "convergence base of [X,$] from ideal subbases", "lattice")(
    (_inst_seeded, _check_base))


def _upper_regular_taus(X: FiniteSpace) -> dict:
    out = _between_p_and_scott(X)
    out["pt0"] = hyper_top(X, "pt0")
    return out


def _check_adh_lim(inst):
    X = space_of(inst["space"])
    lat = open_lattice(X)
    n = 0
    for name, tau in _upper_regular_taus(X).items():
        adh = adherence_table(tau)
        for h in _hypersets(X, inst["seed"], nonempty=True):
            P = lat.opens_of(h)
            if not is_ideal_subbase(P):
                continue
            n += 1
            if adh[h] != tau.lim(_o_natural_kernel(X, P)):
                return _ok(False, tau=name, P=[as_list(p) for p in P])
    return _ok(True, ideal_subbases=n)


_register("prop-adh-lim", "adherence equals limit for ideal subbases", "lattice")(
    (_inst_seeded, _check_adh_lim))


def _union_ideal(X: FiniteSpace, h: int) -> int:
    """Hyperset of P^∪, finite unions of members of P, the empty union included."""
    lat = open_lattice(X)
    closure = ideal_ops(lat.opens_of(h)).ideal_closure
    return lat.hyperset(set(closure) | {0})


def _check_cover_prop(inst):
    X = space_of(inst["space"])
    lat = open_lattice(X)
    for name, tau in _between_p_and_scott(X).items():
        adh = adherence_table(tau)
        for h in _hypersets(X, inst["seed"]):
            union = 0
            for p in lat.opens_of(h):
                union |= p
            hit = adh[_union_ideal(X, h)]
            for i, U in enumerate(X.opens):
                if (U & ~union == 0) != bool(hit >> i & 1):
                    return _ok(False, tau=name, P=[as_list(p) for p in lat.opens_of(h)],
                               U=as_list(U))
    return _ok(True)


_register("cover-proposition", "covers as adherence of the generated ideal base", "lattice")(
    (_inst_seeded, _check_cover_prop))


def _check_idealcover(inst):
    X = space_of(inst["space"])
    lat = open_lattice(X)
    sc = scott(X)
    adh_scott = adherence_table(sc)
    tables = {name: adherence_table(tau) for name, tau in _between_p_and_scott(X).items()}
    for h in _hypersets(X, inst["seed"], nonempty=True):
        P = lat.opens_of(h)
        if not is_ideal_subbase(P):
            continue
        union = 0
        for p in P:
            union |= p
        covered = sum(1 << i for i, U in enumerate(X.opens) if U & ~union == 0)
        kb = _o_natural_kernel(X, P)
        for name, tau in _between_p_and_scott(X).items():
            values = [tables[name][h], tau.lim(kb), sc.lim(kb), adh_scott[h]]
            if any(v != covered for v in values):
                return _ok(False, tau=name, P=[as_list(p) for p in P])
    return _ok(True)


_register("cor-idealcover", "adherences of ideal bases agree between p(X,$) and [X,$]", "lattice")(
    (_inst_seeded, _check_idealcover))


def _inst_discrete(config):
    return [{"space": space_json(discrete(n))} for n in range(2, config.max_points + 1)]


def _check_discrete(inst):
    X = space_of(inst["space"])
    lat = open_lattice(X)
    p = hyper_top(X, "p")
    singles = lat.hyperset(1 << x for x in range(X.n))
    top = lat.index[X.full]
    adh_single = adherence(p, singles)
    adh_union = adherence(p, _union_ideal(X, singles))
    expected = lat.hyperset([0] + [1 << x for x in range(X.n)])
    ok = not adh_single >> top & 1 and bool(adh_union >> top & 1) and adh_single == expected
    return _ok(ok, adherence_of_singletons=kernel_json(X, adh_single))


_register("discrete-example", "singletons of a discrete space", "lattice")(
    (_inst_discrete, _check_discrete))


def _check_adhalpha(inst):
    X = space_of(inst["space"])
    lat = open_lattice(X)
    for label in ("p", "k", "kappa", "s_cap", "pt0"):
        alpha = alphas(X)[label]
        if not alpha.is_intersection_closed():
            return _ok(False, reason="collection is not intersection closed", alpha=label)
        adh = adherence_table(hyper_top(X, label))
        for h in _hypersets(X, inst["seed"], nonempty=True):
            P = lat.opens_of(h)
            for i, U in enumerate(X.opens):
                if bool(adh[h] >> i & 1) != is_alpha_cover(P, alpha, U):
                    return _ok(False, alpha=label, P=[as_list(p) for p in P], U=as_list(U))
    return _ok(True)


_register("prop-adhalpha", "alpha-covers as adherence in alpha(X,$)", "lattice")(
    (_inst_seeded, _check_adhalpha))


# transfer -------------------------------------------------------------------------------------

def _check_ladder(inst):
    W = ladder(inst["depth"])
    ok = True
    for n, w in enumerate(W):
        atom = w[0] if len(w) == 1 else None
        ok &= atom is not None and atom.left == P.OPEN and atom.right == P.OPEN
        ok &= atom.lower == -atom.upper == -Fraction(1, n + 1)
        ok &= isinstance(atom.upper, Fraction)
        if n:
            ok &= w in W[n - 1] and w != W[n - 1]
    return _ok(bool(ok), depth=len(W))


_register("ladder", "decreasing ladder of bounded zero neighbourhoods", "transfer")(
    (lambda c: [{"depth": c.depth}], _check_ladder))


def _transfer_spaces(config: ScopeConfig) -> list[FiniteSpace]:
    out = curated_transfer_spaces()
    posets = list(enumerate_spaces(4, t0_only=True)) if config.random_posets else []
    rng = rng_for("posets", config.seed)
    for X in rng.sample(posets, min(config.random_posets, len(posets))):
        out.append(X)
    return out


TRANSFER_TAUS = ("scott", "pt0")


def _convergent_split(X: FiniteSpace, tau_name: str):
    tau = tau_of(X, tau_name)
    top = open_lattice(X).index[X.full]
    conv, other = [], []
    for k in regular_kernels(X):
        (conv if tau.lim(k) >> top & 1 else other).append(k)
    return conv, other


def _filter_specs(X: FiniteSpace, tau_name: str, seed) -> list[dict]:
    rng = rng_for("filters", X.canonical(), tau_name, seed)
    conv, other = _convergent_split(X, tau_name)
    specs = []
    for k in rng.sample(conv, min(3, len(conv))):
        specs.append({"kind": "erected", "kernel": kernel_json(X, k)})
    for k in rng.sample(other, min(2, len(other))):
        specs.append({"kind": "erected", "kernel": kernel_json(X, k)})
    seq = [rng.choice(conv) for _ in range(3)]
    specs.append({"kind": "sup", "kernels": [kernel_json(X, k) for k in seq]})
    if other:
        mixed = [rng.choice(conv), rng.choice(other), rng.choice(conv)]
        specs.append({"kind": "sup", "kernels": [kernel_json(X, k) for k in mixed]})
    specs.append({"kind": "zero-bracket", "kernel": kernel_json(X, rng.choice(conv))})
    if other:
        specs.append({"kind": "zero-bracket", "kernel": kernel_json(X, rng.choice(other))})
    specs.append({"kind": "principal", "vector": ["0"] * len(X.components)})
    specs.append({"kind": "principal", "vector": ["1/3"] + ["0"] * (len(X.components) - 1)})
    specs.append({"kind": "pinned", "lo": "2", "hi": "3"})
    return specs


def build_filter(X: FiniteSpace, spec: dict, depth: int) -> SymbolicFilter:
    kind = spec["kind"]
    if kind == "erected":
        return erected_filter(HyperFilter(X, kernel_of(X, spec["kernel"])), depth)
    if kind == "sup":
        return sup_erected([HyperFilter(X, kernel_of(X, k)) for k in spec["kernels"]], depth)
    if kind == "zero-bracket":
        return zero_bracket_filter(HyperFilter(X, kernel_of(X, spec["kernel"])), depth)
    model = RealModel(X)
    if kind == "principal":
        return SymbolicFilter.principal_at(model, [Fraction(v) for v in spec["vector"]], depth)
    if kind == "pinned":
        side = interval(spec["lo"], spec["hi"])
        region = cylinder(model, {c: side for c in range(model.dim)})
        return SymbolicFilter.constant(model, region, depth, "pinned")
    raise ValueError(f"unknown filter kind {kind!r}")


def _inst_transfer_filters(config):
    out = []
    for X in _transfer_spaces(config):
        for t in TRANSFER_TAUS:
            for spec in _filter_specs(X, t, config.seed):
                out.append({"space": space_json(X), "tau": t, "filter": spec, "depth": config.depth})
    return out


def _check_conv_at_zero(inst):
    X = space_of(inst["space"])
    tau = tau_of(X, inst["tau"])
    N = inst["depth"]
    F = build_filter(X, inst["filter"], N + 1)
    lift = lift_limit_at_zero(tau, F, N)
    direct = zero_limit_direct(tau, F, N)
    return _ok(lift == direct, lift=lift, direct=direct)


_register("conv-at-zero", "convergence to the zero function through the ladder", "transfer")(
    (_inst_transfer_filters, _check_conv_at_zero))


def _inst_kernel_pairs(config):
    out = []
    for X in _transfer_spaces(config):
        ks = regular_kernels(X)
        rng = rng_for("pairs", X.canonical(), config.seed)
        for _ in range(6):
            a, b = rng.choice(ks), rng.choice(ks)
            # α ≤ γ means γ is finer, so its kernel is smaller
            coarse, fine = (a | b, b) if rng.random() < 0.5 else (a, a)
            out.append({"space": space_json(X), "coarse": kernel_json(X, coarse),
                        "fine": kernel_json(X, fine), "depth": config.depth})
    return out


def _check_w_erected(inst):
    X = space_of(inst["space"])
    N = inst["depth"]
    lat = open_lattice(X)
    coarse = HyperFilter(X, kernel_of(X, inst["coarse"]))
    fine = HyperFilter(X, kernel_of(X, inst["fine"]))
    model = RealModel(X)
    W = ladder(N + 1)
    F = erected_filter(coarse, N + 1)
    descends = all(F.base[n + 1].issubset(F.base[n]) for n in range(N))
    # [α,W] ≤ [γ,V] for α ≤ γ and V ⊆ W
    finer = all(bracket_region(model, fine.family(), W[j]).issubset(
        bracket_region(model, coarse.family(), W[i])) for i in range(0, N, 3) for j in range(i, N, 3))
    # F⁻(O₀) ≤ F⁻(O₁) for O₀ ⊆ O₁, both regularized
    mono = True
    for n in range(N - 1):
        small = lat.upclose(filter_preimage(F, W[n + 1]).kernel)
        big = lat.upclose(filter_preimage(F, W[n]).kernel)
        mono &= big & ~small == 0
    full = bracket_region(model, IsotoneFamily.from_hyperset(X, lat.full), W[0]) == model.full_region()
    return _ok(descends and finer and mono and full, descends=descends, finer=finer,
               monotone_preimages=bool(mono), full_family=full)


_register("w-erected", "W-erected and erected filters", "transfer")(
    (_inst_kernel_pairs, _check_w_erected))


def _inst_sequences(config):
    out = []
    for X in _transfer_spaces(config):
        ks = regular_kernels(X)
        rng = rng_for("sequences", X.canonical(), config.seed)
        for _ in range(4):
            seq = [rng.choice(ks) for _ in range(rng.randint(1, config.depth + 1))]
            out.append({"space": space_json(X), "kernels": [kernel_json(X, k) for k in seq],
                        "depth": config.depth})
    return out


def _check_liftsequence(inst):
    X = space_of(inst["space"])
    N = inst["depth"]
    filters = [HyperFilter(X, kernel_of(X, k)) for k in inst["kernels"]]
    try:
        F = sup_erected(filters, N + 1)
    except EmptyBase as exc:
        return _ok(False, error=str(exc))
    model = F.model
    padded = filters + [filters[-1]] * (N + 1 - len(filters))
    above = all(F.base[n].issubset(bracket_region(model, padded[n].family(), w))
                for n, w in enumerate(ladder(N + 1)))
    constant = sup_erected([filters[0]], N + 1).same_base(erected_filter(filters[0], N + 1))
    return _ok(above and constant, above_each=above, constant_is_erected=constant)


_register("lemma-liftsequence", "supremum of erected filters along a sequence", "transfer")(
    (_inst_sequences, _check_liftsequence))


def _inst_convergent_sequences(config):
    out = []
    for X in _transfer_spaces(config):
        for t in TRANSFER_TAUS:
            conv, _ = _convergent_split(X, t)
            rng = rng_for("anwn", X.canonical(), t, config.seed)
            for _ in range(3):
                seq = [rng.choice(conv) for _ in range(rng.randint(1, config.depth))]
                out.append({"space": space_json(X), "tau": t, "depth": config.depth,
                            "kernels": [kernel_json(X, k) for k in seq]})
    return out


def _check_anwn(inst):
    X = space_of(inst["space"])
    tau = tau_of(X, inst["tau"])
    N = inst["depth"]
    F = sup_erected([HyperFilter(X, kernel_of(X, k)) for k in inst["kernels"]], N + 1)
    return _ok(lift_limit_at_zero(tau, F, N))


_register("thm-anwn", "sequences converging to X give convergence to zero", "transfer")(
    (_inst_convergent_sequences, _check_anwn))


def _inst_regular_by_tau(config, limit: int = 6):
    out = []
    for X in _transfer_spaces(config):
        for t in TRANSFER_TAUS:
            conv, other = _convergent_split(X, t)
            rng = rng_for("regular", X.canonical(), t, config.seed)
            for k in rng.sample(conv, min(limit, len(conv))) + rng.sample(other, min(2, len(other))):
                out.append({"space": space_json(X), "tau": t, "kernel": kernel_json(X, k),
                            "depth": config.depth})
    return out


def _converges_to_top(X: FiniteSpace, tau_name: str, k: int) -> bool:
    return bool(tau_of(X, tau_name).lim(k) >> open_lattice(X).index[X.full] & 1)


def _check_falpha(inst):
    X = space_of(inst["space"])
    k = kernel_of(X, inst["kernel"])
    N = inst["depth"]
    if not _converges_to_top(X, inst["tau"], k):
        return _ok(True, vacuous=True)
    F = erected_filter(HyperFilter(X, k), N + 1)
    return _ok(lift_limit_at_zero(tau_of(X, inst["tau"]), F, N))


_register("cor-falpha", "erected filter of a convergent filter converges to zero", "transfer")(
    (_inst_regular_by_tau, _check_falpha))


def _check_0_polar(inst):
    X = space_of(inst["space"])
    k = kernel_of(X, inst["kernel"])
    N = inst["depth"]
    alpha = HyperFilter(X, k)
    erected = erected_filter(alpha, N + 1)
    zero = zero_bracket_filter(alpha, N + 1)
    below = erected.leq(zero)
    passes = True
    if _converges_to_top(X, inst["tau"], k):
        passes = lift_limit_at_zero(tau_of(X, inst["tau"]), zero, N)
    return _ok(below and passes, below=below, zero_converges=passes)


_register("cor-0-polar", "zero-polar bracket filter", "transfer")(
    (_inst_regular_by_tau, _check_0_polar))


def _inst_all_regular(config, per_space: int = 40):
    out = []
    for X in _transfer_spaces(config):
        ks = regular_kernels(X)
        if len(ks) > per_space:
            ks = sorted(rng_for("all-regular", X.canonical(), config.seed).sample(ks, per_space))
        out.extend({"space": space_json(X), "kernel": kernel_json(X, k), "depth": config.depth}
                   for k in ks)
    return out


def _check_constr_rel(inst):
    X = space_of(inst["space"])
    alpha = HyperFilter(X, kernel_of(X, inst["kernel"]))
    N = inst["depth"]
    return _ok(delta_reconstruction(alpha, N).same_base(erected_filter(alpha, N)))


_register("prop-constr-rel", "erected filter through composable relations", "transfer")(
    (lambda c: _inst_all_regular(c, 12), _check_constr_rel))


SCALE_V = P.open(-1, 1)
SCALE_W = P.open(-2, 2)


def _check_scaling(inst):
    X = space_of(inst["space"])
    N = inst["depth"]
    F = build_filter(X, inst["filter"], N + 1)
    # (h∘F)⁻(W) = F⁻(V) when h(V) = W, so [ (h∘F)⁻(W), W ] = h([F⁻(V), V])
    moved = F.rescale(2)
    corrected = preimage_bracket(moved, SCALE_W) == preimage_bracket(F, SCALE_V).affine(2)
    literal = None
    if inst["filter"]["kind"] in ("erected", "sup"):
        literal = preimage_bracket(F, SCALE_W) == preimage_bracket(F, SCALE_V).affine(2)
    return _ok(corrected and literal is not False, corrected=corrected, literal=literal)


_register("scaling", "rescaling preimage brackets by a strictly increasing linear map", "transfer")(
    (lambda c: [i for i in _inst_transfer_filters(c) if i["tau"] == "scott"], _check_scaling))


def _check_fw(inst):
    X = space_of(inst["space"])
    N = inst["depth"]
    F = build_filter(X, inst["filter"], N + 1)
    return _ok(f_upper(F, N).leq(F))


_register("eq-fw", "the filter F^N(0) associated with a filter lies below it", "transfer")(
    (lambda c: [i for i in _inst_transfer_filters(c) if i["tau"] == "scott"], _check_fw))


def _separated_bruteforce(fam: IsotoneFamily) -> bool:
    """Search 0/1-valued maps that are constant along specialization."""
    X = fam.space
    maps = []
    for bits in range(1 << X.n):
        if all((bits >> x & 1) == (bits >> y & 1) for x in range(X.n) for y in range(X.n) if X.leq(x, y)):
            maps.append(bits)
    for o in fam.members():
        found = False
        for a in fam.members():
            for h in maps:
                # h = 0 on A, h = 1 off O
                if h & a == 0 and (X.full & ~o) & ~h == 0:
                    found = True
                    break
            if found:
                break
        if not found:
            return False
    return True


def _check_separation(inst):
    X = space_of(inst["space"])
    lat = open_lattice(X)
    for ac in lat.antichains():
        fam = IsotoneFamily(X, lat.opens_of(ac))
        if is_functionally_separated(fam).separated != _separated_bruteforce(fam):
            return _ok(False, family=fam.to_json())
    compact_ok = True
    if is_symmetric(X):
        compact_ok = all(is_functionally_separated(f).separated for f in alphas(X)["kappa"])
    return _ok(compact_ok, symmetric=is_symmetric(X))


_register("functional-separation", "functionally separated families", "general")(
    (lambda c: [i for i in _general_grid(c) if i["space"]["points"] <= 3], _check_separation))


def _inst_separation_lemma(config):
    out = []
    for X in _all_spaces(min(config.max_points, 3)):
        prof = X.separation_profile()
        if prof["normal"] and prof["regular"]:
            out.append({"space": space_json(X), "depth": min(config.depth, 3)})
    return out


def _check_separation_lemma(inst):
    X = space_of(inst["space"])
    sc = scott(X)
    W = ladder(1)[0]
    n = 0
    for k in regular_kernels(X):
        gamma = HyperFilter(X, k)
        for i in members(sc.lim(k)):
            n += 1
            res = separated_coarsening(gamma, X.opens[i], W, inst["depth"] + 1)
            if not res.ok:
                return _ok(False, kernel=kernel_json(X, k), target=as_list(X.opens[i]),
                           result={"coarser": res.coarser, "converges": res.converges,
                                   "separated": res.separated, "reduced": res.reduced_matches,
                                   "transfer": res.transfer_matches})
    return _ok(True, pairs=n)


_register("lemma-separation", "functionally separated base of [X,$] on normal spaces", "general")(
    (_inst_separation_lemma, _check_separation_lemma))


def _inst_transfer_compact(config):
    out = []
    for inst in _inst_all_regular(config):
        for w in (0, 3):
            out.append(dict(inst, W=w))
    # the strictness witness is always part of the grid
    from ..space import sierpinski
    S = sierpinski()
    out.append({"space": space_json(S), "kernel": kernel_json(S, open_lattice(S).principal_up(0b10)),
                "depth": config.depth, "W": 0,
                "expect": {"leq": True, "eq": False, "separated": False}})
    return out


def _check_transfer_compact(inst):
    X = space_of(inst["space"])
    alpha = HyperFilter(X, kernel_of(X, inst["kernel"]))
    W = ladder(inst["W"] + 1)[inst["W"]]
    res = verify_transfer_compact(alpha, W, inst["depth"] + 1)
    ok = res.leq and (res.eq or not res.separated)
    if "expect" in inst:
        ok &= res.as_dict() == inst["expect"]
    return _ok(ok, **res.as_dict())


_register("thm-transfer-compact", "recovering a filter from its erected filter", "transfer")(
    (_inst_transfer_compact, _check_transfer_compact))


# cover and selection numbers ------------------------------------------------------------

COVER_ALPHAS = ("s", "p", "kappa")


def _inst_cover_numbers(config):
    return [i for i in _general_grid(config) if i["space"]["points"] <= min(3, config.function_points)]


def _check_cover_numbers(inst):
    X = space_of(inst["space"])
    rows = []
    for label in COVER_ALPHAS:
        alpha = alphas(X)[label]
        for U in X.opens:
            via_covers = lindelof_number(alpha, U)
            via_adh = lindelof_via_adherence(alpha, U)
            arens = arens_number(alpha, U)
            if via_covers != via_adh or arens != arens_number_bruteforce(alpha, U):
                return _ok(False, alpha=label, U=as_list(U), covers=via_covers, adherence=via_adh)
            if label == "kappa" and (via_covers, arens) != (1, 1):
                return _ok(False, alpha=label, U=as_list(U), lindelof=via_covers, arens=arens)
            rows.append(via_covers)
    if X.opens == tuple(range(1 << X.n)):
        # discrete: the s-collection needs every point separately
        s_full = lindelof_number(alphas(X)["s"], X.full)
        if s_full != X.n:
            return _ok(False, alpha="s", lindelof=s_full, points=X.n)
    return _ok(True, lindelof=rows)


_register("cover-numbers", "alpha-Lindelof and alpha-Arens numbers", "general")(
    (_inst_cover_numbers, _check_cover_numbers))


def _check_selection(inst):
    X = space_of(inst["space"])
    lat = open_lattice(X)
    rng = rng_for("selection", inst)
    for label in ("s", "p"):
        alpha = alphas(X)[label]
        U = X.full
        covers = [lat.opens_of(h) for h in range(1 << lat.m) if is_alpha_cover(lat.opens_of(h), alpha, U)]
        for _ in range(6):
            seq = [rng.choice(covers) for _ in range(rng.randint(1, 3))]
            h = selection(alpha, seq, "hurewicz", U)
            r = selection(alpha, seq, "rothberger", U)
            # oracle: smallest bound b with some choice of ≤ b members per cover
            best = None
            options = [[[c[i] for i in range(len(c)) if bits >> i & 1] for bits in range(1 << len(c))]
                       for c in seq]
            for pick in itertools.product(*options):
                chosen = [u for part in pick for u in part]
                if is_alpha_cover(chosen, alpha, U):
                    b = max(len(part) for part in pick)
                    best = b if best is None else min(best, b)
            singles = any(is_alpha_cover(list(p), alpha, U) for p in itertools.product(*seq))
            if h.bound != best or (r.choice is not None) != singles:
                return _ok(False, alpha=label, covers=[[as_list(u) for u in c] for c in seq],
                           hurewicz=h.bound, oracle=best)
    return _ok(True)


_register("selection-numbers", "alpha-Hurewicz and alpha-Rothberger selections", "functions")(
    (lambda c: [i for i in _function_grid(c, with_targets=False) if i["space"]["points"] <= 2 or
                len(space_of(i["space"]).opens) <= 5], _check_selection))


def _check_tightness(inst):
    X = space_of(inst["space"])
    for label in ("p", "k", "kappa", "s_cap", "pt0"):
        alpha = alphas(X)[label]
        tau = hyper_top(X, label)
        for i, U in enumerate(X.opens):
            if not any(h >> i & 1 for h in alpha.hypersets):
                continue  # no family contains U; both sides degenerate
            if lindelof_number(alpha, U) != tightness_at(tau, i):
                return _ok(False, alpha=label, U=as_list(U))
    return _ok(True)


_register("tightness-identity", "alpha-Lindelof number as tightness of alpha(X,$)", "lattice")(
    (lambda c: [i for i in _lattice_grid(c) if len(space_of(i["space"]).opens) <= 10], _check_tightness))


# dual convergences ----------------------------------------------------------------------

def _check_dual(inst):
    X, Z = space_of(inst["space"]), target_space(inst["Z"])
    A = alphas(X)
    fc = function_carrier(X, Z)
    # α(X,Z) through its open-neighbourhood characterization
    ok_top = True
    for label in ("p", "s", "pt0"):
        top = alpha_function_topology(A[label], Z)
        brackets = [bracket(fc, fam, o) for fam in A[label] for o in Z.opens]
        for f in range(fc.size):
            nb = (1 << fc.size) - 1
            for b in brackets:
                if b >> f & 1:
                    nb &= b
            if top.vicinity(f) != nb:
                ok_top = False
    same_s = equal(dual_convergence(A["s"], Z), natural_convergence(X, Z))
    return _ok(ok_top and same_s, topology_rule=ok_top, s_dual_is_natural=same_s)


_register("dual-convergence", "dual convergence [alpha,Z]", "functions")(
    (lambda c: _function_grid(c), _check_dual))


def _check_equality(inst):
    X, Z = space_of(inst["space"]), target_space(inst["Z"])
    nat = natural_convergence(X, Z)
    bad = [label for label in ("p", "k", "kappa")
           if not equal(dual_convergence(alphas(X)[label], Z), nat)]
    return _ok(not bad, differing=bad)


_register("th-equality", "dual convergence equals natural convergence for p <= alpha <= kappa",
          "functions")((lambda c: _function_grid(c), _check_equality))


def _check_3alphas(inst):
    X, Z = space_of(inst["space"]), target_space(inst["Z"])
    A = alphas(X)
    rng = rng_for("3alphas", inst)
    kappa = list(A["kappa"])
    cols = [A[x] for x in ("s", "p", "k", "kappa", "pt0")]
    cols.append(AlphaCollection(X, rng.sample(kappa, min(3, len(kappa))), "sample"))
    bad = []
    for alpha in cols:
        if not alpha.nondegenerate:
            continue
        dual = dual_convergence(alpha, Z)
        T = reflect(dual, "T")
        top = alpha_function_topology(alpha, Z)
        if not (coarser(top, T) and coarser(T, dual)):
            bad.append(alpha.label)
    return _ok(not bad, failing=bad)


_register("eq-3alphas", "[alpha,Z] >= T[alpha,Z] >= alpha(X,Z)", "functions")(
    (lambda c: _function_grid(c), _check_3alphas))


# coverage ------------------------------------------------------------------------------------

IN_SCOPE_STATEMENTS = (
    "preimage-wise lift of a hyperconvergence",
    "lift tested on an ideal basis or a filtered closed basis",
    "bracket sets [D,U] and [A,U]",
    "p, k and kappa collections",
    "Scott convergence via interiors of intersections",
    "alpha(X,Z) is the lift of alpha(X,$)",
    "[X,Z] is the lift of [X,$]",
    "upper Kuratowski convergence as the complement view",
    "lower, upper regular, directed-sup respecting and solid hyperconvergences",
    "lower topologies are upper regular",
    "closure of a point between p(X,$) and [X,$]",
    "T0 but not T1 between p(X,$) and [X,$]",
    "mesh of families",
    "refinement, mesh and order of O-natural families",
    "ideal subbases and filter bases",
    "reduced ideal of a hyperfilter",
    "convergence base of [X,$] from ideal subbases",
    "adherence equals limit for ideal subbases",
    "covers as adherence of the generated ideal base",
    "adherences of ideal bases agree between p(X,$) and [X,$]",
    "singletons of a discrete space",
    "alpha-covers as adherence in alpha(X,$)",
    "decreasing ladder of bounded zero neighbourhoods",
    "convergence to the zero function through the ladder",
    "W-erected and erected filters",
    "supremum of erected filters along a sequence",
    "sequences converging to X give convergence to zero",
    "erected filter of a convergent filter converges to zero",
    "zero-polar bracket filter",
    "erected filter through composable relations",
    "rescaling preimage brackets by a strictly increasing linear map",
    "the filter F^N(0) associated with a filter lies below it",
    "functionally separated families",
    "functionally separated base of [X,$] on normal spaces",
    "recovering a filter from its erected filter",
    "alpha-Lindelof and alpha-Arens numbers",
    "alpha-Hurewicz and alpha-Rothberger selections",
    "alpha-Lindelof number as tightness of alpha(X,$)",
    "dual convergence [alpha,Z]",
    "dual convergence equals natural convergence for p <= alpha <= kappa",
    "[alpha,Z] >= T[alpha,Z] >= alpha(X,Z)",
)


def law_ids() -> list[str]:
    return sorted(REGISTRY)


__all__ = [
    "ScopeConfig", "LawRecord", "REGISTRY", "IN_SCOPE_STATEMENTS", "get_law", "replay",
    "law_ids", "build_filter",
]
