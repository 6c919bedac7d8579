import itertools

import pytest
from hypothesis import given, strategies as st

from conftest import D2, D3, SIERPINSKI, SMALL_SPACES, SMALL_T0, small_t0, spaces_4
from hyperconv._bits import as_list
from hyperconv.convergence import (Convergence, adherence, adherence_table, chaotic, coarser,
                                   equal, topology_from_opens)
from hyperconv.errors import DegenerateAlpha, NotACover
from hyperconv.hyperfamily import (AlphaCollection, IsotoneFamily, open_lattice,
                                   principal_family, standard_alphas)
from hyperconv.hyperspace import (HyperConvergence, adherence_cover_table, arens_number,
                                  arens_number_bruteforce, complement_view, cover_numbers,
                                  cover_predicates, hyper_topology, is_alpha_cover,
                                  lindelof_number, lindelof_via_adherence, lower_witness,
                                  scott_convergence, selection, solidity_check,
                                  upper_kuratowski_view)


def _lim(tau, X, kernel_opens):
    lat = open_lattice(X)
    return [as_list(u) for u in lat.opens_of(tau.lim(lat.hyperset(kernel_opens)))]


def test_scott_examples():
    sc = scott_convergence(SIERPINSKI)
    assert _lim(sc, SIERPINSKI, [0b10, 0b11]) == [[], [1]]
    assert _lim(sc, SIERPINSKI, [0b11]) == [[], [1], [0, 1]]
    assert _lim(scott_convergence(D2), D2, [0b01, 0b10]) == [[]]


def test_scott_literal_equals_reduced():
    for X in SMALL_SPACES:
        assert equal(scott_convergence(X, literal=True), scott_convergence(X, literal=False))


def test_hyper_topology_examples():
    lat = open_lattice(SIERPINSKI)
    tau = hyper_topology(standard_alphas(SIERPINSKI)["kappa"])
    # Alexandrov topology of the chain ∅ < {1} < X: the limits of {A} are the opens below A
    assert tau.singleton_limits() == tuple(lat.below)
    full = AlphaCollection(D2, [IsotoneFamily(D2, [0])])
    assert equal(hyper_topology(full), chaotic(D2.opens))
    s = hyper_topology(standard_alphas(D2)["s"])
    lat2 = open_lattice(D2)
    a, b = principal_family(D2, 0b01).hyperset, principal_family(D2, 0b10).hyperset
    assert equal(s, topology_from_opens(D2.opens, [0, a, b, a & b, a | b, lat2.full]))
    with pytest.raises(DegenerateAlpha):
        hyper_topology(AlphaCollection(D2, [IsotoneFamily(D2, [])]))


def test_solidity_examples():
    for X in SMALL_T0:
        assert solidity_check(scott_convergence(X)).solid
        assert solidity_check(hyper_topology(standard_alphas(X)["kappa"])).solid
    lat = open_lattice(SIERPINSKI)
    isolated = HyperConvergence.wrap(SIERPINSKI, Convergence.from_vicinities(
        SIERPINSKI.opens, [1 << i for i in range(lat.m)]))
    rep = solidity_check(isolated)
    assert not rep.lower and not rep.solid
    assert lower_witness(isolated) is not None


def test_cover_examples():
    singles = [1, 2, 4]
    s3, p3 = standard_alphas(D3)["s"], standard_alphas(D3)["p"]
    pred = cover_predicates(singles, s3, D3.full)
    assert pred.is_cover and pred.is_alpha_cover
    assert not cover_predicates([0b01], None, 0b11).is_cover
    assert not is_alpha_cover(singles, p3)


def test_cover_number_examples():
    assert lindelof_number(standard_alphas(D3)["s"], D3.full) == 3
    for X in SMALL_SPACES:
        kappa = standard_alphas(X)["kappa"]
        assert lindelof_number(kappa, X.full) == 1
    kappa = standard_alphas(SIERPINSKI)["kappa"]
    assert cover_numbers(kappa, SIERPINSKI.full).arens == 1
    assert arens_number_bruteforce(kappa, SIERPINSKI.full) == 1


def _lindelof_bruteforce(alpha, U):
    """Max over α-covers P of the least α-subcover size, by enumerating subsets."""
    opens = alpha.space.opens
    best = 0
    for r in range(len(opens) + 1):
        for P in itertools.combinations(opens, r):
            if not is_alpha_cover(P, alpha, U):
                continue
            least = next(k for k in range(len(P) + 1)
                         if any(is_alpha_cover(Q, alpha, U) for Q in itertools.combinations(P, k)))
            best = max(best, least)
    return best


def test_lindelof_oracle():
    for X in SMALL_SPACES:
        for label in ("s", "p", "kappa"):
            alpha = standard_alphas(X)[label]
            for U in X.opens:
                assert lindelof_number(alpha, U) == _lindelof_bruteforce(alpha, U)
                assert lindelof_via_adherence(alpha, U) == lindelof_number(alpha, U)


def test_selection_examples():
    s3 = standard_alphas(D3)["s"]
    singles = [1, 2, 4]
    assert selection(s3, [singles, singles], "rothberger").choice is None
    hure = selection(s3, [singles, singles], "hurewicz")
    assert hure.bound == 2
    chosen = [u for part in hure.choice for u in part]
    assert is_alpha_cover(chosen, s3)
    assert selection(s3, [[D3.full, 1]], "rothberger").choice == (D3.full,)
    empty = selection(s3, [], "hurewicz")
    assert empty.choice is None and empty.reason
    with pytest.raises(NotACover):
        selection(s3, [singles, [1]], "hurewicz")
    with pytest.raises(ValueError):
        selection(s3, [singles], "menger")


def test_upper_kuratowski_examples():
    uk = upper_kuratowski_view(SIERPINSKI)
    closed = uk.carrier
    idx = {c: i for i, c in enumerate(closed)}
    lim = uk.lim(1 << idx[0b01])
    assert {closed[i] for i in range(len(closed)) if lim >> i & 1} == {0b01, 0b11}
    assert uk.lim(1 << idx[0]) == (1 << len(closed)) - 1
    for X in SMALL_SPACES:
        a, b = upper_kuratowski_view(X), complement_view(scott_convergence(X))
        assert a.carrier == b.carrier and equal(a, b)


# properties ---------------------------------------------------------------------

@given(spaces_4)
def test_lemma_closure_and_t0_not_t1(X):
    lat = open_lattice(X)
    sc = scott_convergence(X)
    for label in ("p", "kappa", "s"):
        tau = hyper_topology(standard_alphas(X)[label])
        assert coarser(tau, sc)
        assert tau.singleton_limits() == tuple(lat.below)
    if X.n:
        assert sc.lim(1 << lat.index[X.full]) >> lat.index[0] & 1


@given(small_t0, st.data())
def test_lower_topologies_are_upper_regular(X, data):
    lat = open_lattice(X)
    subbase = data.draw(st.lists(st.integers(0, lat.full), max_size=4))
    subbase = [lat.upclose(h) if data.draw(st.booleans()) else h for h in subbase]
    tau = hyper_topology_from(X, subbase)
    rep = solidity_check(tau)
    if rep.lower:
        assert rep.upper_regular


def hyper_topology_from(X, subbase):
    return HyperConvergence.wrap(X, topology_from_opens(X.opens, subbase))


@given(small_t0)
def test_adhalpha_through_covers(X):
    lat = open_lattice(X)
    for label in ("p", "kappa"):
        alpha = standard_alphas(X)[label]
        adh = adherence_table(hyper_topology(alpha))
        for h in range(1, 1 << lat.m):
            P = lat.opens_of(h)
            for i, U in enumerate(X.opens):
                assert bool(adh[h] >> i & 1) == is_alpha_cover(P, alpha, U)


@given(small_t0)
def test_cover_table_routes_agree(X):
    for label in ("s", "p", "kappa"):
        alpha = standard_alphas(X)[label]
        for U in X.opens:
            lat = open_lattice(X)
            table = adherence_cover_table(alpha, U)
            assert table == [is_alpha_cover(lat.opens_of(h), alpha, U) for h in range(1 << lat.m)]


@given(small_t0)
def test_arens_oracle(X):
    for label in ("s", "p", "kappa"):
        alpha = standard_alphas(X)[label]
        for U in X.opens:
            assert arens_number(alpha, U) == arens_number_bruteforce(alpha, U)


def test_scott_adherence_of_principal():
    sc = scott_convergence(SIERPINSKI)
    assert adherence(sc, 0) == 0
