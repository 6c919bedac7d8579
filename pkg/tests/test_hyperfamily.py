import itertools

import pytest
from hypothesis import given, strategies as st

from conftest import D2, D3, SIERPINSKI, SMALL_SPACES, small_spaces, small_t0, space_and_kernel
from hyperconv.errors import DegenerateFilter, NotIsotone
from hyperconv.hyperfamily import (AlphaCollection, HyperFilter, IsotoneFamily, family_leq,
                                   ideal_ops, is_compact_family, is_functionally_separated,
                                   is_ideal_subbase, isotone_family, mesh, o_natural, open_lattice,
                                   principal_family, reduced_ideal, refines, standard_alphas)

A, B = 0b01, 0b10


def test_isotone_family_examples():
    fam = isotone_family(D2, [A])
    assert fam.minimals == (A,)
    assert set(fam.members()) == {A, 0b11}
    assert isotone_family(SIERPINSKI, [0b01]).minimals == (0b11,)
    assert isotone_family(D2, [A, B]).minimals == (A, B)


def test_isotone_family_rejects_bad_minimals():
    with pytest.raises(NotIsotone):
        IsotoneFamily(SIERPINSKI, [0b01])
    with pytest.raises(NotIsotone):
        IsotoneFamily(D2, [A, 0b11])
    with pytest.raises(NotIsotone):
        IsotoneFamily.from_hyperset(D2, 0b0010)


def test_compactness_examples():
    assert is_compact_family(IsotoneFamily(D3, []))
    assert is_compact_family(IsotoneFamily(D3, [D3.full]))
    for X in SMALL_SPACES:
        lat = open_lattice(X)
        for ac in lat.antichains():
            assert is_compact_family(IsotoneFamily(X, lat.opens_of(ac)))


def test_standard_alpha_sizes():
    assert len(standard_alphas(D2)["kappa"]) == 6
    assert len(standard_alphas(SIERPINSKI)["kappa"]) == 4
    for X in SMALL_SPACES:
        assert len(standard_alphas(X)["s"]) == len({X.up[x] for x in range(X.n)})


def test_kappa_count_matches_antichain_oracle():
    # brute force: up-sets of the open lattice, counted over all subsets of opens
    for X in SMALL_SPACES:
        opens = X.opens
        upsets = 0
        for bits in range(1 << len(opens)):
            chosen = [u for i, u in enumerate(opens) if bits >> i & 1]
            if all(v in chosen for u in chosen for v in opens if u & ~v == 0):
                upsets += 1
        assert len(standard_alphas(X)["kappa"]) == upsets


def test_mesh_and_refine_examples():
    P, R = [A], [0b11]
    assert refines(P, R)
    assert mesh([open_lattice(D2).hyperset(R)], o_natural(D2, P))
    assert refines(P, P)
    assert not refines([A], [B])
    assert not mesh([open_lattice(D2).hyperset([B])], o_natural(D2, [A]))
    # a set meshes a family when it meets every member
    assert mesh(0b11, [A, B]) and not mesh(A, [A, B])


def test_ideal_ops_examples():
    info = ideal_ops([1, 2, 4])
    assert not info.is_ideal_subbase
    assert info.ideal_closure == frozenset(range(1, 8))
    chain = [0b001, 0b011, 0b111]
    assert is_ideal_subbase(chain) and ideal_ops(chain).ideal_closure == frozenset(chain)
    info = ideal_ops([0])
    assert info.is_ideal_subbase and info.ideal_closure == frozenset({0})


def test_reduced_ideal_examples():
    lat = open_lattice(D2)
    assert reduced_ideal(HyperFilter(D2, lat.hyperset([A, 0b11]))) == {0, A}
    assert D2.full in reduced_ideal(HyperFilter(D2, lat.hyperset([0b11])))
    assert 0 in reduced_ideal(HyperFilter(D2, lat.full))


def test_reduced_ideal_oracle():
    for X in SMALL_SPACES:
        lat = open_lattice(X)
        for k in range(1, 1 << lat.m):
            brute = set()
            for s in range(1, 1 << lat.m):
                if s & k == k:
                    acc = X.full
                    for u in lat.opens_of(s):
                        acc &= u
                    brute.add(acc)
            assert reduced_ideal(HyperFilter(X, k)) == brute


def test_functional_separation_examples():
    res = is_functionally_separated(principal_family(D2, A))
    assert res.separated
    found, h = res.witnesses[A]
    assert found == A and h == (0, 1)
    res = is_functionally_separated(principal_family(SIERPINSKI, 0b10))
    assert not res.separated and res.failure == 0b10
    assert is_functionally_separated(IsotoneFamily(SIERPINSKI, [0b11])).separated


def test_filter_lattice_ops():
    lat = open_lattice(D2)
    a = HyperFilter(D2, lat.hyperset([A, 0b11]))
    b = HyperFilter(D2, lat.hyperset([B, 0b11]))
    assert a.sup(b).kernel == lat.hyperset([0b11])
    assert a.inf(b).kernel == lat.hyperset([A, B, 0b11])
    assert a.inf(b).leq(a) and a.leq(a.sup(b))
    with pytest.raises(DegenerateFilter):
        HyperFilter(D2, lat.hyperset([A])).sup(HyperFilter(D2, lat.hyperset([B])))
    with pytest.raises(DegenerateFilter):
        HyperFilter(D2, 0)


def test_intersection_closure():
    s = standard_alphas(D2)["s"]
    assert not s.is_intersection_closed()
    closed = s.intersection_closure()
    assert closed.is_intersection_closed()
    assert set(s.hypersets) <= set(closed.hypersets)


# properties ---------------------------------------------------------------------

def _open_family(X, bits):
    return [u for i, u in enumerate(X.opens) if bits >> i & 1]


@given(small_spaces, st.integers(0, 255), st.integers(0, 255))
def test_refine_equivalence(X, pbits, rbits):
    P = [s for s in range(1 << X.n) if pbits >> s & 1]
    R = _open_family(X, rbits)
    lat = open_lattice(X)
    one = mesh([lat.hyperset(R)], o_natural(X, P))
    assert one == refines(P, R) == family_leq(o_natural(X, P), o_natural(X, R))


@given(small_spaces, st.integers(0, 255))
def test_filter_base_iff_ideal_subbase(X, bits):
    P = _open_family(X, bits)
    base = o_natural(X, P)
    is_base = bool(base) and all(any(c & ~(a & b) == 0 for c in base) for a in base for b in base)
    assert is_base == is_ideal_subbase(P)


@given(small_t0)
def test_canonical_form_round_trip(X):
    lat = open_lattice(X)
    for ac in lat.antichains():
        fam = IsotoneFamily(X, lat.opens_of(ac))
        assert isotone_family(X, fam.members()) == fam
        assert IsotoneFamily.from_hyperset(X, fam.hyperset) == fam


@given(space_and_kernel())
def test_regularize_is_upward_closure(pair):
    X, k = pair
    gamma = HyperFilter(X, k)
    reg = gamma.regularize()
    assert reg.is_regular and reg.leq(gamma)
    assert reg.regularize() == reg


@given(small_t0)
def test_finite_collapse(X):
    A = standard_alphas(X)
    assert set(A["p"]) == set(A["k"]) == set(A["kappa"])
    assert all(is_compact_family(f) for f in A["kappa"])


def test_alpha_collection_identity():
    A = standard_alphas(D2)
    assert AlphaCollection(D2, list(A["p"])) == A["kappa"]
    assert len({A["p"], A["kappa"]}) == 1
    fams = list(itertools.islice(iter(A["s"]), 1))
    assert AlphaCollection(D2, fams).nondegenerate
    assert not AlphaCollection(D2, [IsotoneFamily(D2, [])]).nondegenerate
