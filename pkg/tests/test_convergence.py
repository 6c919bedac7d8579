import pytest
from hypothesis import given, strategies as st

from conftest import D2, D3, SIERPINSKI, SMALL_T0
from hyperconv._bits import members
from hyperconv.convergence import (Convergence, adherence, adherence_table, chaotic, classify,
                                   coarser, discrete_convergence, equal, initial,
                                   is_continuous_map, make_convergence, pointwise_adherence,
                                   reflect, tightness_at, topology_from_opens)
from hyperconv.errors import ArityMismatch, NotCentered, NotMonotone
from hyperconv.funcspace import function_carrier, natural_convergence
from hyperconv.hyperfamily import open_lattice, standard_alphas
from hyperconv.hyperspace import hyper_topology, scott_convergence


@st.composite
def convergences(draw, max_size=4):
    """Arbitrary finite convergences: intersect random sets over sub-kernels."""
    n = draw(st.integers(1, max_size))
    full = (1 << n) - 1
    raw = [full] + [draw(st.integers(0, full)) for _ in range(1, 1 << n)]
    for x in range(n):
        raw[1 << x] |= 1 << x
    table = [full] * (1 << n)
    for k in range(1, 1 << n):
        acc = raw[k]
        sub = (k - 1) & k
        while sub:
            acc &= table[sub]
            sub = (sub - 1) & k
        table[k] = acc
    return make_convergence(list(range(n)), table)


def test_chaotic_rule_is_valid():
    conv = make_convergence([0, 1, 2], lambda k: 0b111)
    assert classify(conv) == {"pseudotopology": True, "pretopology": True, "topology": True}


def test_subtle_monotone_pass():
    conv = make_convergence(["a", "b"], lambda k: k if bin(k).count("1") == 1 else 0)
    assert conv.lim(0b11) == 0


def test_validation_errors():
    with pytest.raises(NotCentered):
        make_convergence(["a", "b"], lambda k: 0)
    # the larger kernel {a,b} may not converge to more than its part {a}
    with pytest.raises(NotMonotone):
        make_convergence(["a", "b"], {1: 0b01, 2: 0b10, 3: 0b11})


def test_topology_convergence_is_topological():
    conv = topology_from_opens(range(3), [0, 0b001, 0b011, 0b111])
    assert all(classify(conv).values())
    assert all(classify(chaotic(range(3))).values())


def test_adherence_examples():
    sc = scott_convergence(SIERPINSKI)
    lat = open_lattice(SIERPINSKI)
    assert adherence(sc, lat.hyperset([0b11])) == lat.full
    p = hyper_topology(standard_alphas(D3)["p"])
    lat3 = open_lattice(D3)
    singles = lat3.hyperset([1, 2, 4])
    assert adherence(p, singles) == lat3.hyperset([0, 1, 2, 4])


def test_scott_on_discrete_two_is_pseudotopology():
    sc = scott_convergence(D2)
    assert sc.is_pseudotopology()
    assert all(sc.lim(k) == sc.pointwise_table()[k] for k in range(1, 16))


def test_topological_modification_of_scott_is_kappa():
    for X in SMALL_T0:
        T = reflect(scott_convergence(X), "T")
        assert equal(T, hyper_topology(standard_alphas(X)["kappa"]))


def test_reflect_fixed_points():
    top = topology_from_opens(range(3), [0, 0b001, 0b011, 0b111])
    assert equal(reflect(top, "T"), top) and equal(reflect(top, "P"), top)
    ch = chaotic(range(3))
    assert equal(reflect(ch, "P"), ch)
    with pytest.raises(ValueError):
        reflect(ch, "Q")


def test_initial_examples():
    sc = scott_convergence(SIERPINSKI)
    copied = initial([list(range(sc.size))], [sc], sc.carrier)
    assert equal(copied, sc)
    assert equal(initial([], [], range(3)), chaotic(range(3)))
    with pytest.raises(ArityMismatch):
        initial([[0]], [], range(1))
    with pytest.raises(ArityMismatch):
        initial([[0, 5]], [sc], range(2))


def test_initial_through_preimage_maps_is_natural():
    for Z in (SIERPINSKI, D2):
        for X in SMALL_T0[:8]:
            fc = function_carrier(X, Z)
            sc = scott_convergence(X)
            maps = [[X.open_index[fc.preimage(f, u)] for f in range(fc.size)] for u in Z.opens]
            lifted = initial(maps, [sc] * len(maps), range(fc.size))
            assert equal(lifted, natural_convergence(X, Z))


def test_tightness_examples():
    assert tightness_at(chaotic(range(3)), 0) == 1
    assert tightness_at(discrete_convergence(range(3)), 1) == 1


# properties ---------------------------------------------------------------------

@given(convergences())
def test_reflections_idempotent_and_ordered(conv):
    P, T = reflect(conv, "P"), reflect(conv, "T")
    assert equal(reflect(P, "P"), P) and equal(reflect(T, "T"), T)
    assert coarser(T, P) and coarser(P, conv)
    assert classify(T)["topology"]
    assert classify(P)["pretopology"]


@given(convergences(), convergences())
def test_reflections_monotone(a, b):
    if a.size != b.size:
        return
    table = [a.full] + [a.lim(k) | b.lim(k) for k in range(1, 1 << a.size)]
    meet = make_convergence(a.carrier, table)
    # meet is coarser than both; reflection keeps that order
    for level in ("P", "T"):
        assert coarser(reflect(meet, level), reflect(a, level))


@given(convergences(), st.integers(0, 15))
def test_adherence_collapse(conv, subset):
    subset &= conv.full
    brute = 0
    for k in range(1, 1 << conv.size):
        if k & subset:
            brute |= conv.lim(k)
    assert adherence(conv, subset) == brute == pointwise_adherence(conv, subset)
    assert adherence_table(conv)[subset] == brute


@given(convergences())
def test_finite_tightness_is_one(conv):
    for x in range(conv.size):
        assert tightness_at(conv, x) == 1


@given(convergences())
def test_identity_initial_keeps_class(conv):
    copied = initial([list(range(conv.size))], [conv], conv.carrier)
    assert equal(copied, conv)
    assert classify(copied) == classify(conv)


@given(convergences())
def test_identity_map_continuity(conv):
    assert is_continuous_map(conv, conv, list(range(conv.size)))
    assert is_continuous_map(conv, chaotic(conv.carrier), list(range(conv.size)))


def test_vicinity_pseudotopology_matches_table():
    conv = Convergence.from_vicinities(range(3), [0b011, 0b010, 0b110])
    for k in range(1, 8):
        expected = sum(1 << x for x, v in enumerate([0b011, 0b010, 0b110]) if k & ~v == 0)
        assert conv.lim(k) == expected
    assert list(members(0b101)) == [0, 2]
