import itertools
import json

import pytest
from hypothesis import given, strategies as st

from conftest import D2, D3, SIERPINSKI, SMALL_SPACES, small_spaces, space_and_subset
from hyperconv.errors import InconsistentSpec, NotATopology
from hyperconv.harness.enumerate import spaces_up_to
from hyperconv.space import (FiniteSpace, build_space, chain, components, continuous_maps,
                             discrete, disjoint_union, indiscrete, is_continuous, load_space,
                             point, product, separation_profile, sierpinski)


def test_sierpinski_from_opens():
    S = build_space({"points": 2, "opens": [[], [1], [0, 1]]})
    assert S.opens == (0b00, 0b10, 0b11)
    assert S.leq(0, 1) and not S.leq(1, 0)
    assert S == sierpinski()


def test_empty_preorder_is_discrete():
    X = build_space({"points": 3, "le": []})
    assert len(X.opens) == 8
    assert X == discrete(3)


def test_missing_union_rejected():
    with pytest.raises(NotATopology):
        build_space({"points": 2, "opens": [[], [0], [1]]})
    with pytest.raises(NotATopology):
        build_space({"points": 2, "opens": [[0], [0, 1]]})


def test_union_escape_rejected():
    # {0} ∪ {1} is missing even though X is present
    with pytest.raises(NotATopology):
        FiniteSpace(3, [0, 0b001, 0b010, 0b111])


@pytest.mark.parametrize("spec", [
    {"opens": [[]]},
    {"points": 2, "opens": [[0, 2]]},
    {"points": 2, "le": [[0, 5]]},
    {"points": 2, "opens": [], "le": []},
    {"points": -1, "opens": []},
    {"points": 2, "le": [[0, 1, 1]]},
])
def test_inconsistent_specs(spec):
    with pytest.raises(InconsistentSpec):
        build_space(spec)


def test_load_space(tmp_path):
    path = tmp_path / "s.json"
    path.write_text(json.dumps({"points": 2, "le": [[0, 1]]}))
    assert load_space(path) == SIERPINSKI


def test_interior_examples():
    assert SIERPINSKI.interior(0b01) == 0
    assert all(X.interior(X.full) == X.full for X in SMALL_SPACES)
    assert D3.interior(0b101) == 0b101


def test_continuous_maps_examples():
    tables = {m.table for m in continuous_maps(SIERPINSKI, SIERPINSKI)}
    assert tables == {(0, 0), (0, 1), (1, 1)}
    assert (1, 0) not in tables
    # maps into Sierpiński correspond to opens through f ↦ f⁻({1})
    pre = sorted(m.preimage(0b10) for m in continuous_maps(SIERPINSKI, SIERPINSKI))
    assert pre == list(SIERPINSKI.opens)
    for Z in (SIERPINSKI, D3, chain(3)):
        assert len(continuous_maps(point(), Z)) == Z.n


def test_components_examples():
    assert components(SIERPINSKI) == (0b11,)
    assert sorted(components(discrete(4))) == [1, 2, 4, 8]
    assert len(components(disjoint_union(SIERPINSKI, point()))) == 2


def test_product_examples():
    P = product(SIERPINSKI, SIERPINSKI)
    assert P.n == 4
    # point (a, b) is encoded as a + 2b; order is the product order of two chains
    for x, y in itertools.product(range(4), repeat=2):
        assert P.leq(x, y) == ((x & 1) <= (y & 1) and (x >> 1) <= (y >> 1))
    assert product(chain(3), point()).opens == chain(3).opens
    assert product(D2, D2) == discrete(4)


def test_separation_examples():
    assert separation_profile(SIERPINSKI)["t0"] and not separation_profile(SIERPINSKI)["t1"]
    assert separation_profile(SIERPINSKI)["normal"]
    assert all(separation_profile(discrete(n)).values() for n in (1, 2, 3))
    assert all(separation_profile(discrete(n))[k] for n in (1, 2, 3)
               for k in ("t0", "t1", "normal", "regular"))
    prof = separation_profile(indiscrete(2))
    assert (prof["t0"], prof["t1"], prof["normal"]) == (False, False, True)


# properties ---------------------------------------------------------------------

@given(small_spaces)
def test_alexandrov_round_trip(X):
    Y = FiniteSpace.from_preorder(X.n, X.specialization())
    assert Y.opens == X.opens


@given(space_and_subset())
def test_interior_is_a_kernel_operator(pair):
    X, s = pair
    i = X.interior(s)
    assert i & ~s == 0
    assert X.interior(i) == i
    assert X.is_open(i)
    assert (X.interior(s) == s) == X.is_open(s)
    assert X.closure(s) == X.full & ~X.interior(X.full & ~s)


@given(space_and_subset(), st.integers(0, 7))
def test_interior_monotone(pair, extra):
    X, s = pair
    bigger = (s | extra) & X.full
    assert X.interior(s) & ~X.interior(bigger) == 0


def test_composition_is_continuous():
    spaces = spaces_up_to(2, t0_only=False) + [chain(3), discrete(3)]
    for X, Y, Z in itertools.product(spaces, repeat=3):
        for f in continuous_maps(X, Y):
            for g in continuous_maps(Y, Z):
                assert is_continuous(X, Z, g.compose(f).table)


def test_maps_into_t1_are_constant_on_components():
    for X in spaces_up_to(4, t0_only=False):
        for Z in (discrete(2), discrete(3)):
            for f in continuous_maps(X, Z):
                for block in X.components:
                    assert len({f(x) for x in range(X.n) if block >> x & 1}) == 1


def test_spaces_are_hashable_values():
    assert len({sierpinski(), sierpinski(), chain(2)}) == 1
