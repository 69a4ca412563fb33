import pytest
from math import gcd
from hypothesis import HealthCheck, assume, given, reject, settings, strategies as st
from HoroCalc.fan import ColoredFan, Cone, HorosphericalDatum, validate_fan
from HoroCalc.roots import RootSystem
from HoroCalc.stringy import SeriesOracle, compare_oracle, series_oracle
from HoroCalc.zlinalg import rank
from HoroCalc.errors import NotQGorenstein

GOLDEN = ("ex_q", "ex_grass", "q_bar", "x_bar", "toric_a1", "torus_line", "sp_standard", "ex_q_toroidal")


def torus(rank_, rays, cones):
    fan = ColoredFan.build(rank_, rays, [(idx, []) for idx in cones])
    return HorosphericalDatum(RootSystem.of(), frozenset(), fan, explicit_rho=())


def test_series_oracle_counts(ex_q, load):
    assert series_oracle(ex_q, 4) == [(0, 1), (-2, 2), (-4, 3)]
    assert series_oracle(load("toric_a1"), 2) == [(0, 1), (-1, 3), (-2, 5)]
    zero = torus(2, [], [[]])
    assert series_oracle(zero, 5) == [(0, 1)]


@pytest.mark.parametrize("name", GOLDEN)
def test_oracle_matches_golden(load, name):
    result = compare_oracle(load(name))
    assert result.passed, result.mismatches


def test_oracle_bound(ex_q):
    result = compare_oracle(ex_q, bound=6)
    assert result.bound == 6 and result.passed
    assert SeriesOracle(bound_factor=3).compare(ex_q).bound == 6
    assert result.to_dict()["passed"] is True


def test_oracle_fractional_exponents():
    d = torus(2, [(1, 0), (2, 3)], [[0, 1]])
    result = compare_oracle(d, bound=5)
    assert result.passed
    assert any(e.denominator == 3 for e, _ in result.observed)


def test_oracle_non_simplicial():
    d = torus(3, [(1, 0, 0), (0, 1, 0), (1, 0, 1), (0, 1, 1)], [[0, 1, 2, 3]])
    assert compare_oracle(d).passed


def test_oracle_lower_dimensional_cones():
    d = torus(3, [(1, 0, 0), (1, 2, 0), (0, 0, 1)], [[0, 1], [2]])
    assert compare_oracle(d, bound=6).passed


def test_oracle_requires_omega():
    d = torus(3, [(1, 0, 0), (0, 1, 0), (1, 0, 1), (0, 2, 1)], [[0, 1, 2, 3]])
    with pytest.raises(NotQGorenstein):
        compare_oracle(d)


vectors = st.tuples(st.integers(min_value=-3, max_value=3), st.integers(min_value=-3, max_value=3))


@settings(max_examples=20, deadline=None)
@given(vectors, vectors)
def test_oracle_random_simplicial_cones(a, b):
    assume(rank([a, b]) == 2)
    assume(gcd(*a) == 1 and gcd(*b) == 1)
    assert compare_oracle(torus(2, [a, b], [[0, 1]]), bound=5).passed


def extreme(rays):
    c = Cone.of(sorted(set(rays)))
    assume(c.dim == 3)
    redundant = set(c.redundant_rays())
    return [e for i, e in enumerate(c.rays) if i not in redundant]


coordinate = st.integers(min_value=-2, max_value=2)
# rays at height one: the cone is Gorenstein, and usually not simplicial
polygon_cones = st.lists(st.tuples(coordinate, coordinate, st.just(1)), min_size=3, max_size=6).map(extreme)
# three rays of mixed height: simplicial, usually not unimodular
tall_cones = st.lists(st.tuples(coordinate, coordinate, st.integers(min_value=1, max_value=3))
                      .filter(lambda v: gcd(*v) == 1), min_size=3, max_size=3).map(extreme)


@settings(max_examples=15, deadline=None)
@given(st.one_of(polygon_cones, tall_cones))
def test_oracle_random_rank_three_cones(rays):
    assert compare_oracle(torus(3, rays, [list(range(len(rays)))]), bound=4).passed


A3 = RootSystem.of(('A', 3))
IDENTITY = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


@settings(max_examples=15, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(coordinate, coordinate, st.integers(min_value=1, max_value=3), st.sets(st.sampled_from([1, 2, 3])))
def test_oracle_random_colored_cones(x, y, z, colors):
    # rho of node a is the a-th unit vector; e1 and e2 are rays, so colors 1 and 2 sit on rays
    v = (x, y, z)
    assume(gcd(*v) == 1)
    rays = [(1, 0, 0), (0, 1, 0), v]
    cone = Cone.of(rays)
    colors = sorted(a for a in colors if cone.contains(IDENTITY[a - 1]))
    fan = ColoredFan.build(3, rays, [([0, 1, 2], colors)])
    d = HorosphericalDatum(A3, frozenset(), fan, weight_basis=IDENTITY)
    assume(validate_fan(d) == [])
    try:
        result = compare_oracle(d, bound=4)
    except NotQGorenstein:
        reject()
    assert result.passed, result.mismatches


def test_oracle_colored_non_unimodular():
    rays = [(1, 0, 0), (0, 1, 0), (1, 1, 3)]
    fan = ColoredFan.build(3, rays, [([0, 1, 2], [1, 2])])
    d = HorosphericalDatum(A3, frozenset(), fan, weight_basis=IDENTITY)
    assert validate_fan(d) == []
    assert compare_oracle(d, bound=5).passed
