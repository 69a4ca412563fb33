import itertools
import math
import pytest
from hypothesis import assume, given, settings, strategies as st
from HoroCalc.fan import (ColoredFan, Cone, HorosphericalDatum, cone_generators, decolorize, faces,
                          interior_partition, is_complete, locally_factorial_diagnostics, orbits, triangulate,
                          validate_fan)
from HoroCalc.roots import RootSystem


def torus(rank, rays, cones):
    fan = ColoredFan.build(rank, rays, [(idx, []) for idx in cones])
    return HorosphericalDatum(RootSystem.of(), frozenset(), fan, explicit_rho=())


SQUARE = Cone.of([(1, 0, 0), (0, 1, 0), (1, 0, 1), (0, 1, 1)])


def test_simplicial_cone():
    c = Cone.of([(1, 0), (1, 2)])
    assert c.dim == 2 and c.is_simplicial and c.is_strictly_convex
    assert len(c.facets) == 2
    assert c.contains((1, 1)) and not c.contains((0, 1))
    assert c.relint_contains((2, 1)) and not c.relint_contains((3, 0))
    assert len(c.faces()) == 4


def test_lower_dimensional_cone():
    c = Cone.of([(1, 0, 0), (0, 1, 0)])
    assert c.dim == 2
    assert c.equations == ((0, 0, 1),)
    assert not c.contains((1, 1, 1))
    assert c.relint_contains((1, 1, 0))


def test_non_simplicial_cone():
    assert SQUARE.dim == 3 and not SQUARE.is_simplicial
    assert len(SQUARE.facets) == 4
    assert SQUARE.redundant_rays() == []
    cells = triangulate(SQUARE)
    assert len(cells) == 2 and all(cell.is_simplicial for cell in cells)
    pieces = interior_partition(SQUARE)
    assert sorted(p.dim for p in pieces) == [2, 3, 3]
    # every piece sits inside the cone and off its boundary
    for p in pieces:
        point = tuple(sum(e[i] for e in p.rays) for i in range(3))
        assert SQUARE.relint_contains(point)


def test_cone_generators():
    rays = cone_generators([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, -1)], 3)
    assert set(rays) == set(SQUARE.rays) and len(rays) == 4
    # only the origin survives
    assert cone_generators([(1, 0), (0, 1), (-1, -1)], 2) == []
    with pytest.raises(ValueError):
        cone_generators([(1, 0, 0), (2, 0, 0)], 3)


def test_zero_cone():
    z = Cone.zero(2)
    assert z.dim == 0 and z.faces() == [z]
    assert interior_partition(z) == [z]


def test_golden_data_are_valid(load):
    for name in ("ex_q", "ex_grass", "q_bar", "x_bar", "toric_a1", "torus_line", "sp_standard"):
        assert validate_fan(load(name)) == [], name


@pytest.mark.parametrize("rays,cones,code", [
    ([(1, 0), (0, 1), (-1, -1)], [[0, 1, 2]], "StrictConvexity"),
    ([(1, 0), (1, 1), (0, 1)], [[0, 1, 2]], "RedundantRay"),
    ([(1, 0), (2, 0)], [[0, 1]], "NonPrimitiveRay"),
    ([(1, 0), (0, 1), (1, 1)], [[0, 1], [0, 2]], "FaceIntersection"),
    ([(1, 0), (-1, 0)], [[0, 1]], "ProportionalRays"),
])
def test_fan_violations(rays, cones, code):
    d = torus(2, rays, cones)
    assert code in {v.code for v in validate_fan(d)}


def test_color_violations(ex_q):
    bad = HorosphericalDatum(ex_q.rs, ex_q.I, ColoredFan.build(2, [(1, 0), (0, 1)], [([0], [1, 2])]),
                             weight_basis=ex_q.weight_basis)
    assert [v.code for v in validate_fan(bad)] == ["RhoNotInCone"]
    split = ColoredFan.build(2, [(1, 0), (0, 1), (-1, 0)], [([0, 1], [1, 2]), ([1, 2], [])])
    bad = HorosphericalDatum(ex_q.rs, ex_q.I, split, weight_basis=ex_q.weight_basis)
    assert [v.code for v in validate_fan(bad)] == ["FaceColors"]


def test_lattice_violation(ex_grass):
    bad = HorosphericalDatum(ex_grass.rs, ex_grass.I, ex_grass.fan, weight_basis=((1, 0, 1), (0, 1, 0)))
    assert "LatticeNotOrthogonal" in {v.code for v in validate_fan(bad)}


def test_orbits(ex_q, ex_grass):
    assert sorted(o.dim for o in orbits(ex_q)) == [0, 3, 3, 5]
    assert sorted(o.dim for o in orbits(ex_grass)) == [0, 4, 5, 7]
    found = orbits(ex_q)
    assert found[0].dim == ex_q.dimension == 5
    assert found[0].closure == (0, 1, 2, 3)
    assert found[-1].closure == (3,)
    assert len(found) == len(ex_q.cones)


def test_orbit_count_matches_cones(load):
    for name in ("q_bar", "x_bar", "toric_a1", "torus_line"):
        d = load(name)
        assert len(orbits(d)) == len(d.cones)
    assert len(load("q_bar").cones) == 7


def test_completeness(ex_q, q_bar):
    assert is_complete(q_bar.fan)
    assert not is_complete(ex_q.fan)


def test_decolorize(ex_q, load):
    assert decolorize(ex_q) == load("ex_q_toroidal")


def test_local_factoriality(ex_q):
    assert locally_factorial_diagnostics(ex_q) == []
    d = torus(2, [(1, 1), (1, -1)], [[0, 1]])
    found = locally_factorial_diagnostics(d)
    assert [x.condition for x in found] == ["NotPartialBasis"]
    assert "index 2" in found[0].message


def pointed_cone(points):
    """Cone over lattice points lifted to height 1, keeping the extreme rays only."""
    rays = sorted({(x, y, z) for x, y, z in points})
    c = Cone.of(rays)
    assume(c.dim == 3)
    redundant = set(c.redundant_rays())
    return Cone.of([e for i, e in enumerate(rays) if i not in redundant])


lifted = st.tuples(st.integers(min_value=-2, max_value=2), st.integers(min_value=-2, max_value=2), st.just(1))
tall = st.tuples(st.integers(min_value=-2, max_value=2), st.integers(min_value=-2, max_value=2),
                 st.integers(min_value=1, max_value=3)).filter(lambda v: math.gcd(*v) == 1)
cones3 = st.one_of(st.lists(lifted, min_size=3, max_size=6), st.lists(tall, min_size=3, max_size=3)).map(pointed_cone)

BOX = list(itertools.product(range(-3, 4), repeat=3))


@settings(max_examples=25, deadline=None)
@given(cones3)
def test_triangulation_tiles_the_cone(c):
    cells = triangulate(c)
    pieces = interior_partition(c)
    assert all(cell.is_simplicial for cell in cells)
    assert all(set(cell.rays) <= set(c.rays) for cell in cells)
    for p in BOX:
        inside = c.contains(p)
        assert inside == any(cell.contains(p) for cell in cells), p
        assert sum(cell.relint_contains(p) for cell in cells) <= 1, p
        # relative interiors of the pieces partition relint(c)
        assert sum(piece.relint_contains(p) for piece in pieces) == int(c.relint_contains(p)), p


@settings(max_examples=25, deadline=None)
@given(cones3)
def test_faces_are_closed(c):
    d = torus(3, list(c.rays), [list(range(len(c.rays)))])
    colored = d.fan.maximal_cones[0]
    first = {(f.cone.key, f.colors) for f in faces(colored, d)}
    second = {(g.cone.key, g.colors) for f in faces(colored, d) for g in faces(f, d)}
    assert first == second


def test_colored_faces_are_closed(ex_q, q_bar):
    for d in (ex_q, q_bar):
        for colored in d.fan.maximal_cones:
            first = {(f.cone.key, f.colors) for f in faces(colored, d)}
            second = {(g.cone.key, g.colors) for f in faces(colored, d) for g in faces(f, d)}
            assert first == second


@pytest.mark.parametrize("name", ["ex_q", "ex_grass", "q_bar", "x_bar", "toric_a1", "torus_line", "sp_standard"])
def test_decolorize_keeps_completeness(load, name):
    d = load(name)
    plain = decolorize(d)
    assert all(not c.colors for c in plain.fan.maximal_cones)
    assert is_complete(plain.fan) == is_complete(d.fan)
