import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from equiproj.geometry import canonical_direction, orientation, primitive
from equiproj.lattice import canonical_code, face_lattice_isomorphic
from equiproj.errors import ResourceBudgetError
from equiproj.minkowski import GeneratorSet, zonotope
from equiproj.polytope import hull3, is_extreme_everywhere, transform
from equiproj import shapes

from oracles import incidence_graph_isomorphic, lp_is_extreme

coord = st.integers(-6, 6)
point = st.tuples(coord, coord, coord)


def test_orientation_examples():
    o = (0, 0, 0)
    assert orientation(o, (1, 0, 0), (0, 1, 0), (0, 0, 1)) == 1
    assert orientation(o, (1, 0, 0), (0, 1, 0), (0, 0, -1)) == -1
    assert orientation(o, (1, 0, 0), (0, 1, 0), (5, 7, 0)) == 0


def test_orientation_is_exact_on_rationals():
    # four points on the plane x + y + z = 1
    a = (Fraction(1, 3), Fraction(1, 3), Fraction(1, 3))
    b = (Fraction(1, 10), Fraction(2, 5), Fraction(1, 2))
    c = (Fraction(1, 7), Fraction(3, 7), Fraction(3, 7))
    d = (Fraction(2, 3), Fraction(1, 9), Fraction(2, 9))
    assert orientation(a, b, c, d) == 0
    nudged = (d[0], d[1], d[2] + Fraction(1, 10**30))
    assert orientation(a, b, c, nudged) != 0
    assert orientation(a, b, c, nudged) == -orientation(a, b, c, (d[0], d[1], d[2] - Fraction(1, 10**30)))


@given(point, point, point, point)
def test_orientation_antisymmetric(a, b, c, d):
    s = orientation(a, b, c, d)
    assert orientation(b, a, c, d) == -s
    assert orientation(a, c, b, d) == -s
    assert orientation(a, b, d, c) == -s


def test_primitive_and_canonical():
    assert primitive((2, 4, 6)) == (1, 2, 3)
    assert primitive((Fraction(1, 2), 1, 0)) == (1, 2, 0)
    assert canonical_direction((0, -2, 4)) == (0, 1, -2)


def test_cube_combinatorics(cube):
    assert cube.f_vector == (8, 12, 6)
    assert len(cube.vertices) == 8


def test_tetrahedron_combinatorics(tetrahedron):
    assert tetrahedron.f_vector == (4, 6, 4)


def test_interior_points_dropped():
    pts = [(0, 0, 0), (4, 0, 0), (0, 4, 0), (0, 0, 4), (1, 1, 1), (Fraction(1, 2), 1, 1)]
    P = hull3(pts)
    assert len(P.vertices) == 4
    hull_vertices = set(P.vertices)
    for i, p in enumerate(pts):
        others = pts[:i] + pts[i + 1:]
        assert lp_is_extreme(p, others) == (tuple(map(Fraction, p)) in hull_vertices)


def test_lower_dimensional_inputs():
    pt = hull3([(1, 2, 3), (1, 2, 3)])
    assert pt.dim == 0 and len(pt.faces) == 2
    seg = hull3([(0, 0, 0), (2, 4, 6), (1, 2, 3)])
    assert seg.dim == 1 and len(seg.vertices) == 2
    assert [f.dim for f in seg.faces] == [-1, 0, 0, 1]
    sq = hull3([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0), (Fraction(1, 2), 0, 0)])
    assert sq.dim == 2 and sq.f_vector == (4, 4)
    assert all(len(fs) == 1 for fs in sq.edge_facets.values())


def _random_hulls(seed, count, lo=-4, hi=4):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        pts = [tuple(rng.randint(lo, hi) for _ in range(3)) for _ in range(rng.randint(4, 20))]
        P = hull3(pts)
        if P.dim == 3:
            out.append((pts, P))
    return out


@pytest.mark.parametrize("pts,P", _random_hulls(11, 25))
def test_random_hull_invariants(pts, P):
    V, E, F = P.f_vector
    assert V - E + F == 2
    assert is_extreme_everywhere(P) is None
    assert all(len(fs) == 2 for fs in P.edge_facets.values())
    # every facet edge is a lattice edge and face inclusion follows vertex sets
    for fedges in P.facet_edges:
        assert all(e in P.edge_facets for e in fedges)
    # idempotence and independence from input order
    assert hull3(list(P.vertices)).facets == P.facets
    shuffled = list(pts)
    random.Random(0).shuffle(shuffled)
    assert hull3(shuffled).facets == P.facets


def test_hull_vertices_match_lp_oracle():
    rng = random.Random(5)
    for _ in range(10):
        pts = list({tuple(rng.randint(-3, 3) for _ in range(3)) for _ in range(12)})
        P = hull3(pts)
        verts = set(P.vertices)
        for i, p in enumerate(pts):
            assert lp_is_extreme(p, pts[:i] + pts[i + 1:]) == (tuple(map(Fraction, p)) in verts)


def test_lattice_closed_under_intersection(cube):
    sets = {f.vertices for f in cube.faces}
    for a, b in itertools.combinations(sets, 2):
        assert a & b in sets


def test_polygon_euler():
    P = shapes.polygon(7)
    V, E = P.f_vector
    assert V == E == 7


# face-lattice isomorphism


def test_cube_vs_independent_zonotope(cube):
    Z = zonotope(GeneratorSet(((1, 0, 0), (1, 2, 0), (3, -1, 5))))
    assert face_lattice_isomorphic(cube, Z)
    # explicit bijection: subset sums of generators correspond to cube corners
    g = [(1, 0, 0), (1, 2, 0), (3, -1, 5)]
    phi = {}
    for s in itertools.product((0, 1), repeat=3):
        corner = tuple(Fraction(c) for c in s)
        image = tuple(Fraction(sum(s[i] * g[i][k] for i in range(3))) for k in range(3))
        phi[cube.vertices.index(corner)] = Z.vertices.index(image)
    z_facets = {frozenset(f) for f in Z.facets}
    assert {frozenset(phi[i] for i in f) for f in cube.facets} == z_facets
    assert incidence_graph_isomorphic(cube, Z)


def test_cube_vs_tetrahedron(cube, tetrahedron):
    assert not face_lattice_isomorphic(cube, tetrahedron)


def test_rotated_copy_isomorphic():
    P = hull3([(0, 0, 0), (3, 1, 0), (1, 4, 2), (-2, 1, 3), (1, 1, -3), (2, 2, 2)])
    rot = [(Fraction(3, 5), Fraction(-4, 5), 0), (Fraction(4, 5), Fraction(3, 5), 0), (0, 0, 1)]
    Q = transform(P, rot)
    assert face_lattice_isomorphic(P, Q)
    assert canonical_code(P) == canonical_code(Q)


def test_mirror_image_isomorphic():
    P = hull3([(0, 0, 0), (3, 1, 0), (1, 4, 2), (-2, 1, 3), (1, 1, -3), (2, 2, 5)])
    Q = transform(P, [(-1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert face_lattice_isomorphic(P, Q)


@pytest.mark.parametrize("seed", range(8))
def test_isomorphism_agrees_with_networkx(seed):
    rng = random.Random(seed)
    P = _random_hulls(100 + seed, 1, -2, 2)[0][1]
    Q = _random_hulls(200 + rng.randint(0, 3), 1, -2, 2)[0][1]
    assert face_lattice_isomorphic(P, Q) == incidence_graph_isomorphic(P, Q)
    assert face_lattice_isomorphic(P, P)


def test_isomorphism_budget():
    P = shapes.prism(10)
    Q = shapes.prism(10)
    with pytest.raises(ResourceBudgetError):
        face_lattice_isomorphic(P, Q, node_budget=10)
