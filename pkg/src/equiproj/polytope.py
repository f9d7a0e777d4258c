"""Exact convex hulls in R^3 and the face lattice of the result.

The hull is computed by gift wrapping on integer coordinates (the input is
multiplied by the common denominator of its coordinates, which changes no
sign and no direction).  Coplanar input is the normal case here, not an
exception: a facet is always the full set of input points on a supporting
plane, and its boundary is taken with a 2D hull, so zonotope faces with many
coplanar points come out as single polygons.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, FrozenSet, List, NamedTuple, Optional, Sequence, Tuple

from .geometry import (
    IVec3,
    Vec3,
    canonical_direction,
    common_denominator,
    cross,
    dot,
    is_zero,
    neg,
    orientation,
    primitive,
    sign,
    sub,
    vec,
)

Edge = Tuple[int, int]


class Face(NamedTuple):
    vertices: FrozenSet[int]
    dim: int


@dataclass(frozen=True, eq=False)
class Polytope3:
    """A convex polytope in R^3 of dimension 0 to 3 with its face lattice.

    ``facets`` holds vertex cycles.  For a 3-polytope each cycle runs
    counterclockwise seen from outside, and ``facet_normals[i]`` is the
    primitive outward normal of facet ``i``.  A polygon has a single facet,
    itself, whose normal is the canonical plane normal and whose cycle runs
    counterclockwise around that normal.  Segments and points have no facets.
    """

    vertices: Tuple[Vec3, ...]
    dim: int
    facets: Tuple[Tuple[int, ...], ...]
    facet_normals: Tuple[IVec3, ...]
    edges: Tuple[Edge, ...]
    edge_facets: Dict[Edge, Tuple[int, ...]] = field(repr=False)

    @cached_property
    def scale(self) -> int:
        return common_denominator(c for v in self.vertices for c in v)

    @cached_property
    def int_vertices(self) -> Tuple[IVec3, ...]:
        """Vertices multiplied by ``scale``; exact integers."""
        s = self.scale
        return tuple(tuple(int(c * s) for c in v) for v in self.vertices)

    @cached_property
    def facet_offsets(self) -> Tuple[Fraction, ...]:
        """``c`` in the facet inequality ``n . x <= c``."""
        return tuple(
            dot(n, self.vertices[f[0]]) for n, f in zip(self.facet_normals, self.facets)
        )

    @cached_property
    def faces(self) -> Tuple[Face, ...]:
        """Every face, empty face and the polytope itself included, by dimension."""
        out = [Face(frozenset(), -1)]
        out += [Face(frozenset([i]), 0) for i in range(len(self.vertices))]
        if self.dim >= 1:
            out += [Face(frozenset(e), 1) for e in self.edges]
        if self.dim >= 2:
            out += [Face(frozenset(f), 2) for f in self.facets]
        if self.dim == 3:
            out.append(Face(frozenset(range(len(self.vertices))), 3))
        return tuple(out)

    @cached_property
    def face_index(self) -> Dict[FrozenSet[int], int]:
        return {f.vertices: i for i, f in enumerate(self.faces)}

    @cached_property
    def f_vector(self) -> Tuple[int, ...]:
        """Counts of proper nonempty faces by dimension."""
        counts = [0] * self.dim
        for f in self.faces:
            if 0 <= f.dim < self.dim:
                counts[f.dim] += 1
        return tuple(counts)

    @cached_property
    def facet_of_normal(self) -> Dict[IVec3, int]:
        return {n: i for i, n in enumerate(self.facet_normals)}

    @cached_property
    def facet_edges(self) -> Tuple[Tuple[Edge, ...], ...]:
        out = []
        for f in self.facets:
            out.append(tuple(_edge(f[i], f[(i + 1) % len(f)]) for i in range(len(f))))
        return tuple(out)

    def vertex_coords(self, face: Face) -> List[Vec3]:
        return [self.vertices[i] for i in sorted(face.vertices)]

    def __repr__(self) -> str:
        return f"Polytope3(dim={self.dim}, f_vector={self.f_vector})"


def _edge(i: int, j: int) -> Edge:
    return (i, j) if i < j else (j, i)


def hull3(points: Sequence) -> Polytope3:
    """Convex hull of a nonempty finite point set, with its full face lattice.

    Points may be given as triples of ints, Fractions or ``"p/q"`` strings.
    Output vertices are sorted lexicographically, so the result does not
    depend on input order.
    """
    if len(points) == 0:
        raise ValueError("hull3 needs at least one point")
    rpts = sorted(set(vec(p) for p in points))
    den = common_denominator(c for p in rpts for c in p)
    ipts = [tuple(int(c * den) for c in p) for p in rpts]

    dim, frame = _affine_frame(ipts)
    if dim == 0:
        return _build(rpts, [0], 0, [], [])
    if dim == 1:
        d = sub(ipts[frame[1]], ipts[frame[0]])
        keys = [dot(d, p) for p in ipts]
        lo = min(range(len(ipts)), key=keys.__getitem__)
        hi = max(range(len(ipts)), key=keys.__getitem__)
        return _build(rpts, sorted([lo, hi]), 1, [], [])
    if dim == 2:
        a, b, c = (ipts[i] for i in frame)
        normal = canonical_direction(cross(sub(b, a), sub(c, a)))
        cycle = _polygon_cycle(ipts, list(range(len(ipts))), normal)
        return _build(rpts, sorted(cycle), 2, [cycle], [normal])
    cycles, normals = _gift_wrap(ipts)
    used = sorted({i for c in cycles for i in c})
    return _build(rpts, used, 3, cycles, normals)


def _affine_frame(ipts) -> Tuple[int, List[int]]:
    """Affine dimension plus indices of an affinely independent subset."""
    p0 = ipts[0]
    i1 = next((i for i, p in enumerate(ipts) if p != p0), None)
    if i1 is None:
        return 0, [0]
    d1 = sub(ipts[i1], p0)
    i2 = next(
        (i for i, p in enumerate(ipts) if not is_zero(cross(d1, sub(p, p0)))), None
    )
    if i2 is None:
        return 1, [0, i1]
    n = cross(d1, sub(ipts[i2], p0))
    i3 = next((i for i, p in enumerate(ipts) if dot(n, sub(p, p0)) != 0), None)
    if i3 is None:
        return 2, [0, i1, i2]
    return 3, [0, i1, i2, i3]


def _polygon_cycle(ipts, idx: List[int], normal) -> List[int]:
    """Vertices of the 2D hull of coplanar points ``idx``, counterclockwise
    around ``normal``; collinear boundary points are dropped."""
    k = max(range(3), key=lambda t: abs(normal[t]))
    i, j = (k + 1) % 3, (k + 2) % 3
    pts = sorted(set(idx), key=lambda t: (ipts[t][i], ipts[t][j]))

    def turn(o, a, b):
        po, pa, pb = ipts[o], ipts[a], ipts[b]
        return (pa[i] - po[i]) * (pb[j] - po[j]) - (pa[j] - po[j]) * (pb[i] - po[i])

    lower: List[int] = []
    for p in pts:
        while len(lower) >= 2 and turn(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: List[int] = []
    for p in reversed(pts):
        while len(upper) >= 2 and turn(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    cycle = lower[:-1] + upper[:-1]
    # (i, j, k) is cyclic, so counterclockwise in (i, j) is counterclockwise about +e_k
    if normal[k] < 0:
        cycle.reverse()
    return cycle


def _gift_wrap(ipts) -> Tuple[List[List[int]], List[IVec3]]:
    n_pts = len(ipts)
    first = _first_facet_normal(ipts)
    cycles: List[List[int]] = []
    normals: List[IVec3] = []
    seen = {}

    def register(normal):
        if normal in seen:
            return
        c = dot(normal, ipts[_argmax(ipts, normal)])
        contact = [t for t in range(n_pts) if dot(normal, ipts[t]) == c]
        cycle = _polygon_cycle(ipts, contact, normal)
        seen[normal] = len(cycles)
        cycles.append(cycle)
        normals.append(normal)
        queue.append(len(cycles) - 1)

    queue: List[int] = []
    register(first)
    while queue:
        fi = queue.pop()
        normal, cycle = normals[fi], cycles[fi]
        c = dot(normal, ipts[cycle[0]])
        off = [t for t in range(n_pts) if dot(normal, ipts[t]) < c]
        for e in range(len(cycle)):
            a, b = ipts[cycle[e]], ipts[cycle[(e + 1) % len(cycle)]]
            f = ipts[cycle[(e + 2) % len(cycle)]]
            p = ipts[off[0]]
            # rotate away from the current facet until no point is beyond
            s0 = -orientation(a, b, p, f)
            for t in off:
                q = ipts[t]
                if orientation(a, b, p, q) == s0:
                    p = q
            m = primitive(cross(sub(b, a), sub(p, a)))
            if dot(m, sub(f, a)) > 0:
                m = neg(m)
            register(m)
    return cycles, normals


def _argmax(ipts, direction) -> int:
    return max(range(len(ipts)), key=lambda t: dot(direction, ipts[t]))


def _first_facet_normal(ipts) -> IVec3:
    # ipts is lexicographically sorted, so ipts[0] is a vertex with minimal x
    a = ipts[0]
    z = (0, 0, 1)
    az = (a[0], a[1], a[2] + 1)
    p = None
    for q in ipts:
        if is_zero(cross(z, sub(q, a))):
            continue
        if p is None or orientation(a, az, p, q) > 0:
            p = q
    n1 = primitive(cross(z, sub(p, a)))
    c = dot(n1, a)
    contact = [q for q in ipts if dot(n1, q) == c]
    if _affine_frame(contact)[0] == 2:
        return n1
    b = next(q for q in contact if q != a)
    p = None
    for q in ipts:
        if is_zero(cross(sub(b, a), sub(q, a))):
            continue
        if p is None or orientation(a, b, p, q) > 0:
            p = q
    m = primitive(cross(sub(b, a), sub(p, a)))
    # all points satisfy orientation(a, b, p, q) <= 0, i.e. m . (q - a) <= 0
    return m


def _build(rpts, used: List[int], dim: int, cycles, normals) -> Polytope3:
    remap = {old: new for new, old in enumerate(used)}
    vertices = tuple(rpts[i] for i in used)
    facets = []
    for cyc in cycles:
        cyc = [remap[i] for i in cyc]
        r = cyc.index(min(cyc))
        facets.append(tuple(cyc[r:] + cyc[:r]))
    order = sorted(range(len(facets)), key=lambda t: facets[t])
    facets = [facets[t] for t in order]
    normals = [tuple(normals[t]) for t in order]

    edge_facets: Dict[Edge, List[int]] = {}
    if dim == 1:
        edge_facets[(0, 1)] = []
    for fi, f in enumerate(facets):
        for i in range(len(f)):
            edge_facets.setdefault(_edge(f[i], f[(i + 1) % len(f)]), []).append(fi)
    edges = tuple(sorted(edge_facets))
    return Polytope3(
        vertices=vertices,
        dim=dim,
        facets=tuple(facets),
        facet_normals=tuple(normals),
        edges=edges,
        edge_facets={e: tuple(v) for e, v in edge_facets.items()},
    )


def translate(P: Polytope3, t) -> Polytope3:
    t = vec(t)
    return hull3([tuple(v[i] + t[i] for i in range(3)) for v in P.vertices])


def negate(P: Polytope3) -> Polytope3:
    return hull3([neg(v) for v in P.vertices])


def transform(P: Polytope3, matrix) -> Polytope3:
    """Image of ``P`` under a rational 3x3 linear map (rows of ``matrix``)."""
    m = [vec(r) for r in matrix]
    return hull3([tuple(dot(r, v) for r in m) for v in P.vertices])


def is_extreme_everywhere(P: Polytope3) -> Optional[str]:
    """Self-check of the support inequalities; returns a message on failure."""
    if P.dim != 3:
        return None
    for fi, (n, f) in enumerate(zip(P.facet_normals, P.facets)):
        c = P.facet_offsets[fi]
        inside = set(f)
        for vi, v in enumerate(P.vertices):
            s = sign(dot(n, v) - c)
            if (vi in inside and s != 0) or (vi not in inside and s >= 0):
                return f"facet {fi} fails support inequality at vertex {vi}"
    return None
