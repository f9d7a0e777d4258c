"""Edge directions, aggregated cones, multiplicities and kappa.

An aggregated cone lives in the plane orthogonal to an edge direction ``u``.
Rays in that plane are primitive integer 3-vectors; all angular reasoning
goes through their integer coordinates in a fixed basis ``(b1, b2)`` of the
plane, so ordering and coincidence tests are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import Dict, Iterable, List, Sequence, Tuple

from .errors import DimensionError, NotAnEdgeDirectionError
from .geometry import IVec3, canonical_direction, cross, dot, neg, primitive, sub
from .polytope import Edge, Polytope3

Ray = IVec3
Arc = Tuple[Ray, Ray]


@dataclass(frozen=True, order=True)
class EdgeDirection:
    """Primitive integer direction whose first nonzero coordinate is positive."""

    dir: IVec3

    @classmethod
    def of(cls, v) -> "EdgeDirection":
        return cls(canonical_direction(v))

    def __iter__(self):
        return iter(self.dir)


@dataclass(frozen=True)
class AggregatedCone:
    """Union of the 2D normal cones of a polytope inside ``u``-perp.

    ``arcs`` are the maximal closed arcs, each swept counterclockwise from
    its start ray to its end ray, listed in circular order beginning with
    the arc whose start ray has the smallest angle.  A full plane has no arcs.
    """

    direction: EdgeDirection
    full_plane: bool
    arcs: Tuple[Arc, ...]

    def __neg__(self) -> "AggregatedCone":
        if self.full_plane:
            return self
        return _from_arcs(self.direction, [(neg(s), neg(e)) for s, e in self.arcs])

    def complement_arcs(self) -> Tuple[Arc, ...]:
        """Arcs of the closure of the complement (the cones of V_P(u))."""
        if self.full_plane:
            return ()
        k = len(self.arcs)
        return tuple((self.arcs[i][1], self.arcs[(i + 1) % k][0]) for i in range(k))

    def boundary_rays(self) -> List[Ray]:
        return [r for arc in self.arcs for r in arc]


def plane_basis(u: Sequence[int]) -> Tuple[IVec3, IVec3]:
    """Integer basis of u-perp fixing its orientation."""
    a = min(range(3), key=lambda i: (abs(u[i]), i))
    e = tuple(1 if i == a else 0 for i in range(3))
    b1 = cross(u, e)
    b2 = cross(u, b1)
    return b1, b2


def _coords(r, basis) -> Tuple[int, int]:
    return dot(r, basis[0]), dot(r, basis[1])


def _half(p) -> int:
    x, y = p
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def _angle_cmp(p, q) -> int:
    hp, hq = _half(p), _half(q)
    if hp != hq:
        return hp - hq
    c = p[0] * q[1] - p[1] * q[0]
    return -1 if c > 0 else (1 if c < 0 else 0)


_angle_key = cmp_to_key(_angle_cmp)


def cross2(p, q) -> int:
    return p[0] * q[1] - p[1] * q[0]


def _from_arcs(direction: EdgeDirection, arcs: Iterable[Arc]) -> AggregatedCone:
    """Merge closed arcs (each sweeping less than a full turn) into maximal arcs."""
    basis = plane_basis(direction.dir)
    rays: Dict[IVec3, Tuple[int, int]] = {}
    arcs = [(primitive(s), primitive(e)) for s, e in arcs]
    for s, e in arcs:
        for r in (s, e):
            if dot(r, direction.dir) != 0:
                raise ValueError(f"ray {r} is not orthogonal to {direction.dir}")
            rays[r] = _coords(r, basis)
    order = sorted(rays, key=lambda r: _angle_key(rays[r]))
    pos = {r: i for i, r in enumerate(order)}
    m = len(order)
    covered = [False] * m  # covered[i]: open sector from order[i] to order[i+1]
    for s, e in arcs:
        i = pos[s]
        while i != pos[e]:
            covered[i] = True
            i = (i + 1) % m
    if all(covered):
        return AggregatedCone(direction, True, ())
    # start at a sector boundary preceded by an uncovered sector
    out = []
    first = next(i for i in range(m) if covered[i] and not covered[i - 1])
    i, steps = first, 0
    while steps < m:
        if covered[i] and not covered[i - 1]:
            j = i
            while covered[j % m]:
                j += 1
            out.append((order[i], order[j % m]))
        i = (i + 1) % m
        steps += 1
    out.sort(key=lambda a: _angle_key(rays[a[0]]))
    return AggregatedCone(direction, False, tuple(out))


def union(c1: AggregatedCone, c2: AggregatedCone) -> AggregatedCone:
    if c1.direction != c2.direction:
        raise ValueError("cones live in different planes")
    if c1.full_plane or c2.full_plane:
        return AggregatedCone(c1.direction, True, ())
    return _from_arcs(c1.direction, list(c1.arcs) + list(c2.arcs))


def contains(big: AggregatedCone, small: AggregatedCone) -> bool:
    return union(big, small) == big


def edge_direction_classes(P: Polytope3) -> Dict[EdgeDirection, List[Edge]]:
    """Edges of ``P`` grouped by their canonical direction."""
    if P.dim < 1:
        raise DimensionError("a point has no edges")
    iv = P.int_vertices
    out: Dict[EdgeDirection, List[Edge]] = {}
    for e in P.edges:
        out.setdefault(EdgeDirection.of(sub(iv[e[1]], iv[e[0]])), []).append(e)
    return dict(sorted(out.items()))


def edge_directions(P: Polytope3) -> List[EdgeDirection]:
    return list(edge_direction_classes(P))


def edge_normal_cone(P: Polytope3, edge: Edge) -> Arc:
    """The 2D normal cone of ``P`` at an edge as a counterclockwise arc.

    Raises for segments, whose edge cone is the whole plane.
    """
    iv = P.int_vertices
    u = EdgeDirection.of(sub(iv[edge[1]], iv[edge[0]]))
    basis = plane_basis(u.dir)
    if P.dim == 3:
        n1, n2 = (P.facet_normals[f] for f in P.edge_facets[edge])
        if cross2(_coords(n1, basis), _coords(n2, basis)) > 0:
            return (n1, n2)
        return (n2, n1)
    if P.dim == 2:
        normal = P.facet_normals[0]
        cyc = P.facets[0]
        i = cyc.index(edge[0])
        a, b = (edge[0], edge[1]) if cyc[(i + 1) % len(cyc)] == edge[1] else (edge[1], edge[0])
        w = cross(sub(iv[b], iv[a]), normal)  # in-plane outward normal
        if cross2(_coords(normal, basis), _coords(w, basis)) > 0:
            return (normal, neg(normal))
        return (neg(normal), normal)
    raise DimensionError("the normal cone of a segment's edge is a full plane")


def aggregated_cone(P: Polytope3, u: EdgeDirection) -> AggregatedCone:
    classes = edge_direction_classes(P)
    if u not in classes:
        raise NotAnEdgeDirectionError(f"{u.dir} is not an edge direction of {P!r}")
    if P.dim == 1:
        return AggregatedCone(u, True, ())
    return _from_arcs(u, [edge_normal_cone(P, e) for e in classes[u]])


def aggregated_cones(P: Polytope3) -> Dict[EdgeDirection, AggregatedCone]:
    return {u: aggregated_cone(P, u) for u in edge_directions(P)}


def cone_is_partition_with_opposite(c: AggregatedCone) -> bool:
    """True iff ``c`` and the relative interior of ``-c`` partition the plane."""
    if c.full_plane:
        return False
    negated = _from_arcs(c.direction, [(neg(s), neg(e)) for s, e in c.complement_arcs()])
    return negated.arcs == c.arcs


def multiplicity(P: Polytope3, u: EdgeDirection) -> int:
    return 2 if aggregated_cone(P, u).full_plane else 1


def kappa(P: Polytope3) -> int:
    """Sum of multiplicities over all edge directions of ``P``."""
    return sum(2 if c.full_plane else 1 for c in aggregated_cones(P).values())


def arc_is_halfplane(arc: Arc) -> bool:
    return neg(arc[0]) == arc[1]
