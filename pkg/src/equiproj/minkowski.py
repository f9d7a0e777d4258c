"""Minkowski sums, zonotopes and equiprojective sum constructions."""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .checks import check_aggregated
from .cones import (
    AggregatedCone,
    EdgeDirection,
    aggregated_cones,
    contains,
    edge_directions,
    kappa,
)
from .errors import InputError, NotEquiprojectiveError, ResourceBudgetError
from .geometry import (
    IVec3,
    add,
    collinear,
    cross,
    det3,
    dot,
    is_zero,
    neg,
    primitive,
    sub,
)
from .polytope import Face, Polytope3, hull3

GENERATOR_RANGE = 50
TRIANGLE_RANGE = 10**3
DEFAULT_TRIANGLE_RETRIES = 10**4


@dataclass(frozen=True)
class GeneratorSet:
    generators: Tuple[IVec3, ...]

    def __post_init__(self):
        gens = tuple(tuple(int(c) for c in g) for g in self.generators)
        if not gens:
            raise InputError("a generator set must be nonempty")
        for g in gens:
            if is_zero(g):
                raise InputError("generators must be nonzero")
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                if collinear(gens[i], gens[j]):
                    raise InputError(f"generators {gens[i]} and {gens[j]} are collinear")
        object.__setattr__(self, "generators", gens)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def negated(self, signs: Sequence[int]) -> "GeneratorSet":
        return GeneratorSet(tuple(g if s > 0 else neg(g) for g, s in zip(self, signs)))

    def spans_space(self) -> bool:
        g = self.generators
        return any(
            det3(g[i], g[j], g[k]) != 0
            for i in range(len(g))
            for j in range(i + 1, len(g))
            for k in range(j + 1, len(g))
        )


@dataclass(frozen=True)
class MinkowskiSum:
    """``total = P + Q`` together with the decomposition of each of its faces.

    ``decomposition[i] = (j, k)`` says face ``i`` of ``total`` is the sum of
    face ``j`` of ``P`` and face ``k`` of ``Q`` (indices into ``.faces``).
    """

    total: Polytope3
    P: Polytope3
    Q: Polytope3
    decomposition: Dict[int, Tuple[int, int]]

    def summand_faces(self, i: int) -> Tuple[Face, Face]:
        j, k = self.decomposition[i]
        return self.P.faces[j], self.Q.faces[k]


def normal_witness(P: Polytope3, face: Face):
    """A vector in the relative interior of the normal cone of ``P`` at ``face``."""
    if face.dim < 0:
        raise ValueError("the empty face has no normal cone")
    if face.dim == P.dim:
        return (0, 0, 0)
    iv = P.int_vertices
    if P.dim == 3:
        y = (0, 0, 0)
        for n, cyc in zip(P.facet_normals, P.facets):
            if face.vertices <= set(cyc):
                y = add(y, n)
        return y
    if P.dim == 2:
        normal = P.facet_normals[0]
        cyc = P.facets[0]
        y = (0, 0, 0)
        for i in range(len(cyc)):
            a, b = cyc[i], cyc[(i + 1) % len(cyc)]
            if face.vertices <= {a, b}:
                y = add(y, primitive(cross(sub(iv[b], iv[a]), normal)))
        return y
    # segment: point from the other endpoint towards this vertex
    (v,) = face.vertices
    return sub(iv[v], iv[1 - v])


def maximizing_face(P: Polytope3, y) -> Face:
    """The face of ``P`` on which the linear functional ``y`` is maximal."""
    iv = P.int_vertices
    vals = [dot(y, p) for p in iv]
    top = max(vals)
    verts = frozenset(i for i, v in enumerate(vals) if v == top)
    return P.faces[P.face_index[verts]]


def minkowski_sum(P: Polytope3, Q: Polytope3) -> MinkowskiSum:
    """Exact Minkowski sum with the face decomposition of the result."""
    total = hull3([add(p, q) for p in P.vertices for q in Q.vertices])
    decomposition = {}
    for i, face in enumerate(total.faces):
        if face.dim < 0:
            decomposition[i] = (0, 0)
            continue
        y = normal_witness(total, face)
        fp, fq = maximizing_face(P, y), maximizing_face(Q, y)
        _validate_decomposition(total, face, P, fp, Q, fq)
        decomposition[i] = (P.face_index[fp.vertices], Q.face_index[fq.vertices])
    return MinkowskiSum(total, P, Q, decomposition)


def _validate_decomposition(S, face, P, fp, Q, fq) -> None:
    sums = {add(P.vertices[a], Q.vertices[b]) for a in fp.vertices for b in fq.vertices}
    if not {S.vertices[v] for v in face.vertices} <= sums:
        raise AssertionError("face decomposition does not reproduce the sum's face")


def zonotope(g: GeneratorSet) -> Polytope3:
    """Sum of the segments conv{0, g} over the generators."""
    pts = {(0, 0, 0)}
    for gen in g:
        pts = {add(p, gen) for p in pts} | pts
        pts = set(hull3(list(pts)).vertices)
    return hull3(list(pts))


def random_generators(n: int, rng: random.Random, bound: int = GENERATOR_RANGE,
                      spanning: bool = True) -> GeneratorSet:
    while True:
        gens: List[IVec3] = []
        while len(gens) < n:
            g = tuple(rng.randint(-bound, bound) for _ in range(3))
            if is_zero(g) or any(collinear(g, h) for h in gens):
                continue
            gens.append(g)
        gs = GeneratorSet(tuple(gens))
        if not spanning or gs.spans_space():
            return gs


# ---------------------------------------------------------------------------
# sums of equiprojective summands


class SumCase(str, enum.Enum):
    ONE_FULL_PLANE = "ONE_FULL_PLANE"
    CONES_EQUAL = "CONES_EQUAL"
    CONES_OPPOSITE = "CONES_OPPOSITE"
    CONTAINED_PROPER = "CONTAINED_PROPER"
    INCOMPATIBLE = "INCOMPATIBLE"


_COMPATIBLE = {SumCase.ONE_FULL_PLANE, SumCase.CONES_EQUAL, SumCase.CONES_OPPOSITE}


@dataclass(frozen=True)
class SumCertificate:
    shared_directions: Tuple[Tuple[EdgeDirection, SumCase], ...]
    lambda_: int
    k_shared_count: int
    kprime_shared_count: int
    sum_dim: int

    @property
    def compatible(self) -> bool:
        return all(c in _COMPATIBLE for _, c in self.shared_directions)


def classify_shared(cp: AggregatedCone, cq: AggregatedCone) -> SumCase:
    if cp.full_plane or cq.full_plane:
        return SumCase.ONE_FULL_PLANE
    if cp == cq:
        return SumCase.CONES_EQUAL
    if cp == -cq:
        return SumCase.CONES_OPPOSITE
    if contains(cp, cq) or contains(cq, cp):
        return SumCase.CONTAINED_PROPER
    return SumCase.INCOMPATIBLE


def _require_summand(P: Polytope3, name: str) -> None:
    if P.dim < 1:
        raise InputError(f"summand {name} is a point")
    if P.dim == 3 and not check_aggregated(P).is_equiprojective:
        raise NotEquiprojectiveError(f"summand {name} is not equiprojective")


def sum_certificate(P: Polytope3, Q: Polytope3) -> SumCertificate:
    """Classify the edge directions shared by ``P`` and ``Q`` (no summand checks)."""
    cps, cqs = aggregated_cones(P), aggregated_cones(Q)
    shared = []
    k = kp = 0
    for u in sorted(set(cps) & set(cqs)):
        cp, cq = cps[u], cqs[u]
        case = classify_shared(cp, cq)
        shared.append((u, case))
        if cp.full_plane and cq.full_plane:
            kp += 1
        elif (not cp.full_plane and contains(cq, cp)) or (
            not cq.full_plane and contains(cp, cq)
        ):
            k += 1
    dim = _sum_dim(P, Q)
    return SumCertificate(tuple(shared), k + 2 * kp, k, kp, dim)


def _sum_dim(P: Polytope3, Q: Polytope3) -> int:
    # dimension of the linear span of both summands' edge vectors
    vecs = []
    for X in (P, Q):
        iv = X.int_vertices
        vecs += [sub(iv[e[1]], iv[e[0]]) for e in X.edges]
    basis: List = []
    for v in vecs:
        if len(basis) == 0:
            basis.append(v)
        elif len(basis) == 1 and not collinear(basis[0], v):
            basis.append(v)
        elif len(basis) == 2 and det3(basis[0], basis[1], v) != 0:
            return 3
    return len(basis)


def sum_equiprojective(P: Polytope3, Q: Polytope3) -> Tuple[bool, SumCertificate]:
    """Whether ``P + Q`` is equiprojective, decided from the summands' cones.

    Each summand must be an equiprojective 3-polytope, a polygon or a
    segment.  The verdict is about equiprojectivity as a 3-polytope, so it
    is only meaningful when ``certificate.sum_dim == 3``.
    """
    _require_summand(P, "P")
    _require_summand(Q, "Q")
    cert = sum_certificate(P, Q)
    return cert.compatible, cert


def kappa_of_sum(P: Polytope3, Q: Polytope3) -> int:
    ok, cert = sum_equiprojective(P, Q)
    if not ok:
        raise NotEquiprojectiveError("the sum of these summands is not equiprojective")
    return kappa(P) + kappa(Q) - cert.lambda_


# ---------------------------------------------------------------------------
# the odd construction


def triangle_is_generic(Z: Polytope3, tri: Polytope3) -> bool:
    if tri.dim != 2 or len(tri.vertices) != 3:
        return False
    zd = [u.dir for u in edge_directions(Z)]
    td = [u.dir for u in edge_directions(tri)]
    if len(td) != 3:
        return False
    for i in range(len(zd)):
        for j in range(i + 1, len(zd)):
            if any(det3(zd[i], zd[j], v) == 0 for v in td):
                return False
    for i in range(3):
        for j in range(i + 1, 3):
            if any(det3(td[i], td[j], u) == 0 for u in zd):
                return False
    return True


def generic_triangle(Z: Polytope3, seed: int, retries: int = DEFAULT_TRIANGLE_RETRIES,
                     bound: int = TRIANGLE_RANGE) -> Polytope3:
    """A random integer triangle in general position with respect to ``Z``."""
    if Z.dim != 3:
        raise InputError("generic_triangle needs a 3-dimensional zonotope")
    rng = random.Random(seed)
    for _ in range(retries):
        pts = [tuple(rng.randint(-bound, bound) for _ in range(3)) for _ in range(3)]
        if is_zero(cross(sub(pts[1], pts[0]), sub(pts[2], pts[0]))):
            continue
        tri = hull3(pts)
        if triangle_is_generic(Z, tri):
            return tri
    raise ResourceBudgetError(f"no generic triangle found in {retries} attempts")


def odd_construction(k: int, seed: int) -> Tuple[Polytope3, Polytope3, MinkowskiSum]:
    """Zonotope ``Z`` with (k-3)/2 generators, its triangle, and ``Z + t_Z``."""
    if not isinstance(k, int) or k % 2 == 0 or k < 9:
        raise InputError(f"k must be an odd integer >= 9, got {k}")
    rng = random.Random(seed)
    Z = zonotope(random_generators((k - 3) // 2, rng))
    tri = generic_triangle(Z, seed)
    return Z, tri, minkowski_sum(Z, tri)


def odd_equiprojective(k: int, seed: int) -> Polytope3:
    """A k-equiprojective polytope for odd ``k >= 9``."""
    return odd_construction(k, seed)[2].total


def face_summand_maps(S: MinkowskiSum):
    """The maps sending each face index of ``S.total`` to its summand faces:
    ``tau`` into the second summand (the triangle) and ``zeta`` into the
    first (the zonotope)."""
    tau = {i: q for i, (p, q) in S.decomposition.items()}
    zeta = {i: p for i, (p, q) in S.decomposition.items()}
    return tau, zeta


def prism(polygon_points: Sequence, height=1) -> Polytope3:
    pts = [(x, y, 0) for x, y in polygon_points] + [(x, y, height) for x, y in polygon_points]
    return hull3(pts)
