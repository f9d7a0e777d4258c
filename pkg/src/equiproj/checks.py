"""Deciding equiprojectivity.

Two independent decision procedures are provided: the edge-facet
compensation criterion (:func:`check_hasan_lubiw`, a perfect matching
search) and the aggregated-cone criterion (:func:`check_aggregated`).  The
projection oracle counts shadow vertices directly and certifies either.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .cones import (
    AggregatedCone,
    EdgeDirection,
    aggregated_cones,
    cone_is_partition_with_opposite,
    edge_direction_classes,
)
from .errors import DimensionError, InadmissibleDirectionError, ResourceBudgetError
from .geometry import cross, dot, integerize, is_zero, neg, sign, sub
from .polytope import Edge, Polytope3

DEFAULT_CLASS_BUDGET = 64
ORACLE_RANGE = 10**6


@dataclass(frozen=True, order=True)
class EdgeFacetIncidence:
    edge: Edge
    facet: int


@dataclass(frozen=True)
class CompensationPairing:
    pairs: Tuple[Tuple[EdgeFacetIncidence, EdgeFacetIncidence], ...]


class Case(str, enum.Enum):
    FULL_PLANE = "FULL_PLANE"
    PARTITION = "PARTITION"
    FAIL = "FAIL"


@dataclass
class EquiprojectivityReport:
    is_equiprojective: bool
    kappa: Optional[int]
    per_direction: Dict[EdgeDirection, Case]
    pairing: Optional[CompensationPairing] = None
    cones: Dict[EdgeDirection, AggregatedCone] = field(default_factory=dict, repr=False)


def _require_3d(P: Polytope3) -> None:
    if P.dim != 3:
        raise DimensionError(f"expected a 3-dimensional polytope, got dimension {P.dim}")


def incidences(P: Polytope3) -> List[EdgeFacetIncidence]:
    _require_3d(P)
    return sorted(
        EdgeFacetIncidence(e, f) for e, fs in P.edge_facets.items() for f in fs
    )


def compensates(i1: EdgeFacetIncidence, i2: EdgeFacetIncidence, P: Polytope3) -> bool:
    """Whether two edge-facet incidences of ``P`` compensate each other."""
    if i1 == i2:
        raise ValueError("an incidence cannot be paired with itself")
    iv = P.int_vertices
    u = sub(iv[i1.edge[1]], iv[i1.edge[0]])
    v = sub(iv[i2.edge[1]], iv[i2.edge[0]])
    if not is_zero(cross(u, v)):
        return False
    if i1.facet == i2.facet:
        return i1.edge != i2.edge
    n1, n2 = P.facet_normals[i1.facet], P.facet_normals[i2.facet]
    if n2 != neg(n1):
        # distinct facets of a convex polytope are parallel only when opposite
        return False
    p = iv[i1.edge[0]]
    m = cross(u, sub(iv[i2.edge[0]], p))
    if is_zero(m):
        return False
    s1 = _side(P, i1.facet, m, p)
    s2 = _side(P, i2.facet, m, p)
    return s1 != 0 and s1 == s2


def _side(P: Polytope3, facet: int, m, p) -> int:
    # sign of m . (centroid - p), scaled by the vertex count
    cyc = P.facets[facet]
    iv = P.int_vertices
    total = [0, 0, 0]
    for i in cyc:
        for k in range(3):
            total[k] += iv[i][k] - p[k]
    return sign(dot(m, total))


def check_hasan_lubiw(
    P: Polytope3, class_budget: int = DEFAULT_CLASS_BUDGET
) -> Optional[CompensationPairing]:
    """A partition of all edge-facet incidences into compensating pairs, or
    None when none exists.  Compensating incidences share an edge direction,
    so each direction class is matched independently."""
    _require_3d(P)
    classes = edge_direction_classes(P)
    pairs = []
    for u, edges in classes.items():
        inc = [EdgeFacetIncidence(e, f) for e in edges for f in P.edge_facets[e]]
        if len(inc) > class_budget:
            raise ResourceBudgetError(
                f"direction {u.dir} has {len(inc)} incidences, over the budget of {class_budget}"
            )
        matched = _perfect_matching(inc, lambda a, b: compensates(a, b, P))
        if matched is None:
            return None
        pairs.extend(matched)
    return CompensationPairing(tuple(pairs))


def _perfect_matching(items, compatible):
    n = len(items)
    if n % 2:
        return None
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if compatible(items[i], items[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    failed = set()

    def solve(free: int):
        if free == 0:
            return []
        if free in failed:
            return None
        # branch on the free item with the fewest free partners
        best, best_deg = -1, n + 1
        rest = free
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            rest ^= low
            deg = bin(adj[i] & free).count("1")
            if deg < best_deg:
                best, best_deg = i, deg
                if deg == 0:
                    break
        if best_deg == 0:
            failed.add(free)
            return None
        cands = adj[best] & free
        while cands:
            low = cands & -cands
            j = low.bit_length() - 1
            cands ^= low
            sub_ = solve(free & ~(1 << best) & ~(1 << j))
            if sub_ is not None:
                return [(best, j)] + sub_
        failed.add(free)
        return None

    result = solve((1 << n) - 1)
    if result is None:
        return None
    return [tuple(sorted((items[i], items[j]))) for i, j in result]


def is_valid_pairing(P: Polytope3, pairing: CompensationPairing) -> bool:
    used = [i for pair in pairing.pairs for i in pair]
    if sorted(used) != incidences(P):
        return False
    return all(compensates(a, b, P) for a, b in pairing.pairs)


def explicit_pairing(P: Polytope3) -> Optional[CompensationPairing]:
    """Pairing built directly from the facet structure: two edges of one facet
    with the same direction pair up; a lone edge of a facet pairs with the
    lone parallel edge of the opposite facet.  Returns None when the
    construction breaks down (which happens iff the cone criterion fails)."""
    _require_3d(P)
    iv = P.int_vertices
    by_facet: Dict[Tuple[int, EdgeDirection], List[Edge]] = {}
    for fi, fedges in enumerate(P.facet_edges):
        for e in fedges:
            u = EdgeDirection.of(sub(iv[e[1]], iv[e[0]]))
            by_facet.setdefault((fi, u), []).append(e)
    pairs = []
    done = set()
    for (fi, u), es in sorted(by_facet.items()):
        if len(es) == 2:
            pairs.append((EdgeFacetIncidence(es[0], fi), EdgeFacetIncidence(es[1], fi)))
            continue
        if (fi, u) in done:
            continue
        opp = P.facet_of_normal.get(neg(P.facet_normals[fi]))
        if opp is None or len(by_facet.get((opp, u), [])) != 1:
            return None
        a = EdgeFacetIncidence(es[0], fi)
        b = EdgeFacetIncidence(by_facet[(opp, u)][0], opp)
        if not compensates(a, b, P):
            return None
        pairs.append((a, b))
        done.add((opp, u))
    return CompensationPairing(tuple(pairs))


def check_aggregated(P: Polytope3) -> EquiprojectivityReport:
    """Classify every edge direction by its aggregated cone."""
    _require_3d(P)
    cones = aggregated_cones(P)
    tags: Dict[EdgeDirection, Case] = {}
    total = 0
    for u, c in cones.items():
        if c.full_plane:
            tags[u] = Case.FULL_PLANE
            total += 2
        elif cone_is_partition_with_opposite(c):
            tags[u] = Case.PARTITION
            total += 1
        else:
            tags[u] = Case.FAIL
    ok = Case.FAIL not in tags.values()
    pairing = explicit_pairing(P) if ok else None
    return EquiprojectivityReport(ok, total if ok else None, tags, pairing, cones)


def check_admissible(P: Polytope3, d) -> Tuple[int, int, int]:
    _require_3d(P)
    d = integerize(d)
    if is_zero(d):
        raise ValueError("projection direction must be nonzero")
    for fi, n in enumerate(P.facet_normals):
        if dot(d, n) == 0:
            raise InadmissibleDirectionError(d, fi, n)
    return d


def shadow_vertex_count(P: Polytope3, d) -> int:
    """Number of vertices of the orthogonal shadow of ``P`` along ``d``.

    Counted as the edges whose two facet normals lie on opposite sides of
    ``d``-perp; no projection is ever formed.
    """
    d = check_admissible(P, d)
    s = [sign(dot(d, n)) for n in P.facet_normals]
    return sum(1 for f1, f2 in P.edge_facets.values() if s[f1] != s[f2])


def random_admissible_direction(P: Polytope3, rng: random.Random, bound: int = ORACLE_RANGE):
    while True:
        d = tuple(rng.randint(-bound, bound) for _ in range(3))
        if is_zero(d) or any(dot(d, n) == 0 for n in P.facet_normals):
            continue
        return d


def shadow_histogram(P: Polytope3, samples: int, seed: int) -> Dict[int, int]:
    _require_3d(P)
    rng = random.Random(seed)
    hist: Dict[int, int] = {}
    for _ in range(samples):
        k = shadow_vertex_count(P, random_admissible_direction(P, rng))
        hist[k] = hist.get(k, 0) + 1
    return dict(sorted(hist.items()))


def oracle_equiprojective(P: Polytope3, samples: int, seed: int) -> Optional[int]:
    """The common shadow vertex count over ``samples`` random directions, or
    None if two different counts were seen."""
    if samples < 1:
        raise ValueError("samples must be positive")
    hist = shadow_histogram(P, samples, seed)
    return next(iter(hist)) if len(hist) == 1 else None
