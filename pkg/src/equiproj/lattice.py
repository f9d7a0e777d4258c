"""Combinatorial type comparison.

A 3-polytope's face lattice is determined by its boundary map: darts are the
directed edges of the facet cycles, ``nxt`` follows a dart around its facet
and ``rev`` flips it onto the neighbouring facet.  Numbering darts breadth
first from a starting dart gives a code that is a complete invariant of the
map rooted at that dart, so two lattices are isomorphic iff some starting
dart (in either orientation, to allow mirror images) reproduces the code of a
fixed dart of the other polytope.
"""

from __future__ import annotations

from typing import List, Tuple

from .errors import ResourceBudgetError
from .polytope import Polytope3

DEFAULT_NODE_BUDGET = 5_000_000


def _dart_map(P: Polytope3, mirror: bool = False) -> Tuple[List[int], List[int]]:
    cycles = [tuple(reversed(f)) if mirror else f for f in P.facets]
    index = {}
    darts = []
    for f in cycles:
        for i in range(len(f)):
            index[(f[i], f[(i + 1) % len(f)])] = len(darts)
            darts.append((f, i))
    nxt, rev = [], []
    for f, i in darts:
        a, b, c = f[i], f[(i + 1) % len(f)], f[(i + 2) % len(f)]
        nxt.append(index[(b, c)])
        rev.append(index[(b, a)])
    return nxt, rev


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self, n: int = 1) -> None:
        self.used += n
        if self.used > self.limit:
            raise ResourceBudgetError(
                f"isomorphism search exceeded its node budget of {self.limit}"
            )


def _code(nxt, rev, start: int, budget: _Budget, target=None):
    """BFS code from ``start``; with ``target`` given, stop at the first
    mismatch and return None."""
    label = {start: 0}
    order = [start]
    out = []
    i = 0
    while i < len(order):
        d = order[i]
        budget.spend()
        pair = []
        for x in (nxt[d], rev[d]):
            if x not in label:
                label[x] = len(order)
                order.append(x)
            pair.append(label[x])
        pair = tuple(pair)
        if target is not None and (i >= len(target) or target[i] != pair):
            return None
        out.append(pair)
        i += 1
    if target is not None and len(out) != len(target):
        return None
    return tuple(out)


def face_lattice_isomorphic(
    P: Polytope3, Q: Polytope3, node_budget: int = DEFAULT_NODE_BUDGET
) -> bool:
    """True iff the face lattices of ``P`` and ``Q`` are isomorphic."""
    if P.dim != Q.dim or P.f_vector != Q.f_vector:
        return False
    if P.dim < 3:
        # points, segments and n-gons are determined by their vertex count
        return True
    if sorted(map(len, P.facets)) != sorted(map(len, Q.facets)):
        return False
    budget = _Budget(node_budget)
    nxt, rev = _dart_map(P)
    target = _code(nxt, rev, 0, budget)
    start_len = len(P.facets[0]) if P.facets else 0
    for mirror in (False, True):
        qn, qr = _dart_map(Q, mirror)
        for s in range(len(qn)):
            # cheap filter: the start dart must lie on a facet of the same size
            if _facet_size(qn, s) != start_len:
                continue
            if _code(qn, qr, s, budget, target) is not None:
                return True
    return False


def _facet_size(nxt, d: int) -> int:
    n, x = 1, nxt[d]
    while x != d:
        n += 1
        x = nxt[x]
    return n


def canonical_code(P: Polytope3, node_budget: int = DEFAULT_NODE_BUDGET):
    """A hashable complete invariant of the combinatorial type of ``P``."""
    if P.dim < 3:
        return (P.dim, P.f_vector)
    budget = _Budget(node_budget)
    best = None
    for mirror in (False, True):
        nxt, rev = _dart_map(P, mirror)
        for s in range(len(nxt)):
            c = _code(nxt, rev, s, budget)
            if best is None or c < best:
                best = c
    return (3, P.f_vector, best)
