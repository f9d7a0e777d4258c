"""Stock polytopes with exact rational coordinates."""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import List, Tuple

from .polytope import Polytope3, hull3


def circle_polygon(m: int, max_den: int = 1000) -> List[Tuple[Fraction, Fraction]]:
    """``m`` rational points on the unit circle, close to a regular m-gon.

    Uses the rational parametrisation ((1-t^2)/(1+t^2), 2t/(1+t^2)) with
    ``t`` a rational approximation of tan(theta/2); the points lie exactly on
    the circle, hence in convex position.
    """
    if m < 3:
        raise ValueError("a polygon needs at least 3 vertices")
    out = []
    for j in range(m):
        theta = -math.pi + 2 * math.pi * (j + 0.5) / m
        t = Fraction(math.tan(theta / 2)).limit_denominator(max_den)
        d = 1 + t * t
        out.append(((1 - t * t) / d, 2 * t / d))
    return out


def polygon(m: int) -> Polytope3:
    return hull3([(x, y, 0) for x, y in circle_polygon(m)])


def prism(m: int, height=1) -> Polytope3:
    """Prism over an m-gon; (m + 2)-equiprojective."""
    base = circle_polygon(m)
    return hull3([(x, y, z) for x, y in base for z in (0, height)])


def pyramid(m: int, height=1) -> Polytope3:
    base = circle_polygon(m)
    return hull3([(x, y, 0) for x, y in base] + [(0, 0, height)])


def cube() -> Polytope3:
    return hull3(list(itertools.product((0, 1), repeat=3)))


def regular_tetrahedron() -> Polytope3:
    return hull3([(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)])


def square_pyramid() -> Polytope3:
    return hull3([(0, 0, 0), (2, 0, 0), (0, 2, 0), (2, 2, 0), (1, 1, 1)])


def pyritohedron(h=Fraction(3, 5)) -> Polytope3:
    """A combinatorial dodecahedron with pentagonal faces (regular when h is
    the inverse golden ratio, which is irrational; any rational 0 < h < 1
    gives the same face lattice)."""
    h = Fraction(h)
    pts = list(itertools.product((1, -1), repeat=3))
    for s1 in (1, -1):
        for s2 in (1, -1):
            p = (0, s1 * (1 + h), s2 * (1 - h * h))
            pts += [p, (p[2], p[0], p[1]), (p[1], p[2], p[0])]
    return hull3(pts)
