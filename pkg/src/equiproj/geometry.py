"""Exact vector arithmetic and sign predicates.

Coordinates are :class:`fractions.Fraction` (or plain ``int``) triples.  All
predicates return exact signs; nothing here ever rounds.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence, Tuple, Union

Rat = Fraction
Number = Union[int, Fraction]
Vec3 = Tuple[Number, Number, Number]
IVec3 = Tuple[int, int, int]


def sign(x) -> int:
    return (x > 0) - (x < 0)


def to_rat(x) -> Fraction:
    """Parse an int, Fraction or ``"p/q"`` string into a reduced Fraction.

    Floats are refused: they would silently smuggle in rounding.
    """
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass a Fraction, int or 'p/q' string")
    if isinstance(x, str):
        x = x.strip()
    return Fraction(x)


def vec(x, y=None, z=None) -> Vec3:
    if y is None:
        x, y, z = x
    return (to_rat(x), to_rat(y), to_rat(z))


def add(a, b):
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def sub(a, b):
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def neg(a):
    return (-a[0], -a[1], -a[2])


def scale(c, a):
    return (c * a[0], c * a[1], c * a[2])


def dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def cross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def det3(a, b, c):
    return dot(a, cross(b, c))


def is_zero(a) -> bool:
    return a[0] == 0 and a[1] == 0 and a[2] == 0


def orientation(a, b, c, d) -> int:
    """Sign of det(b - a, c - a, d - a)."""
    return sign(det3(sub(b, a), sub(c, a), sub(d, a)))


def common_denominator(values: Iterable[Number]) -> int:
    den = 1
    for v in values:
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    return den


def integerize(v: Sequence[Number]) -> IVec3:
    """Positive multiple of ``v`` with integer coordinates."""
    den = common_denominator(v)
    return tuple(int(x * den) for x in v)  # type: ignore[return-value]


def primitive(v: Sequence[Number]) -> IVec3:
    """The primitive integer vector on the ray spanned by ``v`` (v != 0)."""
    iv = integerize(v)
    g = gcd(*iv)
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return (iv[0] // g, iv[1] // g, iv[2] // g)


def canonical_direction(v: Sequence[Number]) -> IVec3:
    """Primitive representative of the line spanned by ``v`` whose first
    nonzero coordinate is positive."""
    p = primitive(v)
    for c in p:
        if c != 0:
            return p if c > 0 else neg(p)
    raise AssertionError("unreachable")


def collinear(a, b) -> bool:
    return is_zero(cross(a, b))
