"""Polytope and generator files (exact JSON) and OFF mesh export."""

from __future__ import annotations

import json
import re
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Iterable, List, Sequence

from .errors import InputError
from .polytope import Polytope3, hull3

_NUM = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(s) -> Fraction:
    if isinstance(s, bool) or isinstance(s, float):
        raise InputError(f"not an exact number: {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str) or not _NUM.match(s.strip()):
        raise InputError(f"not an exact rational 'p/q' or integer 'p': {s!r}")
    try:
        return Fraction(s.strip())
    except ZeroDivisionError:
        raise InputError(f"zero denominator in {s!r}") from None


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def _points(doc, key: str) -> List[tuple]:
    if not isinstance(doc, dict) or key not in doc:
        raise InputError(f"expected a JSON object with a {key!r} list")
    rows = doc[key]
    if not isinstance(rows, list) or not rows:
        raise InputError(f"{key!r} must be a nonempty list")
    out = []
    for row in rows:
        if not isinstance(row, list) or len(row) != 3:
            raise InputError(f"each entry of {key!r} must have 3 coordinates: {row!r}")
        out.append(tuple(parse_rational(c) for c in row))
    return out


def loads_polytope(text: str) -> Polytope3:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None
    return hull3(_points(doc, "vertices"))


def load_polytope(path: str) -> Polytope3:
    with open(path) as fh:
        return loads_polytope(fh.read())


def polytope_document(P: Polytope3) -> dict:
    return {"vertices": [[format_rational(c) for c in v] for v in P.vertices]}


def dumps_polytope(P: Polytope3) -> str:
    return json.dumps(polytope_document(P), indent=2) + "\n"


def load_generators(path: str) -> List[tuple]:
    """Integer vectors from ``{"generators": [[a, b, c], ...]}``."""
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc}") from None
    pts = _points(doc, "generators")
    for p in pts:
        if any(c.denominator != 1 for c in p):
            raise InputError(f"generators must be integer vectors: {p}")
    return [tuple(int(c) for c in p) for p in pts]


def parse_vector_list(text: str) -> List[tuple]:
    """``"1,0,0;0,1,0"`` -> [(1, 0, 0), (0, 1, 0)] with exact entries."""
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = [p.strip() for p in chunk.split(",")]
        if len(parts) != 3:
            raise InputError(f"expected three comma-separated numbers, got {chunk!r}")
        out.append(tuple(parse_rational(p) for p in parts))
    if not out:
        raise InputError("empty vector list")
    return out


def _decimal(x: Fraction, digits: int) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        d = Decimal(x.numerator) / Decimal(x.denominator)
    s = format(d, "f") if d == d.to_integral_value() else format(d.normalize(), "f")
    return "0" if s in ("-0", "0.0") else s


def to_off(P: Polytope3, digits: int = 12) -> str:
    """OFF text: decimal vertices, facets counterclockwise seen from outside."""
    faces: Iterable[Sequence[int]] = P.facets if P.dim >= 2 else ()
    lines = ["OFF", f"{len(P.vertices)} {len(faces)} {len(P.edges)}"]
    for v in P.vertices:
        lines.append(" ".join(_decimal(c, digits) for c in v))
    for f in faces:
        lines.append(" ".join([str(len(f))] + [str(i) for i in f]))
    return "\n".join(lines) + "\n"
