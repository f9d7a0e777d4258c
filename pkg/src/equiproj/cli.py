"""Command-line front end.

Exit codes: 0 success / equiprojective, 1 negative verdict, 2 disagreement
between two methods that must agree, 3 input error, 4 resource bound hit.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import random
import sys
from typing import List, Optional

from . import __version__
from .checks import (
    check_aggregated,
    check_hasan_lubiw,
    is_valid_pairing,
    shadow_histogram,
    shadow_vertex_count,
)
from .cones import AggregatedCone, kappa
from .errors import (
    EquiprojError,
    InputError,
    NotEquiprojectiveError,
    ResourceBudgetError,
)
from .files import (
    dumps_polytope,
    load_generators,
    load_polytope,
    parse_vector_list,
    polytope_document,
    to_off,
)
from .minkowski import (
    GeneratorSet,
    minkowski_sum,
    odd_construction,
    random_generators,
    sum_equiprojective,
    zonotope,
)
from .omatroid import covectors, om_equivalent, type_census
from .polytope import Polytope3
from . import shapes

log = logging.getLogger("equiproj")

EXIT_OK, EXIT_NEGATIVE, EXIT_DISAGREE, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3, 4


def _default_seed() -> int:
    raw = os.environ.get("EQUIPROJ_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"EQUIPROJ_SEED must be an integer, got {raw!r}") from None


def _cone_json(c: AggregatedCone) -> dict:
    return {
        "direction": list(c.direction.dir),
        "full_plane": c.full_plane,
        "arcs": [[list(s), list(e)] for s, e in c.arcs],
    }


def _emit(doc: dict, path: Optional[str]) -> None:
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _write(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _header(seed=None) -> dict:
    doc = {"tool": "equiproj", "version": __version__}
    if seed is not None:
        doc["seed"] = seed
    return doc


# --------------------------------------------------------------------- gen


def cmd_gen(args) -> int:
    kind = args.kind
    seed = args.seed
    if kind == "zonotope":
        if args.generators:
            gens = parse_vector_list(args.generators)
            if any(c.denominator != 1 for g in gens for c in g):
                raise InputError("zonotope generators must be integer vectors")
            G = GeneratorSet(tuple(tuple(int(c) for c in g) for g in gens))
        elif args.count:
            G = random_generators(args.count, random.Random(seed))
        else:
            raise InputError("zonotope needs --generators or --count")
        P = zonotope(G)
        predicted = 2 * len(G) if P.dim == 3 else kappa(P)
        extra = {"generators": [list(g) for g in G]}
    elif kind == "prism":
        if args.sides is None or args.sides < 3:
            raise InputError("prism needs --sides >= 3")
        P = shapes.prism(args.sides)
        predicted = args.sides + 2
        extra = {"sides": args.sides}
    elif kind == "odd":
        if args.k is None:
            raise InputError("odd needs --k")
        Z, tri, S = odd_construction(args.k, seed)
        P = S.total
        predicted = args.k
        extra = {"k": args.k, "triangle": polytope_document(tri)["vertices"]}
    elif kind == "simplex":
        P = shapes.regular_tetrahedron()
        predicted = None
        extra = {}
    else:  # pragma: no cover - argparse restricts choices
        raise InputError(f"unknown kind {kind}")
    _write(dumps_polytope(P), args.output)
    summary = _header(seed if kind in ("odd", "zonotope") else None)
    summary.update({"kind": kind, "predicted_kappa": predicted, "dimension": P.dim,
                    "f_vector": list(P.f_vector)})
    summary.update(extra)
    out = sys.stdout if args.output else sys.stderr
    out.write(json.dumps(summary, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


# ------------------------------------------------------------------- check


def _require_3d(P: Polytope3) -> None:
    if P.dim != 3:
        raise InputError(f"polytope has dimension {P.dim}; a 3-dimensional polytope is required")


def cmd_check(args) -> int:
    P = load_polytope(args.file)
    _require_3d(P)
    doc = _header(args.seed)
    doc["f_vector"] = list(P.f_vector)
    verdicts = {}
    if args.method in ("cone", "both"):
        rep = check_aggregated(P)
        verdicts["cone"] = rep.is_equiprojective
        doc["cone"] = {
            "is_equiprojective": rep.is_equiprojective,
            "kappa": rep.kappa,
            "per_direction": [
                {**_cone_json(rep.cones[u]), "case": tag.value}
                for u, tag in rep.per_direction.items()
            ],
        }
        if rep.kappa is not None:
            doc["kappa"] = rep.kappa
    if args.method in ("matching", "both"):
        pairing = check_hasan_lubiw(P)
        verdicts["matching"] = pairing is not None
        m = {"is_equiprojective": pairing is not None}
        if pairing is not None:
            if not is_valid_pairing(P, pairing):
                raise AssertionError("matcher returned an invalid pairing")
            m["pairs"] = [
                [[list(a.edge), a.facet], [list(b.edge), b.facet]] for a, b in pairing.pairs
            ]
            doc.setdefault("kappa", kappa(P))
        doc["matching"] = m
    verdict = next(iter(verdicts.values()))
    disagree = len(set(verdicts.values())) > 1
    if args.oracle_samples > 0:
        hist = shadow_histogram(P, args.oracle_samples, args.seed)
        doc["oracle"] = {
            "samples": args.oracle_samples,
            "histogram": {str(k): v for k, v in hist.items()},
        }
        if verdict and list(hist) != [doc["kappa"]]:
            disagree = True
        elif not verdict and len(hist) == 1:
            # sampling can miss a second shadow size; only the exact checkers decide
            log.info("oracle saw a single shadow size for a non-equiprojective polytope")
    doc["is_equiprojective"] = verdict
    doc["disagreement"] = disagree
    if not verdict:
        doc.pop("kappa", None)
    _emit(doc, args.report)
    if disagree:
        return EXIT_DISAGREE
    return EXIT_OK if verdict else EXIT_NEGATIVE


# --------------------------------------------------------------------- sum


def cmd_sum(args) -> int:
    P, Q = load_polytope(args.file_p), load_polytope(args.file_q)
    for X in (P, Q):
        if X.dim < 1:
            raise InputError("summands must have dimension at least 1")
    S = minkowski_sum(P, Q).total
    if args.output:
        _write(dumps_polytope(S), args.output)
    ok, cert = sum_equiprojective(P, Q)
    doc = _header()
    doc["certificate"] = {
        "shared_directions": [
            {"direction": list(u.dir), "case": case.value} for u, case in cert.shared_directions
        ],
        "lambda": cert.lambda_,
        "k": cert.k_shared_count,
        "k_prime": cert.kprime_shared_count,
        "sum_dimension": cert.sum_dim,
    }
    doc["predicate"] = ok
    doc["kappa_P"], doc["kappa_Q"] = kappa(P), kappa(Q)
    if ok:
        doc["predicted_kappa"] = kappa(P) + kappa(Q) - cert.lambda_
    direct_ok = check_aggregated(S).is_equiprojective if S.dim == 3 else True
    doc["sum_is_equiprojective"] = direct_ok
    doc["direct_kappa"] = kappa(S) if direct_ok else None
    mismatch = (S.dim == 3 and ok != direct_ok) or (
        ok and direct_ok and doc["predicted_kappa"] != doc["direct_kappa"]
    )
    doc["mismatch"] = mismatch
    if not args.output:
        doc["sum"] = polytope_document(S)
    _emit(doc, args.report)
    if mismatch:
        return EXIT_DISAGREE
    return EXIT_OK if ok else EXIT_NEGATIVE


# ----------------------------------------------------------------- project


def cmd_project(args) -> int:
    P = load_polytope(args.file)
    _require_3d(P)
    doc = _header()
    if args.direction:
        (d,) = parse_vector_list(args.direction)
        doc["direction"] = args.direction
        doc["shadow_vertices"] = shadow_vertex_count(P, d)
    elif args.histogram:
        doc["seed"] = args.seed
        doc["samples"] = args.histogram
        hist = shadow_histogram(P, args.histogram, args.seed)
        doc["histogram"] = {str(k): v for k, v in hist.items()}
    else:
        raise InputError("project needs --direction or --histogram")
    _emit(doc, args.report)
    return EXIT_OK


# ---------------------------------------------------------------- omatroid


def cmd_omatroid(args) -> int:
    doc = _header()
    if args.sub == "covectors":
        X = load_generators(args.file)
        cov = covectors(X, bound=args.bound)
        doc["count"] = len(cov)
        doc["covectors"] = [list(z) for z in cov]
    elif args.sub == "equiv":
        a, b = load_generators(args.file_a), load_generators(args.file_b)
        doc["equivalent"] = om_equivalent(a, b, bound=args.bound)
    elif args.sub == "census":
        doc["seed"] = args.seed
        rep = type_census(args.n, args.samples, args.seed)
        doc.update({
            "n": rep.n,
            "samples": rep.samples,
            "types_found": rep.types_found,
            "representatives": [[list(g) for g in r] for r in rep.representatives],
            "f_vectors": [list(f) for f in rep.f_vectors],
        })
    _emit(doc, args.report)
    return EXIT_OK


# ------------------------------------------------------------------ export


def cmd_export(args) -> int:
    P = load_polytope(args.file)
    if args.format == "off":
        _write(to_off(P, args.precision), args.output)
    else:
        _write(dumps_polytope(P), args.output)
    return EXIT_OK


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    seed_help = "random seed (default: $EQUIPROJ_SEED or 0)"
    p = argparse.ArgumentParser(
        prog="equiproj",
        description="Construct and certify equiprojective 3-polytopes with exact arithmetic.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a polytope file")
    g.add_argument("kind", choices=["zonotope", "prism", "odd", "simplex"])
    g.add_argument("--generators", help='zonotope generators, e.g. "1,0,0;0,1,0;0,0,1"')
    g.add_argument("--count", type=int, help="number of random zonotope generators")
    g.add_argument("--sides", type=int, help="polygon size for prism")
    g.add_argument("--k", type=int, help="odd k >= 9 for the odd construction")
    g.add_argument("--seed", type=int, default=None, help=seed_help)
    g.add_argument("-o", "--output", help="vertex file to write (default: stdout)")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", help="decide equiprojectivity of a polytope file")
    c.add_argument("file")
    c.add_argument("--method", choices=["cone", "matching", "both"], default="both")
    c.add_argument("--oracle-samples", type=int, default=0,
                   help="random shadow directions to sample (default: 0, oracle off)")
    c.add_argument("--seed", type=int, default=None, help=seed_help)
    c.add_argument("--report", help="report file (default: stdout)")
    c.set_defaults(func=cmd_check)

    s = sub.add_parser("sum", help="Minkowski sum with predicted and direct kappa")
    s.add_argument("file_p")
    s.add_argument("file_q")
    s.add_argument("-o", "--output", help="vertex file for the sum")
    s.add_argument("--report", help="report file (default: stdout)")
    s.set_defaults(func=cmd_sum)

    pr = sub.add_parser("project", help="shadow vertex counts")
    pr.add_argument("file")
    grp = pr.add_mutually_exclusive_group(required=True)
    grp.add_argument("--direction", help='projection direction "a,b,c"')
    grp.add_argument("--histogram", type=int, help="number of random directions")
    pr.add_argument("--seed", type=int, default=None, help=seed_help)
    pr.add_argument("--report", help="report file (default: stdout)")
    pr.set_defaults(func=cmd_project)

    om = sub.add_parser("omatroid", help="covectors, equivalence, type census")
    osub = om.add_subparsers(dest="sub", required=True)
    oc = osub.add_parser("covectors")
    oc.add_argument("file")
    oc.add_argument("--bound", type=int, default=8, help="max vectors (default: 8)")
    oe = osub.add_parser("equiv")
    oe.add_argument("file_a")
    oe.add_argument("file_b")
    oe.add_argument("--bound", type=int, default=6, help="max vectors (default: 6)")
    ocn = osub.add_parser("census")
    ocn.add_argument("--n", type=int, required=True)
    ocn.add_argument("--samples", type=int, default=100)
    ocn.add_argument("--seed", type=int, default=None, help=seed_help)
    for x in (oc, oe, ocn):
        x.add_argument("--report", help="report file (default: stdout)")
    om.set_defaults(func=cmd_omatroid)

    e = sub.add_parser("export", help="export a polytope file")
    e.add_argument("file")
    e.add_argument("--format", choices=["off", "json"], default="off")
    e.add_argument("--precision", type=int, default=12,
                   help="significant digits for OFF coordinates (default: 12)")
    e.add_argument("-o", "--output", help="output file (default: stdout)")
    e.set_defaults(func=cmd_export)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        if getattr(args, "seed", None) is None and hasattr(args, "seed"):
            args.seed = _default_seed()
        return args.func(args)
    except ResourceBudgetError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_RESOURCE
    except NotEquiprojectiveError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except (InputError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except EquiprojError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
