"""Command-line interface: validation, root data, invariants, membership.

All results are printed to stdout as canonical JSON (sorted keys); exit
status is 0 when every requested check holds, 1 on a verification failure
or negative verdict, 2 on malformed input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional

from .catalog import (CATALOG, Analysis, roots_report, verify_main_theorem)
from .harish import invariants_up_to_degree
from .liesuper import verify_algebra
from .pairs import PairError, build_pair
from .rings import (membership_I, membership_J, membership_conditions,
                    weyl_conditions)
from .scalars import scalar_from_string, scalar_to_string
from .serialization import (SchemaError, algebra_from_json, dumps_canonical,
                            poly_from_json, poly_to_json, uea_to_json)

Q = Fraction

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class InputError(Exception):
    pass


def _load_json_arg(arg: str):
    try:
        if arg.startswith("@"):
            with open(arg[1:], "r", encoding="utf-8") as fh:
                return json.load(fh)
        return json.loads(arg)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON: {exc}") from exc


def _resolve_entry(name: str, direction):
    if name in CATALOG:
        return CATALOG[name], CATALOG[name].build(direction)
    # an explicit entry: a JSON file with algebra + a-basis
    try:
        data = _load_json_arg("@" + name if not name.startswith("@") else name)
    except InputError:
        raise InputError(f"unknown entry {name!r} "
                         f"(catalog: {sorted(CATALOG)}) and not a readable file")
    for key in ("algebra", "a_basis"):
        if key not in data:
            raise InputError(f"explicit entry needs field {key!r}")
    unknown = set(data) - {"algebra", "a_basis", "name", "default_degree"}
    if unknown:
        raise InputError(f"unknown entry fields: {sorted(unknown)}")
    g = algebra_from_json(data["algebra"])
    violations = verify_algebra(g)
    if violations:
        raise InputError(f"algebra fails validation: {violations[:3]}")
    a_vectors = []
    for coords in data["a_basis"]:
        vals = [scalar_from_string(x) for x in coords]
        a_vectors.append(g.vector({i: x for i, x in enumerate(vals) if x}))
    pair = build_pair(g, a_vectors)
    analysis = Analysis(pair, direction)
    analysis.name = data.get("name", name)

    class _Entry:
        name = data.get("name", "explicit")
        default_degree = data.get("default_degree", 3)
    return _Entry, analysis


def _parse_direction(arg: Optional[str]):
    if arg is None:
        return None
    return [scalar_from_string(x) for x in arg.split(",")]


def cmd_catalog(args) -> int:
    rows = [{"name": e.name, "description": e.description,
             "default_degree": e.default_degree}
            for e in CATALOG.values()]
    sys.stdout.write(dumps_canonical({"entries": rows}))
    return EXIT_OK


def cmd_validate(args) -> int:
    data = _load_json_arg("@" + args.file)
    g = algebra_from_json(data)
    violations = verify_algebra(g)
    out = {
        "file": args.file,
        "dim": g.dim,
        "valid": not violations,
        "violations": [
            {"check": v["check"], "at": list(v["at"])} for v in violations],
    }
    sys.stdout.write(dumps_canonical(out))
    return EXIT_OK if not violations else EXIT_FAIL


def cmd_roots(args) -> int:
    entry, analysis = _resolve_entry(args.entry, _parse_direction(args.direction))
    sys.stdout.write(dumps_canonical(roots_report(analysis, entry.name)))
    return EXIT_OK


def cmd_invariants(args) -> int:
    entry, analysis = _resolve_entry(args.entry, _parse_direction(args.direction))
    degree = args.degree if args.degree is not None else entry.default_degree
    basis = invariants_up_to_degree(analysis.ctx, degree)
    adapted = analysis.ctx.adapted
    out = {
        "entry": entry.name,
        "degree": degree,
        "adapted_basis": list(adapted.names),
        "blocks": list(analysis.ctx.uea.blocks),
        "dim_invariants": len(basis.invariants),
        "dim_ideal_part": len(basis.companion),
        "invariants": [uea_to_json(v) for v in basis.invariants],
        "ideal_part": [uea_to_json(v) for v in basis.companion],
        "gamma_images": [poly_to_json(analysis.ctx.hc_gamma(v), analysis.a_names)
                         for v in basis.invariants],
    }
    sys.stdout.write(dumps_canonical(out))
    return EXIT_OK


def cmd_gamma(args) -> int:
    entry, analysis = _resolve_entry(args.entry, _parse_direction(args.direction))
    data = _load_json_arg(args.element)
    if not isinstance(data, dict) or "terms" not in data:
        raise InputError('element JSON needs {"terms": [{"word": [...], "coeff": "..."}]}')
    unknown = set(data) - {"terms"}
    if unknown:
        raise InputError(f"unknown element fields: {sorted(unknown)}")
    g = analysis.pair.g
    adapted = analysis.ctx.adapted
    elem = {}
    from .pbw import accumulate
    for term in data["terms"]:
        unknown = set(term) - {"word", "coeff"}
        if unknown or "word" not in term or "coeff" not in term:
            raise InputError("element terms need exactly 'word' and 'coeff'")
        factors = []
        for name in term["word"]:
            if name in g._index:
                factors.append(g.basis(name))
            elif name in adapted._index:
                factors.append(adapted.basis(name))
            else:
                raise InputError(f"unknown generator {name!r}")
        accumulate(elem, analysis.ctx.word(factors),
                   scalar_from_string(term["coeff"]))
    out = {
        "entry": entry.name,
        "element": uea_to_json(elem),
        "projection": poly_to_json(analysis.ctx.project_to_a(elem),
                                   analysis.a_names),
        "gamma": poly_to_json(analysis.ctx.hc_gamma(elem), analysis.a_names),
    }
    sys.stdout.write(dumps_canonical(out))
    return EXIT_OK


def cmd_membership(args) -> int:
    entry, analysis = _resolve_entry(args.entry, _parse_direction(args.direction))
    poly = poly_from_json(_load_json_arg(args.poly), analysis.a_names)
    if args.ring == "J":
        verdict = membership_J(poly, analysis.data, analysis.weyl)
    else:
        verdict = membership_I(poly, analysis.data, analysis.weyl,
                               include_weyl=not args.no_weyl)
    conditions = {}
    for datum in analysis.data:
        if datum.gated:
            continue
        for key, val in membership_conditions(poly, datum, args.ring).items():
            conditions[str(key)] = scalar_to_string(val)
    if args.ring == "J" or not args.no_weyl:
        for key, val in weyl_conditions(poly, analysis.weyl).items():
            conditions[str(key)] = scalar_to_string(val)
    out = {
        "entry": entry.name,
        "ring": args.ring,
        "poly": poly_to_json(poly, analysis.a_names),
        "member": verdict,
        "violated_conditions": conditions,
        "gated_roots": [[scalar_to_string(x) for x in d.lam]
                        for d in analysis.data if d.gated],
    }
    sys.stdout.write(dumps_canonical(out))
    return EXIT_OK if verdict else EXIT_FAIL


def cmd_verify(args) -> int:
    entry, analysis = _resolve_entry(args.entry, _parse_direction(args.direction))
    degree = args.degree if args.degree is not None else entry.default_degree
    seed = args.seed_local if getattr(args, "seed_local", None) is not None \
        else args.seed
    report = verify_main_theorem(analysis, degree=degree, seed=seed)
    report["entry"] = entry.name
    timing = report.pop("timing_seconds")
    if args.timing:
        sys.stderr.write(f"verify {entry.name}: {timing:.3f}s\n")
    sys.stdout.write(dumps_canonical(report))
    return EXIT_OK if report["ok"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superhc",
        description="Exact Harish-Chandra toolkit for symmetric superpairs")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized property sampling")
    parser.add_argument("--threads", type=int, default=1,
                        help="reserved; all computations are pure and "
                             "single-threaded at desk scale")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("catalog", help="catalog operations")
    p.add_argument("action", choices=["list"])
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("validate", help="validate an algebra JSON file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    for name, fn, extra in [
            ("roots", cmd_roots, []),
            ("invariants", cmd_invariants, ["degree"]),
            ("gamma", cmd_gamma, ["element"]),
            ("membership", cmd_membership, ["poly", "ring"]),
            ("verify", cmd_verify, ["degree", "timing"])]:
        p = sub.add_parser(name)
        p.add_argument("entry", help="catalog entry name or explicit JSON file")
        p.add_argument("--direction", default=None,
                       help="comma-separated coordinates of the positivity "
                            "direction in a")
        p.add_argument("--seed", type=int, default=None, dest="seed_local",
                       help="seed for randomized property sampling")
        p.add_argument("--threads", type=int, default=None, dest="threads_local",
                       help="reserved; computations are single-threaded")
        if "degree" in extra:
            p.add_argument("--degree", type=int, default=None)
        if "element" in extra:
            p.add_argument("--element", required=True,
                           help="JSON (or @file) with words of generator names")
        if "poly" in extra:
            p.add_argument("--poly", required=True,
                           help="JSON (or @file) exponent map over the a-basis")
            p.add_argument("--ring", choices=["I", "J"], required=True)
            p.add_argument("--no-weyl", action="store_true",
                           help="for ring I: drop the Weyl-invariance condition")
        if "timing" in extra:
            p.add_argument("--timing", action="store_true",
                           help="print wall time to stderr")
        p.set_defaults(func=fn)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "command", None):
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (InputError, SchemaError, PairError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
