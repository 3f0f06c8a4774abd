"""Command-line front end.

Exit codes: 0 success, 1 usage or validation error, 2 the result contains an
unknown coefficient (the result is still printed).
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .gw import UNKNOWN, GWQuery, hyperbola_bound, regime
from .io import TableDocument, class_to_json
from .quantum import qprod_eta
from .relations import (classical_relation, duality_violations, grading_violations,
                        has_unknown_window, verify_associativity, verify_oracle,
                        verify_w_identity, verify_y_relation, w_identity_cases,
                        y_relation_cases)
from .ring import Ambient, reduce

EXIT_OK, EXIT_USAGE, EXIT_UNKNOWN = 0, 1, 2
SUITES = ("assoc", "relations", "oracle", "grading", "duality", "all")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def default_qmax(amb: Ambient) -> int:
    hb = hyperbola_bound(amb)
    if hb is None:
        return 5
    return max(1, math.ceil(hb))


def _ambient(args) -> Ambient:
    if args.g is None or args.d is None:
        raise UsageError("--g and --d are required")
    if args.g < 0 or args.d < 1:
        raise UsageError("need g >= 0 and d >= 1")
    return Ambient(args.g, args.d)


def _nonneg(args, *names):
    for name in names:
        val = getattr(args, name)
        if val is None or val < 0:
            raise UsageError(f"--{name} must be a non-negative integer")


def _qmax(args, amb: Ambient) -> int:
    if args.qmax is None:
        return default_qmax(amb)
    if args.qmax < 1:
        raise UsageError("--qmax must be positive")
    return args.qmax


def cmd_product(args) -> int:
    amb = _ambient(args)
    _nonneg(args, "u", "v")
    x = qprod_eta(args.u, args.v, amb, _qmax(args, amb))
    print(x.render())
    if args.json:
        print(json.dumps(class_to_json(x)))
    return EXIT_UNKNOWN if x.unknown else EXIT_OK


def cmd_gw(args) -> int:
    amb = _ambient(args)
    _nonneg(args, "u", "v", "w")
    if args.e is None or args.e < 1:
        raise UsageError("--e must be a positive integer")
    query = GWQuery.balanced(amb, args.u, args.v, args.w, args.e)
    value = query.evaluate()
    print(f"{query.label()} = {value}")
    return EXIT_UNKNOWN if value is UNKNOWN else EXIT_OK


def cmd_info(args) -> int:
    amb = _ambient(args)
    rep = regime(amb).as_dict()
    for key in ("g", "d", "deg_q", "rho_1", "rho_2", "hyperbola_bound", "regime", "known_orders"):
        print(f"{key}: {rep[key]}")
    return EXIT_OK


def cmd_table(args) -> int:
    amb = _ambient(args)
    if args.format not in ("json", "csv"):
        raise UsageError(f"unknown format {args.format!r}")
    bound = amb.d if args.max is None else args.max
    if bound < 0:
        raise UsageError("--max must be non-negative")
    doc = TableDocument.build(amb, _qmax(args, amb), bound)
    sys.stdout.write(doc.to_json() if args.format == "json" else doc.to_csv())
    return EXIT_UNKNOWN if doc.has_unknown else EXIT_OK


def _ambients(args):
    if args.g is not None or args.d is not None:
        return [_ambient(args)]
    return [Ambient(g, d) for g in range(args.gmax + 1) for d in range(1, 2 * g + 3)]


def _emit(suite: str, check: str, passed: bool, **info) -> bool:
    print(json.dumps({"suite": suite, "check": check, **info, "passed": passed}))
    return passed


def _suite_assoc(args) -> bool:
    ok = True
    for amb in _ambients(args):
        if has_unknown_window(amb):
            continue
        N = args.qmax or amb.g + 3
        rep = verify_associativity(amb, N, args.max_u)
        ok &= _emit("assoc", "associativity", rep.passed, g=amb.g, d=amb.d, N=N,
                    checked=rep.checked, counterexample=rep.counterexample)
    return ok


def _suite_relations(args) -> bool:
    ok = True
    for amb in _ambients(args):
        N = args.qmax or amb.g + 3
        for case in w_identity_cases(amb):
            passed = all(verify_w_identity(u, case, amb, N) for u in range(amb.d + 2))
            ok &= _emit("relations", f"power_identity_{case}", passed, g=amb.g, d=amb.d, N=N)
        for case in y_relation_cases(amb):
            ok &= _emit("relations", f"ring_relation_{case}", verify_y_relation(case, amb, N),
                        g=amb.g, d=amb.d, N=N)
        if amb.g <= amb.d <= 2 * amb.g - 2:
            ok &= _emit("relations", "classical_relation", not reduce(classical_relation(amb)),
                        g=amb.g, d=amb.d)
    return ok


def _suite_oracle(args) -> bool:
    if args.g is not None:
        rep = verify_oracle(args.g, gmin=args.g)
    else:
        rep = verify_oracle(args.gmax)
    return _emit("oracle", "closed_form_vs_harris_tu", rep.passed, points=rep.points,
                 gw1_mismatches=len(rep.gw1_mismatches), gw2_mismatches=len(rep.gw2_mismatches))


def _suite_grading(args) -> bool:
    ok = True
    for amb in _ambients(args):
        N = args.qmax or default_qmax(amb)
        bad = grading_violations(amb, N)
        ok &= _emit("grading", "homogeneity", not bad, g=amb.g, d=amb.d, N=N, violations=len(bad))
    return ok


def _suite_duality(args) -> bool:
    ok = True
    for amb in _ambients(args):
        N = args.qmax or default_qmax(amb)
        bad = duality_violations(amb, N)
        ok &= _emit("duality", "pairing_vs_invariant", not bad, g=amb.g, d=amb.d, N=N,
                    violations=len(bad))
    return ok


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}")
    runners = {"assoc": _suite_assoc, "relations": _suite_relations, "oracle": _suite_oracle,
               "grading": _suite_grading, "duality": _suite_duality}
    chosen = list(runners) if args.suite == "all" else [args.suite]
    ok = True
    for name in chosen:
        ok &= runners[name](args)
    print(json.dumps({"summary": "pass" if ok else "fail"}))
    return EXIT_OK if ok else EXIT_USAGE


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="symqh", description="Quantum cohomology of symmetric products of a curve.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def common(p, *flags):
        p.add_argument("--g", type=int)
        p.add_argument("--d", type=int)
        for flag in flags:
            p.add_argument(f"--{flag}", type=int)

    p = sub.add_parser("product", help="eta^u * eta^v")
    common(p, "u", "v", "qmax")
    p.add_argument("--json", action="store_true", help="also print the JSON form")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("gw", help="<eta^u, eta^v, theta^a eta^w>_e")
    common(p, "e", "u", "v", "w")
    p.set_defaults(func=cmd_gw)

    p = sub.add_parser("info", help="regime report")
    common(p)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("table", help="multiplication table of eta powers")
    common(p, "max", "qmax")
    p.add_argument("--format", default="json")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run verification suites")
    common(p, "qmax")
    p.add_argument("--suite", default="all")
    p.add_argument("--gmax", type=int, default=4)
    p.add_argument("--max-u", type=int, default=3, dest="max_u")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"symqh: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
