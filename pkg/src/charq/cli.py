"""Command-line front end.

Subcommands:

    char      compute a factorial character by one or more routes
    qfun      compute a factorial Q-function by one or more routes
    tableaux  stream the tableaux of a family (optionally just count them,
              optionally with their lattice-path images)
    verify    run an identity suite over a bounded grid

Exit codes: 0 success, 2 usage or specification error, 3 identity failure
(route disagreement or a failing suite case).  All output is exact and
byte-identical across runs for identical invocations.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import (AlgebraError, MultiPoly, poly_to_obj, poly_to_text,
                      project_away_a, specialize, vartable_for)
from .characters import CHAR_ROUTES, GROUP_KINDS, character
from .lattice import tableau_to_paths
from .qfunctions import QFUNC_KINDS, Q_ROUTES, qfunction
from .tableaux import ALL_KINDS, check_shape, enumerate_tableaux
from .verify import SUITES, run_suite

USAGE_ERROR = 2
IDENTITY_ERROR = 3


class SpecError(Exception):
    """Invalid job specification (maps to exit code 2)."""


def _parse_parts(text: str | None) -> tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(int(p) for p in text.split(",") if p != "")
    except ValueError:
        raise SpecError(f"bad partition {text!r}: expected comma-separated integers")


def _zero_a(p: MultiPoly) -> MultiPoly:
    vt = p.vt
    zero = MultiPoly.zero(vt)
    p = specialize(p, {f"a{k}": zero for k in range(1, vt.a_max + 1)})
    # zero-parameter output carries no a tokens anywhere, headers included
    return project_away_a(p)


def _emit_poly(p: MultiPoly, out: str) -> str:
    if out == "json":
        return json.dumps(poly_to_obj(p), separators=(",", ":"))
    return poly_to_text(p)


def _run_poly_command(args, kinds, routes, compute) -> int:
    if args.kind not in kinds:
        raise SpecError(f"--kind must be one of {', '.join(kinds)}")
    methods = [m for m in args.method.split(",") if m]
    if not methods:
        raise SpecError("--method needs at least one route")
    for m in methods:
        if m not in routes:
            raise SpecError(f"--method must be chosen from {', '.join(routes)}")
    parts = _parse_parts(args.lam)
    vt = vartable_for(args.n, parts[0] if parts else 0)
    values = {}
    for m in methods:
        p = compute(args.kind, parts, vt, m)
        if args.a == "zero":
            p = _zero_a(p)
        values[m] = p
    first = values[methods[0]]
    equal = all(v == first for v in values.values())
    if len(methods) == 1:
        print(_emit_poly(first, args.out))
    elif args.out == "json":
        obj = {"kind": args.kind, "n": args.n, "lambda": list(parts),
               "a": args.a,
               "methods": {m: poly_to_obj(v) for m, v in values.items()},
               "equal": equal}
        print(json.dumps(obj, separators=(",", ":")))
    else:
        for m in methods:
            print(f"{m}: {poly_to_text(values[m])}")
        print(f"equal: {str(equal).lower()}")
    return 0 if equal else IDENTITY_ERROR


def cmd_char(args) -> int:
    return _run_poly_command(args, GROUP_KINDS, CHAR_ROUTES, character)


def cmd_qfun(args) -> int:
    return _run_poly_command(args, QFUNC_KINDS, Q_ROUTES, qfunction)


def cmd_tableaux(args) -> int:
    if args.kind not in ALL_KINDS:
        raise SpecError(f"--kind must be one of {', '.join(ALL_KINDS)}")
    parts = _parse_parts(args.lam)
    try:
        check_shape(args.kind, parts, args.n)
    except ValueError as exc:
        raise SpecError(str(exc))
    if args.count:
        print(sum(1 for _ in enumerate_tableaux(args.kind, parts, args.n)))
        return 0
    vt = vartable_for(args.n, parts[0] if parts else 0)
    for t in enumerate_tableaux(args.kind, parts, args.n):
        if args.out == "text":
            print(" / ".join(" ".join(e.token for e in row) for row in t.rows)
                  or "(empty)")
            continue
        obj = t.to_obj()
        if args.paths:
            obj = {"tableau": obj, "paths": tableau_to_paths(t, vt).to_obj()}
        print(json.dumps(obj, separators=(",", ":")))
    return 0


def cmd_verify(args) -> int:
    names = SUITES if args.suite == "all" else (args.suite,)
    if args.suite != "all" and args.suite not in SUITES:
        raise SpecError(f"--suite must be one of {', '.join(SUITES)} or 'all'")
    kw = {"n_max": args.n_max, "lambda_max": args.lambda_max,
          "mu_max": args.mu_max, "m_max": args.m_max, "jobs": args.jobs}
    if args.kind:
        kw["kind"] = args.kind
    if args.lam is not None and args.n is not None and args.kind:
        if args.suite == "lgv":
            kw["shapes"] = [(args.kind, _parse_parts(args.lam), args.n)]
    failures = 0
    for name in names:
        suite_kw = {k: v for k, v in kw.items() if k in _SUITE_PARAMS[name]}
        try:
            report = run_suite(name, **suite_kw)
        except ValueError as exc:
            raise SpecError(str(exc))
        failures += report.failed
        if args.out == "json":
            print(json.dumps(report.to_obj(), separators=(",", ":")))
        else:
            print(f"suite {name}: passed={report.passed} failed={report.failed}")
            for case in report.cases:
                status = "ok" if case.equal else "FAIL"
                print(f"  [{status}] {json.dumps(case.inputs, separators=(',', ':'))}"
                      f" ({case.ms:.0f} ms)")
        if not report.ok:
            bad = report.first_failure()
            print(f"first failing case: "
                  f"{json.dumps(bad.to_obj(), separators=(',', ':'))}",
                  file=sys.stderr)
    return IDENTITY_ERROR if failures else 0


_SUITE_PARAMS = {
    "routes": {"n_max", "lambda_max", "kind", "jobs"},
    "jt-vs-def": {"n_max", "lambda_max", "kind", "jobs"},
    "q-routes": {"n_max", "lambda_max", "kind", "jobs"},
    "tokuyama": {"n_max", "mu_max", "kind", "jobs"},
    "h-diff": {"n_max", "m_max", "kind", "jobs"},
    "f-diff": {"n_max", "m_max", "kind", "jobs"},
    "lgv": {"n_max", "lambda_max", "kind", "jobs", "shapes"},
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="charq",
        description="Exact factorial characters and Q-functions of the "
                    "classical groups, with cross-verified routes.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, need_n=True):
        p.add_argument("--kind", required=True)
        if need_n:
            p.add_argument("--n", type=int, required=True)
        p.add_argument("--lambda", dest="lam", default="",
                       help="comma-separated parts; empty for the empty partition")
        p.add_argument("--a", choices=("symbolic", "zero"), default="symbolic")
        p.add_argument("--out", choices=("json", "text"), default="json")

    p = sub.add_parser("char", help="compute a factorial character")
    common(p)
    p.add_argument("--method", default="jt",
                   help="comma-separated subset of def,hdet,jt,tab (default jt)")
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("qfun", help="compute a factorial Q-function")
    common(p)
    p.add_argument("--method", default="det",
                   help="comma-separated subset of tab,det (default det)")
    p.set_defaults(func=cmd_qfun)

    p = sub.add_parser("tableaux", help="stream a tableau family")
    common(p)
    p.add_argument("--count", action="store_true", help="emit only the cardinality")
    p.add_argument("--paths", action="store_true",
                   help="include the lattice-path image of each tableau")
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("verify", help="run an identity suite")
    p.add_argument("--suite", required=True,
                   help=f"one of {', '.join(SUITES)} or 'all'")
    p.add_argument("--kind", default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--lambda", dest="lam", default=None)
    p.add_argument("--n-max", type=int, default=2)
    p.add_argument("--lambda-max", type=int, default=3)
    p.add_argument("--mu-max", type=int, default=2)
    p.add_argument("--m-max", type=int, default=4)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=None,
                   help="reserved for randomised suites; current suites are "
                        "exhaustive and ignore it")
    p.add_argument("--out", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (AlgebraError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
