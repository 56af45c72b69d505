"""Command line: ``termhyp {verify,eval,group,omega,catalog}``.

Exit codes: 0 success, 1 an identity failed, 2 usage error.
"""

import argparse
import json
import sys
from fractions import Fraction

from .catalog import CATALOG, UnknownIdError, list_catalog
from .field import ParseError, format_scalar, parse_scalar
from .groups import FAMILIES, format_group, group_certificate
from .limits import GuardFailure, format_limit, omega_table
from .series import (
    NonTerminatingError,
    PoleAtTerm,
    ZeroPochhammerError,
    eval_terminating,
    parse_series,
    partial_sum,
    reverse,
)
from .suite import SuiteConfig, run_suite


class UsageError(Exception):
    pass


def _int_range(text):
    """``-2..2`` or ``-2,0,1``."""
    text = text.strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
        if hi < lo:
            raise UsageError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [int(x) for x in text.split(",") if x.strip()]


def _write_json(path, payload):
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_verify(args):
    ids = [s for s in (args.ids or "").split(",") if s.strip()]
    if not ids:
        raise UsageError("--ids must name at least one identity (or 'all')")
    dens = tuple(int(d) for d in args.denominators.split(","))
    try:
        config = SuiteConfig(
            ids=ids,
            samples_per_identity=args.samples,
            n_max=args.nmax,
            seed=args.seed,
            numerator_bound=args.numerator_bound,
            denominator_set=dens,
        )
        config.resolved_ids()
    except (ValueError, UnknownIdError) as exc:
        raise UsageError(str(exc)) from exc
    report = run_suite(config, jobs=args.jobs)
    if not args.quiet:
        print(report.summary())
    if args.json:
        _write_json(args.json, report.dumps(timing=args.timing))
    return report.exit_code


def cmd_eval(args):
    try:
        spec = parse_series(args.series)
    except (ValueError, ParseError) as exc:
        raise UsageError(str(exc)) from exc
    try:
        if args.partial is not None:
            value = partial_sum(spec, args.partial)
        else:
            value = eval_terminating(spec)
    except NonTerminatingError as exc:
        raise UsageError(f"{exc}; use --partial N for a truncated sum") from exc
    except PoleAtTerm as exc:
        print(f"pole: {exc}")
        return 1
    print(format_scalar(value))
    if args.reverse:
        try:
            prefactor, rev = reverse(spec)
        except (ZeroPochhammerError, ZeroDivisionError) as exc:
            print(f"reversal undefined: {exc}")
            return 1
        print(f"reversed: {format_scalar(prefactor)} * {rev}")
    return 0


def cmd_group(args):
    families = list(FAMILIES) if args.family == "all" else [args.family]
    certs = []
    for fam in families:
        print(format_group(fam))
        certs.append(group_certificate(fam))
    if args.json:
        _write_json(args.json, certs if len(certs) > 1 else certs[0])
    return 0


def cmd_omega(args):
    gammas = _int_range(args.gammas)
    a = None
    if args.kind == "chen-chu":
        if args.a is None:
            raise UsageError("omega chen-chu needs --a")
        a = parse_scalar(args.a)
        if not isinstance(a, Fraction):
            raise UsageError("--a must be a rational number")
    try:
        rows = omega_table("chu" if args.kind == "chu" else "chen-chu", args.nmax, gammas, a, route=args.route)
    except GuardFailure as exc:
        raise UsageError(str(exc)) from exc
    cells = [[format_limit(v) for v in row] for row in rows]
    width = max([len(c) for row in cells for c in row] + [4])
    print("n \\ gamma " + " ".join(str(g).rjust(width) for g in gammas))
    for n, row in enumerate(cells):
        print(f"{n:<10}" + " ".join(c.rjust(width) for c in row))
    if args.json:
        payload = {
            "schema": 1,
            "kind": args.kind,
            "route": args.route,
            "a": format_scalar(a) if a is not None else None,
            "gammas": gammas,
            "n": list(range(args.nmax + 1)),
            "values": cells,
        }
        _write_json(args.json, payload)
    return 0


def cmd_catalog(args):
    rows = list_catalog()
    if args.json:
        _write_json(
            args.json,
            [{"id": i, "relation": r, "arity": k, "guards": g, "params": list(CATALOG[i].params)} for i, r, k, g in rows],
        )
        return 0
    for id_, relation, arity, guards in rows:
        params = ",".join(CATALOG[id_].params)
        print(f"{id_:<14} ({params})  {relation}")
        if args.verbose:
            print(f"{'':<14} guards: {guards}")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="termhyp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check catalog identities at seeded random samples")
    p.add_argument("--ids", default="all", help="'all', comma list, or FIRST..LAST ranges")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--nmax", type=int, default=8)
    p.add_argument("--numerator-bound", type=int, default=12)
    p.add_argument("--denominators", default="1,2,3,5,7")
    p.add_argument("--json", metavar="PATH", help="write the JSON report ('-' for stdout)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="include wall time in the JSON report")
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("eval", help="evaluate one series, e.g. '2F1(-2, 1/2; 3; 1)'")
    p.add_argument("series")
    p.add_argument("--partial", type=int, metavar="N", help="sum of the first N+1 terms")
    p.add_argument("--reverse", action="store_true", help="also print the reversed series")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("group", help="print an invariance group certificate")
    p.add_argument("family", choices=list(FAMILIES) + ["all"])
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("omega", help="table of limits at degenerate c")
    p.add_argument("kind", choices=["chu", "chen-chu"])
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--gammas", default="-2..2")
    p.add_argument("--a", help="rational parameter a (chen-chu only)")
    p.add_argument("--route", choices=["lhs", "rhs"], default="lhs")
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=cmd_omega)

    p = sub.add_parser("catalog", help="list identity ids and relations")
    p.add_argument("--json", metavar="PATH")
    p.add_argument("-v", "--verbose", action="store_true", help="show guards")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"termhyp {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ParseError) as exc:
        print(f"termhyp {args.command}: error: {exc}", file=sys.stderr)
        return 2
