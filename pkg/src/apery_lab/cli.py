"""Command-line entry point: list, verify, sweep, search, selftest.

Exit codes: 0 all good, 1 a theorem check failed, 2 a conjecture finding
(confirmed by the exact path), 64 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from contextlib import contextmanager
from fractions import Fraction

from .claims.registry import DEFAULT_CONFIG, CONJECTURE, SamplerConfig, expand_claim_ids, get_claim, list_claims
from .claims.report import to_csv, to_jsonl
from .claims.search import search_remark_1_4
from .claims.sweep import SweepSummary, check_claim, parse_params, sweep
from .errors import AperyLabError

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_FINDING = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _default_jobs() -> int:
    raw = os.environ.get("APERY_LAB_JOBS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="apery-lab", description="Verify congruences and identities for Apery-like sums.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    out = _Parser(add_help=False)
    out.add_argument("--format", choices=("jsonl", "csv", "summary"), default="jsonl")
    out.add_argument("--output", "-o", help="write reports here instead of stdout")
    out.add_argument("--timings", action="store_true", help="fill the 'us' field (breaks byte-identical output)")

    samp = _Parser(add_help=False)
    samp.add_argument("--x", type=_rational, nargs="+", help="override the x-samples")
    samp.add_argument("--t-depth", type=int, default=DEFAULT_CONFIG.t_depth, help="how many t-samples to use")

    p_list = sub.add_parser("list", help="list registered claims")
    p_list.add_argument("--format", choices=("text", "jsonl"), default="text")

    p_ver = sub.add_parser("verify", help="check one claim at one point", parents=[out, samp])
    p_ver.add_argument("--claim", required=True)
    where = p_ver.add_mutually_exclusive_group(required=True)
    where.add_argument("--p", type=int)
    where.add_argument("--n", type=int)
    p_ver.add_argument("--param", action="append", default=[], metavar="KEY=VALUE")
    p_ver.add_argument("--exact", action="store_true", help="use exact rationals instead of residues")

    p_sw = sub.add_parser("sweep", help="check claims over a range", parents=[out, samp])
    p_sw.add_argument("--claim", required=True, help="ids or presets (all, all-theorems, all-conjectures), comma-separated")
    p_sw.add_argument("--pmin", type=int, default=2)
    p_sw.add_argument("--pmax", type=int, default=100)
    p_sw.add_argument("--nmax", type=_positive, default=60)
    p_sw.add_argument("--jobs", type=_positive, default=_default_jobs())

    p_se = sub.add_parser("search", help="run a search experiment")
    p_se.add_argument("--remark-1.4", dest="remark_1_4", action="store_true", required=True)
    p_se.add_argument("--nmax", type=int, default=10000)
    p_se.add_argument("--output", "-o")

    sub.add_parser("selftest", help="run the built-in golden examples")
    return parser


@contextmanager
def _sink(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _sampler(args) -> SamplerConfig:
    if args.t_depth < 0:
        raise UsageError("--t-depth must be >= 0")
    x = tuple(args.x) if args.x else None
    return SamplerConfig(x=x, t_depth=args.t_depth)


def _emit(reports, summary: SweepSummary, args):
    with _sink(args.output) as fh:
        if args.format == "jsonl":
            fh.write(to_jsonl(reports))
        elif args.format == "csv":
            fh.write(to_csv(reports))
        else:
            fh.write(json.dumps(summary.as_dict()) + "\n")
    for rep in summary.failures:
        print(f"FAIL {rep.claim} at {rep.point} {rep.params}: {rep.lhs} != {rep.rhs} mod {rep.modulus}", file=sys.stderr)
    for rep in summary.finding_reports:
        print(f"FINDING {rep.claim} at {rep.point} {rep.params}: {rep.lhs} != {rep.rhs} mod {rep.modulus}", file=sys.stderr)


def _exit_code(summary: SweepSummary) -> int:
    if summary.failed:
        return EXIT_FAILURE
    if summary.findings:
        return EXIT_FINDING
    return EXIT_OK


def cmd_list(args) -> int:
    for d in list_claims():
        if args.format == "jsonl":
            row = {"id": d.id, "status": d.status, "kind": d.kind, "e": d.e, "point": d.point,
                   "domain": d.domain, "statement": d.statement}
            print(json.dumps(row))
        else:
            e = "exact" if d.e is None else f"p^{d.e}"
            print(f"{d.id}\t{d.status}\t{d.kind}\t{e}\t{d.statement}")
    return EXIT_OK


def cmd_verify(args) -> int:
    desc = get_claim(args.claim)
    point = args.p if args.p is not None else args.n
    if (desc.point == "p") != (args.p is not None):
        raise UsageError(f"claim {desc.id} is indexed by {'a prime --p' if desc.point == 'p' else 'an integer --n'}")
    if args.param:
        param_sets = [parse_params(args.param)]
    else:
        if not desc.admits(point):
            raise UsageError(f"{desc.id}: point {point} outside domain ({desc.domain})")
        param_sets = list(desc.params(point, _sampler(args)))
    summary, reports = SweepSummary(), []
    for prm in param_sets:
        if not args.param and not desc.in_domain(point, prm):
            summary.skipped += 1
            continue
        rep = check_claim(desc.id, point, prm, exact=args.exact, timed=args.timings)
        reports.append(rep)
        summary.checked += 1
        if rep.passed:
            summary.passed += 1
        elif desc.status == CONJECTURE and check_claim(desc.id, point, prm, exact=True).passed is False:
            summary.findings += 1
            summary.finding_reports.append(rep)
        else:
            summary.failed += 1
            summary.failures.append(rep)
    _emit(reports, summary, args)
    return _exit_code(summary)


def cmd_sweep(args) -> int:
    ids = expand_claim_ids(args.claim)
    if not ids:
        raise UsageError("no claims selected")
    if args.pmin > args.pmax:
        raise UsageError("--pmin must not exceed --pmax")
    reports, summary = sweep(
        ids, pmin=args.pmin, pmax=args.pmax, nmax=args.nmax,
        config=_sampler(args), jobs=args.jobs, timed=args.timings,
    )
    _emit(reports, summary, args)
    return _exit_code(summary)


def cmd_search(args) -> int:
    if args.nmax < 2:
        raise UsageError("--nmax must be at least 2")
    result = search_remark_1_4(args.nmax)
    with _sink(args.output) as fh:
        fh.write(json.dumps({"search": "remark-1.4", "nmax": args.nmax, **result}) + "\n")
    return EXIT_OK


def cmd_selftest(args) -> int:
    from .golden import run_selftest

    return EXIT_FAILURE if run_selftest() else EXIT_OK


COMMANDS = {
    "list": cmd_list,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
    "search": cmd_search,
    "selftest": cmd_selftest,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, AperyLabError) as exc:
        print(f"apery-lab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
