"""Command-line front end.

Subcommands: hk (single value), table (values over a range of n), mult,
classify, trace, check.  Exit codes: 0 success, 1 computational mismatch
from check, 2 usage error, 3 resource budget exceeded.

Identical invocations produce byte-identical JSON payloads: ordering is
sorted, large integers are decimal strings, and wall-clock timings live
in a separate "timing" object.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .algebra import parse_binomial, parse_monomial, render, PrimePower
from .classify import classify, classification_summary
from .engines import Config, cross_check, hk, load_corpus, jsonable_int
from .errors import HKError, NotApplicableError, ResourceError
from .keycheck import member_scan
from .multiplicity import estimate_multiplicity

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "json", "csv"), default=None)
    common.add_argument("--enum-cap", type=int, default=None)
    common.add_argument("--oracle-cap", type=int, default=None)
    common.add_argument("--workers", type=int, default=None)
    common.add_argument("--verbose", action="store_true", default=None)

    poly = argparse.ArgumentParser(add_help=False)
    poly.add_argument("--poly", required=True, help='e.g. "x1^3 - x2^2"')
    poly.add_argument("--vars", type=int, default=None, help="variable count override")
    poly.add_argument("--p", required=True, type=int, help="prime characteristic")

    ap = argparse.ArgumentParser(
        prog="hkb", description="Exact Hilbert-Kunz computations for binomial hypersurfaces"
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p_hk = sub.add_parser("hk", parents=[common, poly], help="single length value")
    p_hk.add_argument("--n", required=True, type=int)
    p_hk.add_argument("--engine", choices=("auto", "closed", "direct", "oracle"), default="auto")

    p_table = sub.add_parser("table", parents=[common, poly], help="values over a range of n")
    p_table.add_argument("--n-range", required=True, help="a..b inclusive")
    p_table.add_argument("--engine", choices=("auto", "closed", "direct", "oracle"), default="auto")

    p_mult = sub.add_parser("mult", parents=[common, poly], help="multiplicity estimates")
    p_mult.add_argument("--n-range", required=True, help="a..b inclusive")
    p_mult.add_argument("--exact-1dim", action="store_true", help="print the m=2 closed form")

    sub.add_parser("classify", parents=[common, poly], help="variable classification")

    p_trace = sub.add_parser("trace", parents=[common, poly], help="membership scan for one monomial")
    p_trace.add_argument("--n", required=True, type=int)
    p_trace.add_argument("--monomial", required=True, help='e.g. "x1^4*x2" or "4,1"')

    p_check = sub.add_parser("check", parents=[common], help="corpus cross-check")
    p_check.add_argument("--corpus", required=True, help="JSONL file with poly/p/n objects")
    return ap


def _load_config(args) -> Config:
    base = {}
    path = os.environ.get("HKB_CONFIG")
    if path:
        with open(path, "r", encoding="utf-8") as fh:
            base = json.load(fh)
    merged = {
        "enum_cap": base.get("enum_cap", 10**7),
        "oracle_cap": base.get("oracle_cap", 10**6),
        "workers": base.get("workers", 1),
        "format": base.get("format", "plain"),
        "verbose": base.get("verbose", False),
    }
    if getattr(args, "enum_cap", None) is not None:
        merged["enum_cap"] = args.enum_cap
    if getattr(args, "oracle_cap", None) is not None:
        merged["oracle_cap"] = args.oracle_cap
    if getattr(args, "workers", None) is not None:
        merged["workers"] = args.workers
    if getattr(args, "format", None) is not None:
        merged["format"] = args.format
    if getattr(args, "verbose", None):
        merged["verbose"] = True
    return Config(**merged)


def _dump_json(payload, stream=None):
    print(json.dumps(payload, sort_keys=True), file=stream or sys.stdout)


def _parse_range(text: str):
    try:
        a, b = text.split("..")
        lo, hi = int(a), int(b)
    except ValueError as exc:
        raise HKError(f"bad range {text!r}, expected a..b") from exc
    if lo < 1 or hi < lo:
        raise HKError(f"bad range {text!r}")
    return range(lo, hi + 1)


def _cmd_hk(args, cfg: Config) -> int:
    f = parse_binomial(args.poly, args.p, args.vars)
    rep = hk(f, args.p, args.n, engine=args.engine, config=cfg, verbose=cfg.verbose)
    if cfg.format == "json":
        _dump_json(rep.json_dict())
    else:
        print(rep.value)
        if cfg.verbose:
            print(f"engine: {rep.engine}", file=sys.stderr)
            for note in rep.guard_notes:
                print(f"note: {note}", file=sys.stderr)
    return EXIT_OK


def _cmd_table(args, cfg: Config) -> int:
    f = parse_binomial(args.poly, args.p, args.vars)
    d = f.m - 1
    rows = []
    for n in _parse_range(args.n_range):
        rep = hk(f, args.p, n, engine=args.engine, config=cfg)
        est = Fraction(rep.value, rep.q**d)
        rows.append((n, rep.q, rep.value, rep.engine, est))
    if cfg.format == "json":
        payload = [
            {
                "n": n,
                "q": jsonable_int(q),
                "hk": str(v),
                "engine": eng,
                "estimate": {"num": str(est.numerator), "den": str(est.denominator)},
            }
            for n, q, v, eng, est in rows
        ]
        _dump_json({"data": payload})
    elif cfg.format == "csv":
        print("n,q,hk,engine,estimate_num,estimate_den")
        for n, q, v, eng, est in rows:
            print(f"{n},{q},{v},{eng},{est.numerator},{est.denominator}")
    else:
        for n, q, v, eng, _ in rows:
            print(f"n={n} q={q} hk={v} engine={eng}")
    return EXIT_OK


def _cmd_mult(args, cfg: Config) -> int:
    f = parse_binomial(args.poly, args.p, args.vars)
    rep = estimate_multiplicity(f, args.p, _parse_range(args.n_range), config=cfg)
    if cfg.format == "json":
        _dump_json({"data": rep.json_dict()})
        return EXIT_OK
    if cfg.format == "csv":
        print("n,q,hk,estimate_num,estimate_den")
        for n, v, est in rep.samples:
            print(f"{n},{args.p ** n},{v},{est.numerator},{est.denominator}")
        return EXIT_OK
    for n, v, est in rep.samples:
        print(f"n={n} hk={v} estimate={est} (~{float(est):.6g})")
    print(f"converged: {rep.converged}" + ("" if rep.complete else " (partial: budget hit)"))
    if rep.limit is not None:
        print(f"difference-quotient limit: {rep.limit}")
    if rep.exact is not None and (args.exact_1dim or cfg.verbose):
        print(f"exact (m=2, case {rep.exact[1]}): {rep.exact[0]}")
    return EXIT_OK


def _cmd_classify(args, cfg: Config) -> int:
    f = parse_binomial(args.poly, args.p, args.vars)
    summary = classification_summary(classify(f))
    if cfg.format == "json":
        _dump_json({"data": summary})
        return EXIT_OK
    print(f"poly: {render(f)}  (p = {args.p}, m = {f.m})")
    print(f"r = {summary['r']}  s = {summary['s']}  t = {summary['t']}")
    print(f"sorted deltas: {summary['delta']}  (variables {summary['perm']})")
    for rec in summary["neg"]:
        print(f"  shrink {rec['var']}: a={rec['a']} b={rec['b']} min={rec['nmin']} max={rec['nmax']}")
    for rec in summary["zero"]:
        print(f"  fixed  {rec['var']}: power={rec['zmin']}")
    for rec in summary["pos"]:
        print(f"  grow   {rec['var']}: dp={rec['dp']} min={rec['pmin']} max={rec['pmax']}")
    return EXIT_OK


def _cmd_trace(args, cfg: Config) -> int:
    f = parse_binomial(args.poly, args.p, args.vars)
    A = parse_monomial(args.monomial, f.m)
    q = PrimePower(args.p, args.n)
    result, steps = member_scan(A, f, q)
    if cfg.format == "json":
        payload = {
            "monomial": list(A),
            "member": result.member,
            "witness": result.witness,
            "witness_m": result.witness_m,
            "mmax_scanned": result.mmax_scanned,
            "steps": [
                {"m": M, "intermediate": list(i), "candidate": list(c), "convergent": conv}
                for M, i, c, conv in steps
            ],
        }
        _dump_json({"data": payload})
        return EXIT_OK
    print(f"monomial {A}: member={result.member} witness={result.witness}"
          f"{'' if result.witness_m is None else ' M=' + str(result.witness_m)}"
          f" mmax_scanned={result.mmax_scanned}")
    for M, inter, cand, conv in steps:
        print(f"  M={M}: intermediate={inter} candidate={cand} convergent={conv}")
    return EXIT_OK


def _cmd_check(args, cfg: Config) -> int:
    instances = load_corpus(args.corpus)
    report = cross_check(instances, cfg)
    if cfg.format == "json":
        _dump_json({"data": report.json_list(), "all_agree": report.all_agree})
    else:
        for entry in report.entries:
            status = "ok" if entry["agree"] else "MISMATCH"
            vals = " ".join(f"{k}={v}" for k, v in entry["values"].items())
            print(f"{status} {entry['poly']} p={entry['p']} n={entry['n']} {vals}")
        print(f"{len(report.entries)} instances, all_agree={report.all_agree}")
    return EXIT_OK if report.all_agree else EXIT_MISMATCH


_HANDLERS = {
    "hk": _cmd_hk,
    "table": _cmd_table,
    "mult": _cmd_mult,
    "classify": _cmd_classify,
    "trace": _cmd_trace,
    "check": _cmd_check,
}


def run(argv=None) -> int:
    """Dispatch a CLI invocation; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        cfg = _load_config(args)
    except (OSError, ValueError, HKError) as exc:
        _emit_error(exc, "plain")
        return EXIT_USAGE
    try:
        return _HANDLERS[args.command](args, cfg)
    except ResourceError as exc:
        _emit_error(exc, cfg.format)
        return EXIT_RESOURCE
    except NotApplicableError as exc:
        _emit_error(exc, cfg.format)
        return EXIT_USAGE
    except HKError as exc:
        _emit_error(exc, cfg.format)
        return EXIT_USAGE
    except OSError as exc:
        _emit_error(exc, cfg.format)
        return EXIT_USAGE


def _emit_error(exc, fmt: str):
    if fmt == "json":
        _dump_json({"error": {"type": type(exc).__name__, "message": str(exc)}}, sys.stderr)
    else:
        print(f"error: {exc}", file=sys.stderr)


def main():  # console entry point
    sys.exit(run(sys.argv[1:]))
