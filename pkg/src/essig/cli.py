"""Command-line front end: ``essig essential``, ``essig dim``, ``essig verify``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from typing import Sequence

from .rep_modules import RealizationError
from .essential_oracle import oracle_essential
from .root_system import AlgebraType, InvalidRankError, WeightError, export_header
from .semigroup import verify as V
from .semigroup.closed_form import closed_form_essential
from .weyl import weyl_dim

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# closed-form checks keep their established command names: B_n sets, D_n sets
CLOSED_FORM_CHECKS = {"lemma4": "B", "lemma9": "D"}
CHECKS = tuple(CLOSED_FORM_CHECKS) + ("inequalities", "star", "doublestar", "saturation",
                                      "dagger", "lift", "cone")


class UsageError(Exception):
    pass


def parse_weight(text: str, rank: int) -> tuple[int, ...]:
    try:
        k = tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise UsageError(f"weight must be comma-separated integers, got {text!r}") from None
    if len(k) != rank:
        raise UsageError(f"weight {text!r} has {len(k)} coefficients, rank is {rank}")
    if min(k) < 0:
        raise UsageError(f"weight {text!r} is not dominant")
    return k


def parse_weights(text: str | None, rank: int) -> list[tuple[int, ...]] | None:
    if not text:
        return None
    return [parse_weight(w, rank) for w in text.split(";") if w.strip()]


def _algebra(kind: str, rank: int) -> AlgebraType:
    try:
        return AlgebraType(kind, rank)
    except (ValueError, InvalidRankError) as exc:
        raise UsageError(str(exc)) from None


def _emit(obj, out) -> None:
    out.write(json.dumps(obj, sort_keys=False) + "\n")


def cmd_essential(args, out) -> int:
    alg = _algebra(args.type, args.rank)
    k = parse_weight(args.weight, alg.rank)
    try:
        if args.method == "closed":
            es = closed_form_essential(alg, k, lex=args.lex)
        else:
            es = oracle_essential(alg, k, lex=args.lex, workers=args.threads)
    except WeightError as exc:
        raise UsageError(str(exc)) from None
    except RealizationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.header:
        _emit(es.header(), out)
    for line in es.json_lines():
        _emit(line, out)
    return EXIT_OK


def cmd_dim(args, out) -> int:
    alg = _algebra(args.type, args.rank)
    k = parse_weight(args.weight, alg.rank)
    _emit({"algebra": str(alg), "weight": list(k), "dim": weyl_dim(alg, k)}, out)
    return EXIT_OK


def cmd_header(args, out) -> int:
    alg = _algebra(args.type, args.rank)
    _emit(export_header(alg, args.lex), out)
    return EXIT_OK


def _need_type(args, default: str | None = None) -> AlgebraType:
    kind = args.type or default
    if kind is None:
        raise UsageError(f"verify {args.check} needs --type")
    if default and args.type and args.type != default:
        raise UsageError(f"verify {args.check} applies to type {default} only")
    return _algebra(kind, args.rank)


def run_check(args) -> dict:
    check = args.check
    if check in CLOSED_FORM_CHECKS:
        alg = _need_type(args, CLOSED_FORM_CHECKS[check])
        return V.closed_form_report(alg, parse_weights(args.weights, alg.rank))
    if check == "cone":
        return V.cone_report(args.rank, args.bound)
    if check == "dagger":
        return V.dagger_report(_need_type(args, "D"))
    alg = _need_type(args)
    if check == "inequalities":
        return V.inequalities_report(alg, parse_weights(args.weights, alg.rank))
    if check == "star":
        return V.star_report(alg, parse_weights(args.weights, alg.rank))
    if check == "doublestar":
        return V.doublestar_report(alg)
    if check == "saturation":
        return V.saturation_report(alg, args.bound, args.system)
    if check == "lift":
        return V.lift_report(alg)
    raise UsageError(f"unknown check {check!r}")


def cmd_verify(args, out) -> int:
    start = time.perf_counter()
    report = run_check(args)
    if args.timing:
        report["wall_seconds"] = round(time.perf_counter() - start, 3)
    out.write(json.dumps(report, indent=2) + "\n")
    return EXIT_OK if report["passed"] else EXIT_FAIL


def _threads(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("threads must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="essig", description="Essential signatures for B_n and D_n.")
    p.add_argument("-v", "--verbose", action="count", default=0)
    p.add_argument("-o", "--output", help="write results to this file instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    def target(sp, required=True):
        sp.add_argument("--type", choices=("B", "D"), type=str.upper, required=required)
        sp.add_argument("--rank", type=int, required=True)

    e = sub.add_parser("essential", help="list essential signatures as JSON lines")
    target(e)
    e.add_argument("--weight", required=True, help="fundamental coefficients, e.g. 1,0,2")
    e.add_argument("--method", choices=("oracle", "closed"), default="oracle")
    e.add_argument("--lex", choices=("first", "last"), default="first",
                   help="most significant position in the degree-lex tie break")
    e.add_argument("--header", action="store_true", help="start with an export header line")
    e.add_argument("--threads", type=_threads,
                   default=None, help="worker processes (default: ESSIG_THREADS or 1)")
    e.set_defaults(func=cmd_essential)

    d = sub.add_parser("dim", help="Weyl dimension of an irreducible module")
    target(d)
    d.add_argument("--weight", required=True)
    d.set_defaults(func=cmd_dim)

    h = sub.add_parser("header", help="print the root numeration export header")
    target(h)
    h.add_argument("--lex", choices=("first", "last"), default="first")
    h.set_defaults(func=cmd_header)

    v = sub.add_parser("verify", help="run a verification sweep and print a JSON report")
    v.add_argument("check", choices=CHECKS)
    target(v, required=False)
    v.add_argument("--bound", type=int, default=2, help="degree cap (saturation) or entry cap (cone)")
    v.add_argument("--weights", help="semicolon-separated weights, e.g. '1,0;0,2'")
    v.add_argument("--system", choices=("explicit", "recursive"), default="explicit")
    v.add_argument("--no-timing", dest="timing", action="store_false",
                   help="omit wall time so the report is byte-for-byte reproducible")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s %(name)s: %(message)s")
    out = open(args.output, "w", encoding="utf-8") if args.output else sys.stdout
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"essig: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if out is not sys.stdout:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
