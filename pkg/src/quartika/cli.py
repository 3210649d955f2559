"""Command-line interface.

    quartika verify N X Y Z W
    quartika family   --method {1,2} --m M [--n N] [--which ...]
    quartika pipeline --method {1,2,41,17} [--m M --n N] --multiples 2..5
    quartika richmond --n N --seed X,Y,Z,W [--steps S] [--p P]
    quartika search   --n-min A --n-max B --bound B [--threads T] [--checkpoint F]

Records go to stdout (or --out) as CSV with header ``source,n,x,y,z,w,meta``
or as JSON lines with the same keys.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
import warnings
from fractions import Fraction

from . import families, richmond, search
from .arith import Quadruple, verify
from .errors import ExceptionalPoint, QuartikaError

FIELDS = ("source", "n", "x", "y", "z", "w", "meta")

log = logging.getLogger("quartika")


def make_record(source: str, q: Quadruple, **meta) -> dict:
    meta_str = ";".join(f"{k}={v}" for k, v in meta.items())
    return {"source": source, "n": str(q.n), "x": str(q.x), "y": str(q.y),
            "z": str(q.z), "w": str(q.w), "meta": meta_str}


def record_verifies(rec: dict) -> bool:
    return verify(*(int(rec[k]) for k in ("n", "x", "y", "z", "w")))


def format_records(records, fmt: str) -> str:
    buf = io.StringIO()
    if fmt == "csv":
        writer = csv.DictWriter(buf, fieldnames=FIELDS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(records)
    else:
        for rec in records:
            buf.write(json.dumps(rec) + "\n")
    return buf.getvalue()


def parse_records(text: str, fmt: str) -> list:
    if fmt == "csv":
        return [dict(row) for row in csv.DictReader(io.StringIO(text))]
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def _int_list(text):
    try:
        return [int(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _seed(text):
    vals = _int_list(text)
    if len(vals) != 4:
        raise argparse.ArgumentTypeError("--seed needs exactly four integers x,y,z,w")
    return vals


def _range(text):
    lo, sep, hi = text.partition("..")
    try:
        lo = int(lo)
        hi = int(hi) if sep else lo
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected J1..J2, got {text!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _residues(text):
    return frozenset() if text.strip() == "" else frozenset(_int_list(text))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quartika",
                                     description="Solutions of n(x^4+y^4) = z^4+w^4.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check n(x^4+y^4) = z^4+w^4")
    for name in "nxyzw":
        p.add_argument(name, type=int)

    def output_flags(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("family", help="closed-form parametric families")
    p.add_argument("--method", type=int, choices=(1, 2), required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--which", choices=("2Q", "3Q", "first", "second", "all"))
    output_flags(p)

    p = sub.add_parser("pipeline", help="multiples jP mapped through the quartic")
    p.add_argument("--method", type=int, choices=(1, 2, 41, 17), required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--multiples", type=_range, default=range(2, 6), metavar="J1..J2")
    output_flags(p)

    p = sub.add_parser("richmond", help="tangent-line descent from a known solution")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=_seed, required=True,
                   help="known solution x,y,z,w of n(x^4+y^4) = z^4+w^4")
    p.add_argument("--steps", type=int, default=1)
    p.add_argument("--p", type=Fraction, help="direction parameter p (default: built-in list)")
    p.add_argument("--branch", type=int, choices=(0, 1))
    output_flags(p)

    p = sub.add_parser("search", help="brute-force smallest solutions")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--threads", type=int, default=0)
    p.add_argument("--checkpoint", metavar="PATH")
    p.add_argument("--residues", type=_residues, default=search.DEFAULT_RESIDUES,
                   help="admissible n mod 16, comma separated; '' disables the filter")
    p.add_argument("--allow-zero", action="store_true", help="admit zero coordinates")
    p.add_argument("--all-n", action="store_true",
                   help="also search n divisible by a fourth power")
    output_flags(p)
    return parser


def cmd_verify(args) -> int:
    lhs = args.n * (args.x**4 + args.y**4)
    rhs = args.z**4 + args.w**4
    if lhs == rhs:
        print("OK")
        return 0
    print(f"FAIL lhs={lhs} rhs={rhs}")
    return 1


def cmd_family(args, parser):
    if args.method == 1:
        if args.n is None:
            parser.error("--method 1 needs --n")
        which = {"all": ("2Q", "3Q"), None: ("2Q",)}.get(args.which, (args.which,))
        if not set(which) <= {"2Q", "3Q"}:
            parser.error("--method 1 takes --which 2Q, 3Q or all")
        for w in which:
            q = families.family1_closed_form(args.m, args.n, w)
            yield make_record(f"family1-{w}", q, m=args.m, n_param=args.n)
    else:
        if args.n not in (None, 1):
            parser.error("--method 2 takes only --m")
        which = {"all": ("first", "second"), None: ("first",)}.get(args.which, (args.which,))
        if not set(which) <= {"first", "second"}:
            parser.error("--method 2 takes --which first, second or all")
        for w in which:
            q = families.family2_closed_form(args.m, w)
            yield make_record("family2", q, m=args.m, which=w)


def cmd_pipeline(args, parser):
    if args.method == 1 and (args.m is None or args.n is None):
        parser.error("--method 1 needs --m and --n")
    if args.method == 2 and args.m is None:
        parser.error("--method 2 needs --m")
    if args.method in (41, 17) and (args.m is not None or args.n is not None):
        parser.error(f"--method {args.method} takes no --m/--n")
    for j in args.multiples:
        try:
            if args.method == 1:
                res = families.pipeline_theorem1(args.m, args.n, j)
                rec = make_record("pipeline-t1", res.quadruple, m=args.m, n_param=args.n, j=j)
            elif args.method == 2:
                res = families.pipeline_theorem2(args.m, j)
                rec = make_record("pipeline-t1", res.quadruple, m=args.m, n_param=1, j=j)
            elif args.method == 41:
                rec = make_record("pipeline-41", families.pipeline_instance41(j).quadruple, j=j)
            else:
                rec = make_record("pipeline-17", families.pipeline_instance17(j).quadruple, j=j)
        except ExceptionalPoint as err:
            log.warning("skipping j=%d: %s", j, err)
            continue
        yield rec


def cmd_richmond(args, parser):
    if args.steps < 1:
        parser.error("--steps must be >= 1")
    x, y, z, w = args.seed
    if not verify(args.n, x, y, z, w):
        parser.error(f"seed {args.seed} does not satisfy n(x^4+y^4) = z^4+w^4")
    p_values = [args.p] if args.p is not None else richmond.DEFAULT_P_VALUES
    branches = [args.branch] if args.branch is not None else [0, 1]
    selectors = [richmond.Selector(b, p) for p in p_values for b in branches]
    seed = (z, w, x, y)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        steps = richmond.chain(args.n, seed, args.steps, selectors)
    for warning in caught:
        log.warning("%s", warning.message)
    for i, q in enumerate(steps, start=1):
        yield make_record("richmond", q, seed=f"{x}/{y}/{z}/{w}", step=i)


def cmd_search(args, parser):
    threads = int(os.environ.get("QUARTIKA_THREADS", args.threads) or 0)
    try:
        config = search.SearchConfig(args.n_min, args.n_max, args.bound, args.residues,
                                     threads, args.checkpoint, args.allow_zero,
                                     not args.all_n)
    except ValueError as err:
        parser.error(str(err))
    for n, hit in search.sweep_outcomes(config).items():
        if hit is None:
            log.info("n=%d: no solution with coordinates <= %d", n, args.bound)
            continue
        yield make_record("search", hit.quadruple, bound=args.bound, s=hit.s)


COMMANDS = {"family": cmd_family, "pipeline": cmd_pipeline,
            "richmond": cmd_richmond, "search": cmd_search}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    if args.command == "verify":
        return cmd_verify(args)
    try:
        records = list(COMMANDS[args.command](args, parser))
    except QuartikaError as err:
        print(f"{type(err).__name__}: {err}", file=sys.stderr)
        return 1
    bad = [rec for rec in records if not record_verifies(rec)]
    for rec in bad:
        print(f"VerificationError: {rec}", file=sys.stderr)
    text = format_records(records, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
