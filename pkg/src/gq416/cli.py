"""Command-line front end: construct, verify, replay.

Exit codes: 0 = all requested checks pass, 2 = a check failed (the
report is still written), 1 = usage, I/O or parse error.
"""

import argparse
import json
import sys

from gq416.counting import LEMMA_IDS, replay_lemma
from gq416.geometry import (
    GeometryFormatError,
    build_quadric_quadrangle,
    parse_geometry,
    serialize_geometry,
)
from gq416.verify import (
    SUITES,
    VerificationContext,
    format_report_text,
    run_suites,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CHECK_FAILED = 2


def cmd_construct(args) -> int:
    S = build_quadric_quadrangle()
    text = serialize_geometry(S)
    try:
        with open(args.output, "w") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.output}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"constructed Q(5,4): {len(S.points)} points, {len(S.lines)} lines -> {args.output}")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        with open(args.input) as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        S = parse_geometry(text)
    except (GeometryFormatError, ValueError) as exc:
        print(f"error: parse failure in {args.input}: {exc}", file=sys.stderr)
        return EXIT_USAGE

    suite_ids = args.suite or None
    unknown = [s for s in (suite_ids or []) if s not in SUITES]
    if unknown:
        print(f"error: unknown suites: {', '.join(unknown)}", file=sys.stderr)
        print(f"known suites: {', '.join(SUITES)}", file=sys.stderr)
        return EXIT_USAGE

    ctx = VerificationContext(S, sample=args.sample, seed=args.seed, deep=args.deep)
    report = run_suites(ctx, suite_ids)
    rendered = (
        json.dumps(report, indent=2) + "\n"
        if args.format == "json"
        else format_report_text(report)
    )
    if args.output:
        try:
            with open(args.output, "w") as fh:
                fh.write(rendered)
        except OSError as exc:
            print(f"error: cannot write {args.output}: {exc}", file=sys.stderr)
            return EXIT_USAGE
    else:
        sys.stdout.write(rendered)
    return EXIT_OK if report["status"] == "pass" else EXIT_CHECK_FAILED


def cmd_replay(args) -> int:
    ids = list(LEMMA_IDS) if args.all or not args.lemma else args.lemma
    unknown = [i for i in ids if i not in LEMMA_IDS]
    if unknown:
        print(f"error: unknown lemma ids: {', '.join(unknown)}", file=sys.stderr)
        print(f"known ids: {', '.join(LEMMA_IDS)}", file=sys.stderr)
        return EXIT_USAGE
    traces = [replay_lemma(i) for i in ids]
    if args.format == "json":
        print(json.dumps({"schema": 1, "traces": [t.to_dict() for t in traces]}, indent=2))
    else:
        for trace in traces:
            status = "PASS" if trace.passed else "FAIL"
            print(f"{trace.lemma_id}: {status}")
            for step in trace.steps:
                mark = {"pass": "ok", "fail": "XX", "assumed": "as", "noted": ".."}[step.verdict]
                cite = f"  [{step.citation}]" if step.citation else ""
                print(f"  [{mark}] ({step.kind.lower()}) {step.statement}{cite}")
            print()
    return EXIT_OK if all(t.passed for t in traces) else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gq416",
        description="Construct Q(5,4), verify its structure exhaustively, "
        "and replay the GQ(4,16) counting arguments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_construct = sub.add_parser("construct", help="build Q(5,4) and write the geometry file")
    p_construct.add_argument("-o", "--output", required=True, help="geometry file path")
    p_construct.set_defaults(func=cmd_construct)

    p_verify = sub.add_parser("verify", help="run verification suites on a geometry file")
    p_verify.add_argument("input", help="geometry file produced by construct")
    p_verify.add_argument(
        "--suite", action="append", metavar="ID",
        help=f"suite to run (repeatable; default all). Known: {', '.join(SUITES)}",
    )
    p_verify.add_argument("--all", action="store_true", help="run all suites (the default)")
    p_verify.add_argument("--sample", type=int, default=None, metavar="N",
                          help="sampled fast mode for the exhaustive scans")
    p_verify.add_argument("--seed", type=int, default=0, help="sampling seed (default 0)")
    p_verify.add_argument("--deep", action="store_true",
                          help="exhaust the profile suites over all (non-edge, r) pairs")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.add_argument("-o", "--output", default=None, help="write the report here")
    p_verify.set_defaults(func=cmd_verify)

    p_replay = sub.add_parser("replay", help="replay the counting lemma proofs")
    p_replay.add_argument("lemma", nargs="*", help=f"lemma ids ({', '.join(LEMMA_IDS)})")
    p_replay.add_argument("--all", action="store_true", help="replay every lemma")
    p_replay.add_argument("--format", choices=("text", "json"), default="text")
    p_replay.set_defaults(func=cmd_replay)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
