"""Command line entry point.

Exit codes: 0 success, 1 a grid or uniqueness check failed, 2 bad usage or
malformed input.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from pulsar import render
from pulsar.construct import Grid, construct_direct, construct_recursive, verify
from pulsar.search import SolveConfig, enumerate_solutions
from pulsar.sequence import (
    PRINTED_BLOCK_8,
    block,
    block_from_top_row,
    prefix,
    printed_divergences,
)
from pulsar.spiral import build_pattern

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

PRINTED_BLOCKS = {8: PRINTED_BLOCK_8}


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _csv(values) -> str:
    return ",".join(str(v) for v in values)


def cmd_pattern(args) -> int:
    pattern = build_pattern(args.n)
    if args.format == "ascii":
        print(render.ascii_pattern(pattern))
    elif args.format == "json":
        print(render.PuzzleDocument.for_pattern(pattern).to_json())
    else:
        print(render.svg(pattern))
    return EXIT_OK


def cmd_seq(args) -> int:
    if args.terms is not None:
        print(_csv(prefix(args.terms)))
        for k, printed, derived in printed_divergences(min(args.terms, 34)):
            print(f"note: term {k} is {derived}; the printed display has {printed}", file=sys.stderr)
    elif args.block is not None:
        print(_csv(block(args.block).entries))
        if args.block in PRINTED_BLOCKS:
            print(
                f"note: the printed block {args.block} reads {_csv(PRINTED_BLOCKS[args.block])},"
                f" which is not a permutation of 1..{args.block}",
                file=sys.stderr,
            )
    else:
        for k, x in enumerate(prefix(args.bfile), start=1):
            print(f"{k} {x}")
    return EXIT_OK


def cmd_construct(args) -> int:
    build = construct_direct if args.method == "direct" else construct_recursive
    grid = build(args.n)
    pattern = build_pattern(args.n)
    if args.format == "json":
        print(render.PuzzleDocument.for_pattern(pattern, grid).to_json())
    elif args.format == "ascii":
        print(render.ascii_grid(grid, pattern))
    else:
        print(render.svg(pattern, grid))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        if args.path == "-":
            text = sys.stdin.read()
        else:
            with open(args.path, encoding="utf-8") as fh:
                text = fh.read()
        doc = render.PuzzleDocument.from_json(text)
    except (OSError, render.DocumentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if doc.grid is None:
        print("error: document has no grid to verify", file=sys.stderr)
        return EXIT_USAGE
    pattern = build_pattern(doc.n)
    if doc.circled != [list(row) for row in pattern.circled_mask]:
        print("error: only spiral circle layouts can be verified", file=sys.stderr)
        return EXIT_USAGE
    report = verify(Grid.from_rows(doc.grid), pattern)
    print(report.summary())
    return EXIT_OK if report.all_ok else EXIT_FAIL


def cmd_check(args) -> int:
    if args.n_from > args.n_to:
        print(f"error: empty range {args.n_from}..{args.n_to}", file=sys.stderr)
        return EXIT_USAGE
    failed = False
    for n in range(args.n_from, args.n_to + 1):
        config = SolveConfig(
            inference_level=args.level,
            solution_cap=2,
            lookahead=args.lookahead,
            workers=args.workers,
        )
        report = enumerate_solutions(build_pattern(n), config)
        expected = construct_direct(n)
        if report.count == 1 and report.count_exact and report.solutions[0] == expected:
            status = "unique and matches construction"
        elif report.count == 0:
            status = "no solution"
        elif report.count == 1:
            status = "unique but differs from construction"
        else:
            status = "NOT unique"
        line = f"n={n:<3d} {status:<34s} nodes={report.nodes_visited}"
        if args.timing:
            line += f" time={report.elapsed:.2f}s"
        print(line)
        if status != "unique and matches construction":
            failed = True
            for i, grid in enumerate(report.solutions, start=1):
                print(f"  solution {i}:")
                print("\n".join("    " + row for row in render.ascii_grid(grid, build_pattern(n)).splitlines()))
        elif n in PRINTED_BLOCKS:
            found = block_from_top_row(list(report.solutions[0].values[0]))
            print(
                f"  block {n} read from the solution: {_csv(found)}"
                f" (printed: {_csv(PRINTED_BLOCKS[n])})"
            )
        if args.show and report.solutions:
            print(render.ascii_grid(report.solutions[0], build_pattern(n)))
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pulsar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pattern", help="draw the circled spiral")
    p.add_argument("n", type=_positive)
    p.add_argument("--format", choices=["ascii", "json", "svg"], default="ascii")
    p.set_defaults(func=cmd_pattern)

    p = sub.add_parser("seq", help="print Pulsar sequence terms, blocks or a b-file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--terms", type=_positive, metavar="M")
    group.add_argument("--block", type=_positive, metavar="I")
    group.add_argument("--bfile", type=_positive, metavar="M")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("construct", help="build the unique solution")
    p.add_argument("n", type=_positive)
    p.add_argument("--method", choices=["direct", "recursive"], default="direct")
    p.add_argument("--format", choices=["json", "ascii", "svg"], default="json")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a JSON puzzle document ('-' for stdin)")
    p.add_argument("path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check", help="confirm uniqueness with the exhaustive search")
    p.add_argument("n_from", type=_positive)
    p.add_argument("n_to", type=_positive)
    p.add_argument("--level", choices=["L0", "L1"], default="L1")
    p.add_argument(
        "--lookahead", action=argparse.BooleanOptionalAction, default=True,
        help="per-line matching test after each placement (default: on)",
    )
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--timing", action="store_true", help="append elapsed seconds")
    p.add_argument("--show", action="store_true", help="print the solution found")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
