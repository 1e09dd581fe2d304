"""Run the exhaustive oracle over a range of sizes and print a timing table.

    python scripts/check_uniqueness.py 1 8 --level L1
    python scripts/check_uniqueness.py 9 9 --level L1     # takes a few minutes
"""

import argparse

from pulsar import SolveConfig, build_pattern, construct_direct, enumerate_solutions


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("n_from", type=int)
    parser.add_argument("n_to", type=int)
    parser.add_argument("--level", default="L1", choices=["L0", "L1"])
    parser.add_argument("--no-lookahead", action="store_true")
    parser.add_argument("--engine", default="kernel", choices=["kernel", "python"])
    args = parser.parse_args()

    print(f"{'n':>3} {'solutions':>9} {'matches':>7} {'nodes':>12} {'seconds':>9}")
    for n in range(args.n_from, args.n_to + 1):
        config = SolveConfig(
            args.level, solution_cap=2, lookahead=not args.no_lookahead, engine=args.engine
        )
        report = enumerate_solutions(build_pattern(n), config)
        matches = report.solutions[:1] == [construct_direct(n)]
        print(
            f"{n:>3} {report.count:>9} {str(matches):>7} "
            f"{report.nodes_visited:>12} {report.elapsed:>9.2f}",
            flush=True,
        )


if __name__ == "__main__":
    main()
