#!/usr/bin/env python3
"""Reproduce the benchmark tables on the bundled instances.

Runs every algorithm 15 times per instance by default and prints the
best-size and mean/stddev tables; optionally writes the machine readable
summary as JSON.
"""

import argparse

from tsred.bench import bench_suite, render_tables, summary_json


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--runs", type=int, default=15)
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--output", help="write JSON summary here")
    args = parser.parse_args()
    summary = bench_suite(runs=args.runs, seed=args.seed)
    print(render_tables(summary), end="")
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(summary_json(summary))
        print(f"\nJSON summary written to {args.output}")


if __name__ == "__main__":
    main()
