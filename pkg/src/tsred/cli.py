"""Command line front end.

Exit codes: 0 success (or VALID), 1 INVALID selection, 2 usage error,
3 instance error (missing, unparseable, or structurally invalid).
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .bench import ALGORITHMS, bench_suite, render_tables, solve_report, summary_json
from .core import Instance, InvalidInstanceError, is_cover, reduction_percent
from .corpus import UnknownBenchmarkError, builtin_names, builtin_document
from .fuzzy import FuzzyDomainError, RuleBase, load_rule_base
from .io import ParseError, write_report
from .oracle import TooLargeError, enumerate_minimum_covers, minimum_cover

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_INSTANCE = 3

RULEBASE_ENV = "TSRED_RULEBASE"


class _InstanceError(Exception):
    pass


class _UsageError(Exception):
    pass


def _load_instance(source: str) -> Instance:
    try:
        if source.startswith("builtin:"):
            return builtin_document(source[len("builtin:") :]).to_instance()
        text = Path(source).read_text()
        from .io import parse_instance

        return parse_instance(text).to_instance()
    except UnknownBenchmarkError as exc:
        raise _InstanceError(f"{exc} (available: {', '.join(builtin_names())})") from exc
    except OSError as exc:
        raise _InstanceError(f"cannot read instance file: {exc}") from exc
    except (ParseError, InvalidInstanceError) as exc:
        raise _InstanceError(str(exc)) from exc


def _rule_base_from_env() -> RuleBase | None:
    path = os.environ.get(RULEBASE_ENV)
    if not path:
        return None
    try:
        return load_rule_base(path)
    except (OSError, ParseError, FuzzyDomainError, LookupError, ValueError) as exc:
        raise _UsageError(f"bad {RULEBASE_ENV}: {exc}") from exc


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _cmd_solve(args: argparse.Namespace) -> int:
    instance = _load_instance(args.instance)
    rule_base = _rule_base_from_env()
    report = solve_report(
        instance,
        args.algorithm,
        seed=args.seed,
        runs=args.runs,
        population=args.population,
        iterations=args.iterations,
        alpha=args.alpha,
        t_initial=args.t_initial,
        rule_base=rule_base,
    )
    _emit(write_report(report, instance), args.output)
    return EXIT_OK


def _cmd_oracle(args: argparse.Namespace) -> int:
    instance = _load_instance(args.instance)
    try:
        if args.enumerate:
            result = enumerate_minimum_covers(instance, cap=args.cap)
        else:
            result = minimum_cover(instance)
    except TooLargeError as exc:
        raise _InstanceError(str(exc)) from exc
    reduction = reduction_percent(instance.n, result.minimum_size)
    print(f"instance: {instance.name}")
    print(f"minimum size: {result.minimum_size}")
    print(f"reduction: {reduction.text}%")
    print(f"witness: {', '.join(instance.ids(sorted(result.witness)))}")
    if result.covers is not None:
        suffix = "" if result.complete else f" (stopped at cap {args.cap})"
        print(f"minimum covers: {len(result.covers)}{suffix}")
        for cover in result.covers:
            print("  " + ", ".join(instance.ids(sorted(cover))))
    return EXIT_OK


def _cmd_validate(args: argparse.Namespace) -> int:
    instance = _load_instance(args.instance)
    ids = [s.strip() for s in args.selection.split(",") if s.strip()]
    try:
        selection = [instance.index_of[t] for t in ids]
    except KeyError as exc:
        raise _UsageError(f"unknown test id {exc.args[0]!r} for {instance.name}") from exc
    if is_cover(instance, selection):
        reduction = reduction_percent(instance.n, len(set(selection)))
        print(f"VALID: {len(set(selection))} tests cover all {instance.m} requirements "
              f"(reduction {reduction.text}%)")
        return EXIT_OK
    covered = 0
    for t in selection:
        covered |= instance.test_masks[t]
    missing = [req.id for i, req in enumerate(instance.requirements) if not covered >> i & 1]
    print(f"INVALID: uncovered requirements: {', '.join(missing)}")
    return EXIT_INVALID


def _cmd_bench(args: argparse.Namespace) -> int:
    rule_base = _rule_base_from_env()
    summary = bench_suite(runs=args.runs, seed=args.seed, rule_base=rule_base)
    sys.stdout.write(render_tables(summary))
    if args.output:
        Path(args.output).write_text(summary_json(summary))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tsred", description="Test redundancy reduction toolkit."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_instance(p):
        p.add_argument(
            "--instance",
            required=True,
            metavar="FILE|builtin:NAME",
            help="instance JSON file, or one of: "
            + ", ".join(f"builtin:{n}" for n in builtin_names()),
        )

    p_solve = sub.add_parser("solve", help="run a reducer and print a run report")
    add_instance(p_solve)
    p_solve.add_argument("--algorithm", choices=ALGORITHMS, default="fis")
    p_solve.add_argument("--seed", type=int, default=0)
    p_solve.add_argument("--runs", type=int, default=1)
    p_solve.add_argument("--population", type=int, default=20)
    p_solve.add_argument("--iterations", type=int, default=100)
    p_solve.add_argument("--alpha", type=float, default=0.990)
    p_solve.add_argument("--t-initial", type=float, default=2984.975)
    p_solve.add_argument("--output", help="write the report here instead of stdout")
    p_solve.set_defaults(func=_cmd_solve)

    p_oracle = sub.add_parser("oracle", help="exact minimum cover")
    add_instance(p_oracle)
    p_oracle.add_argument("--enumerate", action="store_true", help="list all minimum covers")
    p_oracle.add_argument("--cap", type=int, default=1000, help="enumeration limit")
    p_oracle.set_defaults(func=_cmd_oracle)

    p_val = sub.add_parser("validate", help="check a comma separated test selection")
    add_instance(p_val)
    p_val.add_argument("--selection", required=True, metavar="t1,t2,...")
    p_val.set_defaults(func=_cmd_validate)

    p_bench = sub.add_parser("bench", help="sweep all algorithms over a suite")
    p_bench.add_argument("--suite", choices=["builtin"], default="builtin")
    p_bench.add_argument("--runs", type=int, default=15)
    p_bench.add_argument("--seed", type=int, default=1)
    p_bench.add_argument("--output", help="also write a machine readable JSON summary")
    p_bench.set_defaults(func=_cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _InstanceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INSTANCE


def console() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console()
