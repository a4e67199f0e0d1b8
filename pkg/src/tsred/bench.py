"""Benchmark harness: run any reducer on an instance, collect repeated-run
reports, and reproduce the result tables for the bundled experiments."""

from __future__ import annotations

import json
import statistics
import time
from dataclasses import dataclass

from .baselines import SAParams, SAResult, greedy_ge, greedy_gre, hgs, simulated_annealing
from .core import Instance, is_cover, reduction_percent
from .corpus import builtin, builtin_names
from .fis import FISConfig, run_fis
from .fuzzy import RuleBase
from .io import RunReport, RunResult
from .oracle import minimum_cover

ALGORITHMS = ("fis", "sa", "ge", "gre", "hgs")


def run_algorithm(
    instance: Instance,
    algorithm: str,
    seed: int = 0,
    *,
    population: int = 20,
    iterations: int = 100,
    alpha: float = 0.990,
    t_initial: float = 2984.975,
    rule_base: RuleBase | None = None,
) -> tuple[str, ...]:
    """One run of a reducer; returns selected test ids in selection order.

    Every result is re-checked with is_cover before it is handed back, so a
    broken reducer fails loudly instead of producing a bogus report.
    """
    if algorithm == "fis":
        cfg = FISConfig(
            population_size=population, max_iterations=iterations, seed=seed, rule_base=rule_base
        )
        selected = run_fis(instance, cfg).solution.selected
    elif algorithm == "sa":
        params = SAParams(alpha=alpha, t_initial=t_initial, seed=seed)
        result: SAResult = simulated_annealing(instance, params)
        selected = result.solution.selected
    elif algorithm == "ge":
        selected = tuple(greedy_ge(instance))
    elif algorithm == "gre":
        selected = tuple(greedy_gre(instance))
    elif algorithm == "hgs":
        selected = tuple(hgs(instance))
    else:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    if not is_cover(instance, selected):
        raise AssertionError(f"{algorithm} returned a non-covering selection")
    return instance.ids(selected)


def solve_report(
    instance: Instance,
    algorithm: str,
    seed: int = 0,
    runs: int = 1,
    *,
    population: int = 20,
    iterations: int = 100,
    alpha: float = 0.990,
    t_initial: float = 2984.975,
    rule_base: RuleBase | None = None,
    clock=time.perf_counter,
) -> RunReport:
    """Repeated runs as a verifiable report.  Run k of K uses seed + k
    (0-based), so a K-run report at seed s covers seeds s .. s+K-1."""
    if runs < 1:
        raise ValueError("runs must be positive")
    results = []
    for k in range(runs):
        t0 = clock()
        selected = run_algorithm(
            instance,
            algorithm,
            seed + k,
            population=population,
            iterations=iterations,
            alpha=alpha,
            t_initial=t_initial,
            rule_base=rule_base,
        )
        t1 = clock()
        results.append(
            RunResult(selected=selected, size=len(selected), millis=round((t1 - t0) * 1000.0, 3))
        )
    return RunReport(
        instance=instance.name,
        algorithm=algorithm,
        seed=seed,
        total_tests=instance.n,
        runs=tuple(results),
        best_size=min(r.size for r in results),
    )


@dataclass(frozen=True)
class BenchCell:
    instance: str
    algorithm: str
    best_size: int
    best_selected: tuple[str, ...]
    sizes: tuple[int, ...]
    mean_size: float
    stddev_size: float
    reduction_text: str
    mean_millis: float


@dataclass(frozen=True)
class BenchSummary:
    suite: tuple[str, ...]
    runs: int
    seed: int
    oracle_minimum: dict[str, int]
    cells: tuple[BenchCell, ...]


def bench_suite(
    runs: int = 15, seed: int = 1, rule_base: RuleBase | None = None
) -> BenchSummary:
    """Full sweep: every algorithm on every bundled instance, plus the exact
    minimum for reference."""
    names = builtin_names()
    cells = []
    minima: dict[str, int] = {}
    for name in names:
        inst = builtin(name)
        minima[name] = minimum_cover(inst).minimum_size
        for algorithm in ALGORITHMS:
            report = solve_report(inst, algorithm, seed=seed, runs=runs, rule_base=rule_base)
            sizes = tuple(r.size for r in report.runs)
            best = min(report.runs, key=lambda r: r.size)
            cells.append(
                BenchCell(
                    instance=name,
                    algorithm=algorithm,
                    best_size=report.best_size,
                    best_selected=best.selected,
                    sizes=sizes,
                    mean_size=statistics.fmean(sizes),
                    stddev_size=statistics.pstdev(sizes),
                    reduction_text=reduction_percent(inst.n, report.best_size).text,
                    mean_millis=round(statistics.fmean(r.millis for r in report.runs), 3),
                )
            )
    return BenchSummary(
        suite=tuple(names), runs=runs, seed=seed, oracle_minimum=minima, cells=tuple(cells)
    )


def render_tables(summary: BenchSummary) -> str:
    """Human-readable tables: best sizes with reduction percentages, then
    mean +/- stddev with mean runtimes."""
    by_key = {(c.instance, c.algorithm): c for c in summary.cells}
    lines = []
    header = f"{'instance':<14}" + "".join(f"{a:>12}" for a in ALGORITHMS) + f"{'exact':>12}"
    lines.append(f"best reduced size over {summary.runs} runs (seed {summary.seed})")
    lines.append(header)
    for name in summary.suite:
        row = f"{name:<14}"
        for a in ALGORITHMS:
            cell = by_key[(name, a)]
            row += f"{cell.best_size:>6} {cell.reduction_text + '%':>5}"
        row += f"{summary.oracle_minimum[name]:>12}"
        lines.append(row)
    lines.append("")
    lines.append("mean size +/- stddev (mean ms per run)")
    lines.append(header[: len(f"{'instance':<14}") + 12 * len(ALGORITHMS)])
    for name in summary.suite:
        row = f"{name:<14}"
        for a in ALGORITHMS:
            cell = by_key[(name, a)]
            row += f" {cell.mean_size:>5.2f}+-{cell.stddev_size:<5.2f}"
        lines.append(row)
        ms = "  ".join(f"{a}={by_key[(name, a)].mean_millis:.1f}ms" for a in ALGORITHMS)
        lines.append(f"{'':<14}{ms}")
    return "\n".join(lines) + "\n"


def summary_json(summary: BenchSummary) -> str:
    """Machine-readable summary.  Runtimes are deliberately excluded so two
    identically seeded sweeps serialize byte for byte."""
    payload = {
        "suite": list(summary.suite),
        "runs": summary.runs,
        "seed": summary.seed,
        "oracle_minimum": dict(sorted(summary.oracle_minimum.items())),
        "results": [
            {
                "instance": c.instance,
                "algorithm": c.algorithm,
                "best_size": c.best_size,
                "best_selected": list(c.best_selected),
                "sizes": list(c.sizes),
                "mean_size": c.mean_size,
                "stddev_size": c.stddev_size,
                "reduction_percent": c.reduction_text,
            }
            for c in summary.cells
        ],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
