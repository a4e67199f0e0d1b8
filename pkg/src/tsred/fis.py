"""Fuzzy-controlled operator-switching search over test permutations.

A population of permutations is mutated by one shared perturbation operator
per iteration (greedy one-to-one replacement, so a member only changes when
the candidate decodes to a strictly shorter covering prefix).  After each
iteration three search measures are computed from the iteration's best
candidate, and the rule base decides whether to keep the current operator or
swap it for a uniformly random different one.

All randomness flows from one numpy PCG64 generator seeded by the config, so
runs are reproducible across platforms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import Instance, Solution, decode, objective
from .fuzzy import RuleBase, default_rule_base, infer

OPERATORS: tuple[str, ...] = ("swap", "insertion", "reversal", "crossover")


class LengthMismatchError(ValueError):
    pass


def hamming(p: Sequence[int], q: Sequence[int]) -> float:
    """Fraction of positions where two equal-length sequences differ."""
    if len(p) != len(q):
        raise LengthMismatchError(f"lengths differ: {len(p)} vs {len(q)}")
    if not p:
        return 0.0
    return sum(a != b for a, b in zip(p, q)) / len(p)


def measure_quality(previous_objective: int, current_objective: int, n: int) -> float:
    """Improvement signal in [0, 1]; 0.5 is neutral, above 0.5 an improvement."""
    value = 0.5 + (previous_objective - current_objective) / (2 * n)
    return min(1.0, max(0.0, value))


def measure_diversification(x: Sequence[int], population: Sequence[Sequence[int]]) -> float:
    """Mean hamming distance from x to the population members."""
    if not population:
        raise ValueError("population is empty")
    return sum(hamming(x, p) for p in population) / len(population)


def measure_intensification(x: Sequence[int], best: Sequence[int]) -> float:
    """Closeness to the incumbent best: 1 - hamming(x, best)."""
    return 1.0 - hamming(x, best)


def swap_at(p: Sequence[int], i: int, j: int) -> tuple[int, ...]:
    q = list(p)
    q[i], q[j] = q[j], q[i]
    return tuple(q)


def insert_at(p: Sequence[int], src: int, dst: int) -> tuple[int, ...]:
    """Remove the entry at src and reinsert it at dst."""
    q = list(p)
    q.insert(dst, q.pop(src))
    return tuple(q)


def reverse_segment(p: Sequence[int], i: int, j: int) -> tuple[int, ...]:
    q = list(p)
    q[i : j + 1] = reversed(q[i : j + 1])
    return tuple(q)


def order_crossover(p: Sequence[int], mate: Sequence[int], i: int, j: int) -> tuple[int, ...]:
    """Keep p[i..j] in place, fill the remaining slots in mate order."""
    segment = tuple(p[i : j + 1])
    keep = set(segment)
    rest = [t for t in mate if t not in keep]
    return tuple(rest[:i]) + segment + tuple(rest[i:])


def _two_positions(rng: np.random.Generator, n: int) -> tuple[int, int]:
    i = int(rng.integers(n))
    j = int(rng.integers(n - 1))
    if j >= i:
        j += 1
    return i, j


def apply_operator(
    op: str, p: Sequence[int], mate: Sequence[int], rng: np.random.Generator
) -> tuple[int, ...]:
    """One random application of the named operator; always a valid permutation."""
    n = len(p)
    if n < 2:
        return tuple(p)
    if op == "swap":
        return swap_at(p, *_two_positions(rng, n))
    if op == "insertion":
        return insert_at(p, int(rng.integers(n)), int(rng.integers(n)))
    if op == "reversal":
        i, j = sorted(_two_positions(rng, n))
        return reverse_segment(p, i, j)
    if op == "crossover":
        i, j = sorted(_two_positions(rng, n))
        return order_crossover(p, mate, i, j)
    raise ValueError(f"unknown operator: {op!r}")


def select_operator(
    current: str,
    rule_base: RuleBase,
    quality: float,
    intensification: float,
    diversification: float,
    rng: np.random.Generator,
    pool: Sequence[str] = OPERATORS,
) -> str:
    """Keep `current` iff the defuzzified decision is at least 0.5.

    Below 0.5 a different operator is drawn uniformly from the pool.
    """
    crisp = infer(
        rule_base,
        {
            "quality": quality,
            "intensification": intensification,
            "diversification": diversification,
        },
    )
    if crisp >= 0.5:
        return current
    others = [op for op in pool if op != current]
    if not others:
        return current
    return others[int(rng.integers(len(others)))]


@dataclass
class FISConfig:
    population_size: int = 20
    max_iterations: int = 100
    seed: int = 0
    rule_base: RuleBase | None = None

    def __post_init__(self):
        if self.population_size < 2:
            raise ValueError("population_size must be at least 2")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be at least 1")


@dataclass(frozen=True)
class FISResult:
    solution: Solution
    history: tuple[int, ...]  # incumbent objective after each iteration
    operators: tuple[str, ...]  # operator in force during each iteration


def run_fis(instance: Instance, config: FISConfig | None = None) -> FISResult:
    cfg = config or FISConfig()
    rb = cfg.rule_base or default_rule_base()
    rng = np.random.default_rng(cfg.seed)
    n = instance.n

    population = [
        tuple(int(v) for v in rng.permutation(n)) for _ in range(cfg.population_size)
    ]
    objectives = [objective(instance, p) for p in population]
    best_idx = min(range(len(population)), key=objectives.__getitem__)
    best_perm, best_obj = population[best_idx], objectives[best_idx]
    current_op = OPERATORS[int(rng.integers(len(OPERATORS)))]

    history: list[int] = []
    op_log: list[str] = []
    for _ in range(cfg.max_iterations):
        op_log.append(current_op)
        previous_best = best_obj
        iter_perm: tuple[int, ...] | None = None
        iter_obj = n + 1
        for i, member in enumerate(population):
            if current_op == "crossover":
                mate = population[int(rng.integers(len(population)))]
            else:
                mate = member
            candidate = apply_operator(current_op, member, mate, rng)
            cand_obj = objective(instance, candidate)
            if cand_obj < iter_obj:
                iter_perm, iter_obj = candidate, cand_obj
            if cand_obj < objectives[i]:
                population[i], objectives[i] = candidate, cand_obj

        quality = measure_quality(previous_best, iter_obj, n)
        intensification = measure_intensification(iter_perm, best_perm)
        diversification = measure_diversification(iter_perm, population)
        if iter_obj < best_obj:
            best_perm, best_obj = iter_perm, iter_obj
        history.append(best_obj)
        current_op = select_operator(
            current_op, rb, quality, intensification, diversification, rng
        )

    return FISResult(decode(instance, best_perm), tuple(history), tuple(op_log))
