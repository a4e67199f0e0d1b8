"""Independent reference implementations used to check the package.

Everything here is deliberately written the slow, obvious way (plain sets,
exhaustive enumeration) so it shares no code with the fast bitset versions
under test.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from tsred import Instance, validate_instance


def covers_naive(instance: Instance, selection) -> bool:
    picked = set(selection)
    return all(req.candidates & picked for req in instance.requirements)


def prefix_by_scan(instance: Instance, permutation) -> int:
    """Shortest covering prefix found by checking every prefix length."""
    for k in range(1, len(permutation) + 1):
        if covers_naive(instance, permutation[:k]):
            return k
    raise AssertionError("permutation does not cover")


def brute_minimum(instance: Instance) -> int:
    """Exhaustive minimum cover size by increasing subset cardinality."""
    tests = range(instance.n)
    for k in range(1, instance.n + 1):
        for combo in itertools.combinations(tests, k):
            if covers_naive(instance, combo):
                return k
    raise AssertionError("instance cannot be covered")


def brute_minimum_covers(instance: Instance) -> list[frozenset[int]]:
    """All minimum covers, exhaustively."""
    k = brute_minimum(instance)
    return [
        frozenset(combo)
        for combo in itertools.combinations(range(instance.n), k)
        if covers_naive(instance, combo)
    ]


def random_instance(rng: random.Random, max_tests: int = 16, max_requirements: int = 12) -> Instance:
    """Random solvable instance: every requirement names at least one test."""
    n = rng.randint(1, max_tests)
    m = rng.randint(1, max_requirements)
    tests = [f"t{j}" for j in range(n)]
    requirements = []
    for i in range(m):
        size = rng.randint(1, n)
        requirements.append((f"req_{i}", rng.sample(tests, size)))
    return validate_instance(f"random-{n}x{m}", tests, requirements)


def trapezoid_centroid_exact(a, b, c, d) -> Fraction:
    """Closed form centroid of a trapezoidal membership function over its
    support, integrating each piece analytically with exact rationals."""
    a, b, c, d = (Fraction(v) for v in (a, b, c, d))
    area = Fraction(0)
    moment = Fraction(0)
    if b > a:  # rising edge, mu = (x - a) / (b - a)
        area += (b - a) / 2
        moment += (b**3 / 3 - a * b**2 / 2 + a**3 / 6) / (b - a)
    if c > b:  # plateau, mu = 1
        area += c - b
        moment += (c**2 - b**2) / 2
    if d > c:  # falling edge, mu = (d - x) / (d - c)
        area += (d - c) / 2
        moment += (d**3 / 6 - d * c**2 / 2 + c**3 / 3) / (d - c)
    if area == 0:
        raise ValueError("degenerate trapezoid has no area")
    return moment / area
