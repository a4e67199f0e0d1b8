"""Problem model for test redundancy reduction.

An instance is a suite of named tests plus a list of requirements, each
satisfiable by any test from its non-empty candidate set.  A candidate
solution is a permutation of all test indices; it decodes to the shortest
prefix whose tests together satisfy every requirement.  Coverage is computed
on bitsets over requirement indices, so membership checks stay cheap even in
search loops.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence


@dataclass(frozen=True)
class Violation:
    """One failed instance check.

    kind is one of "EmptyCandidates" (subject: requirement id),
    "UnknownTest" (subject: unknown test id) or "DuplicateId".
    """

    kind: str
    subject: str

    def __str__(self) -> str:
        return f"{self.kind}({self.subject})"


class InvalidInstanceError(ValueError):
    """Candidate instance data violates the instance invariants."""

    def __init__(self, violations: Sequence[Violation]):
        self.violations = tuple(violations)
        super().__init__("; ".join(map(str, self.violations)))


@dataclass(frozen=True)
class Requirement:
    """A coverage obligation; any test index in `candidates` satisfies it."""

    id: str
    candidates: frozenset[int]


@dataclass(frozen=True)
class Instance:
    """An immutable reduction problem over indexed tests.

    Construct through validate_instance so the invariants hold: unique ids,
    non-empty candidate sets, every candidate a known test.
    """

    name: str
    tests: tuple[str, ...]
    requirements: tuple[Requirement, ...]

    @property
    def n(self) -> int:
        return len(self.tests)

    @property
    def m(self) -> int:
        return len(self.requirements)

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.m) - 1

    @cached_property
    def test_masks(self) -> tuple[int, ...]:
        """Per-test bitset of satisfied requirements (bit i = requirement i)."""
        masks = [0] * self.n
        for i, req in enumerate(self.requirements):
            for j in req.candidates:
                masks[j] |= 1 << i
        return tuple(masks)

    @cached_property
    def index_of(self) -> dict[str, int]:
        return {t: j for j, t in enumerate(self.tests)}

    def ids(self, indices: Iterable[int]) -> tuple[str, ...]:
        return tuple(self.tests[j] for j in indices)


def instance_violations(
    name: str,
    tests: Sequence[str],
    requirements: Iterable[tuple[str, Iterable[str]]],
) -> list[Violation]:
    """Collect every invariant violation in raw instance data (empty if valid)."""
    violations: list[Violation] = []
    index: dict[str, int] = {}
    for t in tests:
        if t in index:
            violations.append(Violation("DuplicateId", t))
        else:
            index[t] = len(index)
    seen_reqs: set[str] = set()
    for req_id, candidates in requirements:
        if req_id in seen_reqs or req_id in index:
            violations.append(Violation("DuplicateId", req_id))
        seen_reqs.add(req_id)
        candidates = list(candidates)
        if not candidates:
            violations.append(Violation("EmptyCandidates", req_id))
        for c in candidates:
            if c not in index:
                violations.append(Violation("UnknownTest", c))
    return violations


def validate_instance(
    name: str,
    tests: Sequence[str],
    requirements: Iterable[tuple[str, Iterable[str]]],
) -> Instance:
    """Build an Instance from raw data, or raise InvalidInstanceError.

    The raised error carries the full violation list, not just the first
    offending entry.
    """
    tests = tuple(tests)
    reqs = [(rid, tuple(cands)) for rid, cands in requirements]
    violations = instance_violations(name, tests, reqs)
    if violations:
        raise InvalidInstanceError(violations)
    index = {t: j for j, t in enumerate(tests)}
    built = tuple(
        Requirement(rid, frozenset(index[c] for c in cands)) for rid, cands in reqs
    )
    return Instance(name, tests, built)


def is_cover(instance: Instance, selection: Iterable[int]) -> bool:
    """True iff every requirement has at least one candidate in `selection`."""
    masks = instance.test_masks
    n = instance.n
    covered = 0
    for j in selection:
        if not 0 <= j < n:
            raise ValueError(f"test index out of range: {j}")
        covered |= masks[j]
    return covered == instance.full_mask


@dataclass(frozen=True)
class Solution:
    """A permutation of all test indices plus its decoded covering prefix."""

    permutation: tuple[int, ...]
    prefix_len: int
    selected: tuple[int, ...]  # the covering prefix, in selection order


def objective(instance: Instance, permutation: Sequence[int]) -> int:
    """Length of the shortest covering prefix of `permutation`.

    The permutation must contain every test index exactly once; the full test
    set is a cover by the instance invariants, so a covering prefix always
    exists.
    """
    masks = instance.test_masks
    full = instance.full_mask
    covered = 0
    for pos, j in enumerate(permutation):
        covered |= masks[j]
        if covered == full:
            return pos + 1
    raise ValueError("sequence does not cover all requirements")


def decode(instance: Instance, permutation: Sequence[int]) -> Solution:
    """Decode a permutation to its minimal covering prefix."""
    perm = tuple(permutation)
    if len(perm) != instance.n or set(perm) != set(range(instance.n)):
        raise ValueError(f"expected a permutation of all {instance.n} test indices")
    prefix_len = objective(instance, perm)
    return Solution(perm, prefix_len, perm[:prefix_len])


class Reduction(NamedTuple):
    exact: Fraction
    text: str


def reduction_percent(n: int, k: int) -> Reduction:
    """Reduction 100*(n-k)/n as an exact fraction plus a one-decimal display."""
    if not 1 <= k <= n:
        raise ValueError(f"selected size {k} out of range for suite of {n}")
    exact = Fraction(100 * (n - k), n)
    return Reduction(exact, f"{float(exact):.1f}")
