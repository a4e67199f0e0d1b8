"""Exact minimum-cover oracle.

Branch and bound over bitsets.  Intended for the bundled benchmark sizes
(a few dozen tests); anything beyond 64 tests is rejected outright rather
than silently taking forever.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Instance

MAX_TESTS = 64
_INF = 1 << 30


class TooLargeError(ValueError):
    """Instance exceeds the size this oracle is willing to attempt."""


@dataclass(frozen=True)
class OracleResult:
    minimum_size: int
    witness: frozenset[int]
    covers: tuple[frozenset[int], ...] | None = None
    complete: bool = True  # False if enumeration stopped at the cap


def _check_size(instance: Instance) -> None:
    if instance.n > MAX_TESTS:
        raise TooLargeError(f"{instance.n} tests exceeds the oracle limit of {MAX_TESTS}")


def _candidate_masks(instance: Instance) -> list[int]:
    """Per-requirement bitmask over test indices."""
    out = [0] * instance.m
    for i, req in enumerate(instance.requirements):
        for t in req.candidates:
            out[i] |= 1 << t
    return out


def _lower_bound(req_masks: list[int], uncovered: int, allowed: int) -> int:
    """Greedy family of uncovered requirements with pairwise disjoint
    candidate sets; its size is an admissible bound since each needs its
    own test.  Returns a huge value when some requirement has no candidate
    left at all."""
    bound = 0
    used = 0
    rest = uncovered
    while rest:
        i = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        cands = req_masks[i] & allowed
        if not cands:
            return _INF
        if not cands & used:
            bound += 1
            used |= cands
    return bound


def _branch_requirement(req_masks: list[int], uncovered: int, allowed: int) -> int:
    """Uncovered requirement with the fewest usable candidates."""
    best_i, best_count = -1, _INF
    rest = uncovered
    while rest:
        i = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        count = (req_masks[i] & allowed).bit_count()
        if count < best_count:
            best_i, best_count = i, count
            if count <= 1:
                break
    return best_i


def minimum_cover(instance: Instance) -> OracleResult:
    """Size and one witness of a minimum cover."""
    _check_size(instance)
    masks = instance.test_masks
    full = instance.full_mask
    req_masks = _candidate_masks(instance)
    all_tests = (1 << instance.n) - 1

    # Preprocessing to a fixpoint: forced picks, dominated tests, dominated
    # requirements.  Test dominance is safe here because only one optimal
    # cover is required.
    forced: set[int] = set()
    covered = 0
    allowed = all_tests
    active_reqs = full
    changed = True
    while changed:
        changed = False
        rest = active_reqs & ~covered
        while rest:
            i = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            cands = req_masks[i] & allowed
            if cands.bit_count() == 1:
                t = cands.bit_length() - 1
                forced.add(t)
                covered |= masks[t]
                changed = True
        rest = allowed & ~_forced_mask(forced)
        while rest:
            t = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            ut = masks[t] & active_reqs & ~covered
            other = allowed & ~(1 << t) & ~_forced_mask(forced)
            while other:
                u = (other & -other).bit_length() - 1
                other &= other - 1
                uu = masks[u] & active_reqs & ~covered
                if ut & ~uu:
                    continue
                if ut != uu or u < t:
                    allowed &= ~(1 << t)
                    changed = True
                    break
        rest = active_reqs & ~covered
        while rest:
            i = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            ci = req_masks[i] & allowed
            other = active_reqs & ~covered & ~(1 << i)
            while other:
                j = (other & -other).bit_length() - 1
                other &= other - 1
                cj = req_masks[j] & allowed
                # any test for j also satisfies i: i is implied by j
                if cj & ~ci:
                    continue
                if ci != cj or j < i:
                    active_reqs &= ~(1 << i)
                    changed = True
                    break

    uncovered0 = active_reqs & ~covered
    best_set = _greedy_cover(masks, req_masks, uncovered0, allowed) | forced
    best_size = len(best_set)

    def search(uncovered: int, chosen: set[int], allowed: int) -> None:
        nonlocal best_set, best_size
        if not uncovered:
            if len(chosen) < best_size:
                best_size = len(chosen)
                best_set = set(chosen)
            return
        lb = _lower_bound(req_masks, uncovered, allowed)
        if len(chosen) + lb >= best_size:
            return
        i = _branch_requirement(req_masks, uncovered, allowed)
        cands = req_masks[i] & allowed
        banned = 0
        while cands:
            t = (cands & -cands).bit_length() - 1
            cands &= cands - 1
            chosen.add(t)
            search(uncovered & ~masks[t], chosen, allowed & ~banned)
            chosen.remove(t)
            banned |= 1 << t  # later branches must cover i without t
        return

    search(uncovered0, set(forced), allowed)
    witness = frozenset(best_set)
    return OracleResult(minimum_size=best_size, witness=witness)


def enumerate_minimum_covers(instance: Instance, cap: int = 1000) -> OracleResult:
    """All minimum covers, lexicographically sorted, up to `cap` of them.

    Test dominance is deliberately skipped: a dominated test can still be
    part of an alternative optimum.  Forced picks and requirement dominance
    preserve the full set of optima.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    _check_size(instance)
    k = minimum_cover(instance).minimum_size
    masks = instance.test_masks
    full = instance.full_mask
    req_masks = _candidate_masks(instance)
    all_tests = (1 << instance.n) - 1

    forced: set[int] = set()
    covered = 0
    active_reqs = full
    changed = True
    while changed:
        changed = False
        rest = active_reqs & ~covered
        while rest:
            i = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            cands = req_masks[i]
            if cands.bit_count() == 1:
                t = cands.bit_length() - 1
                if t not in forced:
                    forced.add(t)
                    covered |= masks[t]
                    changed = True
        rest = active_reqs & ~covered
        while rest:
            i = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            ci = req_masks[i]
            other = active_reqs & ~covered & ~(1 << i)
            while other:
                j = (other & -other).bit_length() - 1
                other &= other - 1
                cj = req_masks[j]
                if cj & ~ci:
                    continue
                if ci != cj or j < i:
                    active_reqs &= ~(1 << i)
                    changed = True
                    break

    found: list[tuple[int, ...]] = []
    hit_cap = False

    def search(uncovered: int, chosen: set[int], allowed: int) -> None:
        nonlocal hit_cap
        if hit_cap:
            return
        if not uncovered:
            if len(chosen) == k:
                found.append(tuple(sorted(chosen)))
                if len(found) >= cap:
                    hit_cap = True
            return
        lb = _lower_bound(req_masks, uncovered, allowed)
        if len(chosen) + lb > k:
            return
        i = _branch_requirement(req_masks, uncovered, allowed)
        cands = req_masks[i] & allowed
        banned = 0
        while cands:
            t = (cands & -cands).bit_length() - 1
            cands &= cands - 1
            chosen.add(t)
            search(uncovered & ~masks[t], chosen, allowed & ~banned)
            chosen.remove(t)
            banned |= 1 << t

    search(active_reqs & ~covered, set(forced), all_tests)
    covers = tuple(frozenset(c) for c in sorted(found))
    return OracleResult(
        minimum_size=k,
        witness=covers[0] if covers else frozenset(),
        covers=covers,
        complete=not hit_cap,
    )


def _forced_mask(forced: set[int]) -> int:
    mask = 0
    for t in forced:
        mask |= 1 << t
    return mask


def _greedy_cover(masks, req_masks, uncovered: int, allowed: int) -> set[int]:
    """Quick upper bound: plain max-gain greedy restricted to allowed tests."""
    chosen: set[int] = set()
    while uncovered:
        best_t, best_gain = -1, 0
        pool = allowed
        while pool:
            t = (pool & -pool).bit_length() - 1
            pool &= pool - 1
            gain = (masks[t] & uncovered).bit_count()
            if gain > best_gain:
                best_t, best_gain = t, gain
        if best_t < 0:
            # infeasible under this restriction; caller's bound handles it
            break
        chosen.add(best_t)
        uncovered &= ~masks[best_t]
    return chosen
