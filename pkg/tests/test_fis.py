import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tsred import (
    OPERATORS,
    FISConfig,
    builtin,
    hamming,
    measure_diversification,
    measure_intensification,
    measure_quality,
    run_fis,
    select_operator,
)
from tsred.fis import (
    LengthMismatchError,
    apply_operator,
    insert_at,
    order_crossover,
    reverse_segment,
    swap_at,
)
from tsred.fuzzy import LinguisticVariable, Rule, RuleBase, Trapezoid


def test_hamming_basics():
    assert hamming((1, 2, 3), (1, 2, 3)) == 0.0
    assert hamming((1, 2, 3), (3, 2, 1)) == pytest.approx(2 / 3)
    assert hamming((1, 2), (2, 1)) == 1.0
    assert hamming((), ()) == 0.0
    with pytest.raises(LengthMismatchError):
        hamming((1, 2), (1, 2, 3))


def test_measure_quality_follows_formula():
    n = 10
    assert measure_quality(5, 5, n) == 0.5
    assert measure_quality(n, 1, n) == pytest.approx(0.5 + (n - 1) / (2 * n))
    assert measure_quality(1, n, n) == pytest.approx(0.5 - (n - 1) / (2 * n))
    # clamping kicks in only beyond a full-range jump
    assert measure_quality(0, 2 * n, n) == 0.0
    assert measure_quality(2 * n, 0, n) == 1.0


def test_measure_diversification_and_intensification():
    x = (0, 1, 2, 3)
    pop = [(0, 1, 2, 3), (3, 2, 1, 0), (0, 1, 3, 2)]
    assert measure_diversification(x, pop) == pytest.approx((0 + 1 + 0.5) / 3)
    assert measure_intensification(x, (0, 1, 2, 3)) == 1.0
    assert measure_intensification(x, (3, 2, 1, 0)) == 0.0
    with pytest.raises(ValueError):
        measure_diversification(x, [])


def test_position_operators_exact():
    p = (10, 11, 12, 13, 14)
    assert swap_at(p, 0, 3) == (13, 11, 12, 10, 14)
    assert insert_at(p, 1, 3) == (10, 12, 13, 11, 14)
    assert insert_at(p, 3, 0) == (13, 10, 11, 12, 14)
    assert reverse_segment(p, 1, 3) == (10, 13, 12, 11, 14)
    assert order_crossover(p, (14, 13, 12, 11, 10), 1, 2) == (14, 11, 12, 13, 10)


def test_order_crossover_identity_mate_keeps_permutation():
    p = (0, 1, 2, 3, 4, 5)
    assert order_crossover(p, p, 2, 4) == p


@settings(max_examples=300, deadline=None)
@given(
    st.sampled_from(OPERATORS),
    st.integers(2, 12),
    st.integers(0, 2**32 - 1),
)
def test_apply_operator_preserves_permutation(op, n, seed):
    rng = np.random.default_rng(seed)
    p = tuple(int(v) for v in rng.permutation(n))
    mate = tuple(int(v) for v in rng.permutation(n))
    out = apply_operator(op, p, mate, rng)
    assert sorted(out) == list(range(n))


def test_apply_operator_single_element_is_noop():
    rng = np.random.default_rng(0)
    assert apply_operator("swap", (0,), (0,), rng) == (0,)


def test_apply_operator_unknown_name():
    with pytest.raises(ValueError):
        apply_operator("shuffle", (0, 1), (0, 1), np.random.default_rng(0))


def _constant_rule_base(decision: str) -> RuleBase:
    anything = LinguisticVariable("quality", {"Any": Trapezoid(0, 0, 1, 1)})
    output = LinguisticVariable(
        "decision", {"Change": Trapezoid(0, 0, 0.3, 0.5), "Maintain": Trapezoid(0.5, 0.7, 1, 1)}
    )
    return RuleBase(
        inputs={"quality": anything},
        output=output,
        rules=(Rule.of({"quality": "Any"}, decision),),
    )


def test_select_operator_keeps_on_maintain():
    rng = np.random.default_rng(0)
    rb = _constant_rule_base("Maintain")
    for op in OPERATORS:
        assert select_operator(op, rb, 0.5, 0.5, 0.5, rng) == op


def test_select_operator_switches_on_change():
    rng = np.random.default_rng(0)
    rb = _constant_rule_base("Change")
    seen = set()
    for _ in range(50):
        out = select_operator("swap", rb, 0.5, 0.5, 0.5, rng)
        assert out != "swap"
        assert out in OPERATORS
        seen.add(out)
    assert seen == {"insertion", "reversal", "crossover"}


def test_select_operator_single_pool_never_switches():
    rng = np.random.default_rng(0)
    rb = _constant_rule_base("Change")
    assert select_operator("swap", rb, 0.5, 0.5, 0.5, rng, pool=("swap",)) == "swap"


def test_config_validation():
    with pytest.raises(ValueError):
        FISConfig(population_size=1)
    with pytest.raises(ValueError):
        FISConfig(max_iterations=0)


def test_run_is_deterministic_per_seed():
    inst = builtin("experiment-2")
    a = run_fis(inst, FISConfig(seed=11))
    b = run_fis(inst, FISConfig(seed=11))
    assert a == b
    c = run_fis(inst, FISConfig(seed=12))
    assert a.solution.permutation != c.solution.permutation or a.history != c.history


def test_run_history_tracks_incumbent(tiny):
    res = run_fis(tiny, FISConfig(population_size=4, max_iterations=30, seed=5))
    assert len(res.history) == 30
    assert len(res.operators) == 30
    assert all(op in OPERATORS for op in res.operators)
    assert all(a >= b for a, b in zip(res.history, res.history[1:]))
    assert res.history[-1] == res.solution.prefix_len


def test_run_finds_tiny_minimum(tiny):
    res = run_fis(tiny, FISConfig(population_size=6, max_iterations=40, seed=0))
    assert res.solution.prefix_len == 2
    assert set(res.solution.selected) == {0, 2}  # t1 and t3, the unique minimum


def test_run_respects_custom_rule_base(tiny):
    rb = _constant_rule_base("Maintain")
    res = run_fis(tiny, FISConfig(population_size=4, max_iterations=10, seed=3, rule_base=rb))
    assert len(set(res.operators)) == 1  # operator never changes under Maintain
