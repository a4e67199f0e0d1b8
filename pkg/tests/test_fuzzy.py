import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import trapezoid_centroid_exact
from tsred import (
    LinguisticVariable,
    Rule,
    RuleBase,
    Trapezoid,
    centroid,
    default_rule_base,
    infer,
    rule_base_from_json,
)
from tsred.fuzzy import (
    FuzzyDomainError,
    MissingInputError,
    aggregate,
    consequent_levels,
    rule_activations,
)

# centroid of Trapezoid(0.5, 0.7, 1, 1) over its support, exact value
MAINTAIN_CENTROID = Fraction(191, 240)


def test_maintain_centroid_constant_agrees_with_closed_form():
    got = trapezoid_centroid_exact(Fraction(1, 2), Fraction(7, 10), 1, 1)
    assert got == MAINTAIN_CENTROID


def test_trapezoid_validates_ordering():
    with pytest.raises(ValueError):
        Trapezoid(0.4, 0.2, 0.6, 0.8)
    with pytest.raises(ValueError):
        Trapezoid(0.0, 0.2, 0.6, 1.2)
    with pytest.raises(ValueError):
        Trapezoid(-0.1, 0.2, 0.6, 0.8)


def test_membership_piecewise_values():
    t = Trapezoid(0.2, 0.4, 0.6, 0.8)
    assert t.membership(0.1) == 0.0
    assert t.membership(0.3) == pytest.approx(0.5)
    assert t.membership(0.5) == 1.0
    assert t.membership(0.7) == pytest.approx(0.5)
    assert t.membership(0.9) == 0.0
    assert t.membership(0.2) == 0.0
    assert t.membership(0.4) == 1.0


def test_membership_degenerate_edges_are_crisp():
    left = Trapezoid(0.0, 0.0, 0.2, 0.4)
    assert left.membership(0.0) == 1.0
    right = Trapezoid(0.6, 0.8, 1.0, 1.0)
    assert right.membership(1.0) == 1.0
    box = Trapezoid(0.3, 0.3, 0.6, 0.6)
    assert box.membership(0.3) == 1.0
    assert box.membership(0.6) == 1.0
    assert box.membership(0.29) == 0.0


def test_membership_rejects_values_outside_unit_interval():
    t = Trapezoid(0.0, 0.0, 1.0, 1.0)
    with pytest.raises(FuzzyDomainError):
        t.membership(-0.01)
    with pytest.raises(FuzzyDomainError):
        t.membership(1.01)


@settings(max_examples=300, deadline=None)
@given(st.lists(st.floats(0, 1), min_size=4, max_size=4), st.integers(0, 2**16))
def test_curve_matches_scalar_membership(breaks, grid_seed):
    a, b, c, d = sorted(breaks)
    trap = Trapezoid(a, b, c, d)
    rng = np.random.default_rng(grid_seed)
    xs = np.sort(rng.random(64))
    vec = trap.curve(xs)
    for x, mu in zip(xs, vec):
        assert mu == pytest.approx(trap.membership(float(x)), abs=1e-12)


def test_variable_requires_support_cover():
    with pytest.raises(ValueError, match="uncovered"):
        LinguisticVariable(
            "gap", {"lo": Trapezoid(0, 0, 0.2, 0.3), "hi": Trapezoid(0.5, 0.6, 1, 1)}
        )
    with pytest.raises(ValueError, match="uncovered"):
        LinguisticVariable("short", {"lo": Trapezoid(0, 0, 0.2, 0.9)})
    # touching supports are fine even where membership dips to zero
    LinguisticVariable(
        "ok", {"lo": Trapezoid(0, 0, 0.3, 0.5), "hi": Trapezoid(0.5, 0.7, 1, 1)}
    )


def test_rule_base_validation():
    rb = default_rule_base()
    with pytest.raises(ValueError, match="unknown variable"):
        RuleBase(rb.inputs, rb.output, (Rule.of({"nope": "Low"}, "Change"),))
    with pytest.raises(ValueError, match="no term"):
        RuleBase(rb.inputs, rb.output, (Rule.of({"quality": "Low"}, "Change"),))
    with pytest.raises(ValueError, match="never referenced"):
        RuleBase(rb.inputs, rb.output, (Rule.of({"quality": "Poor"}, "Change"),))
    with pytest.raises(ValueError, match="no rules"):
        RuleBase(rb.inputs, rb.output, ())
    with pytest.raises(ValueError, match="samples"):
        RuleBase(rb.inputs, rb.output, rb.rules, samples=1)


def test_activation_min_and_level_max():
    rb = default_rule_base()
    inputs = {"quality": 0.35, "intensification": 0.0, "diversification": 0.65}
    acts = rule_activations(rb, inputs)
    assert len(acts) == len(rb.rules)
    # quality 0.35: Poor = 0.25, Average = 1/3; diversification 0.65: High = 0.25
    by_rule = dict(zip(rb.rules, acts))
    poor_high = Rule.of({"quality": "Poor", "diversification": "High"}, "Maintain")
    assert by_rule[poor_high] == pytest.approx(0.25)
    levels = consequent_levels(rb, acts)
    assert set(levels) == {"Change", "Maintain"}
    assert levels["Maintain"] == pytest.approx(max(
        act for rule, act in zip(rb.rules, acts) if rule.consequent == "Maintain"
    ))


def test_missing_input_is_reported():
    rb = default_rule_base()
    with pytest.raises(MissingInputError) as exc:
        infer(rb, {"quality": 0.5, "intensification": 0.5})
    assert exc.value.variable == "diversification"


def test_aggregate_clips_and_merges():
    rb = default_rule_base()
    agg = aggregate(rb, {"Maintain": 0.5, "Change": 0.25})
    assert agg.max() == pytest.approx(0.5)
    assert agg[0] == pytest.approx(0.25)  # Change plateau clipped at 0.25
    assert agg[-1] == pytest.approx(0.5)


def test_centroid_zero_aggregate_falls_back_to_midpoint():
    assert centroid(np.zeros(1001)) == 0.5


def test_centroid_of_full_maintain_matches_exact_value():
    rb = default_rule_base()
    mu = rb.output.terms["Maintain"].curve(rb.grid)
    assert centroid(mu, rb.grid) == pytest.approx(float(MAINTAIN_CENTROID), abs=1e-3)


def test_centroid_of_symmetric_aggregate_sits_on_axis():
    rb = default_rule_base()
    agg = aggregate(rb, {"Maintain": 0.7, "Change": 0.7})
    assert centroid(agg, rb.grid) == pytest.approx(0.5, abs=1e-9)


def test_centroid_grid_refinement_is_stable():
    coarse = default_rule_base()
    fine = default_rule_base(samples=10001)
    mu_c = coarse.output.terms["Maintain"].curve(coarse.grid)
    mu_f = fine.output.terms["Maintain"].curve(fine.grid)
    assert abs(centroid(mu_c, coarse.grid) - centroid(mu_f, fine.grid)) < 1e-3


def test_infer_default_corners():
    rb = default_rule_base()
    maintain = float(MAINTAIN_CENTROID)
    good = infer(rb, {"quality": 1.0, "intensification": 0.5, "diversification": 0.5})
    assert good == pytest.approx(maintain, abs=1e-3)
    bad = infer(rb, {"quality": 0.0, "intensification": 0.0, "diversification": 0.0})
    assert bad == pytest.approx(1.0 - maintain, abs=1e-3)
    assert good >= 0.5 >= bad


@settings(max_examples=300, deadline=None)
@given(st.floats(0, 1), st.floats(0, 1), st.floats(0, 1))
def test_decision_side_matches_dominant_level(q, i, d):
    # output terms mirror each other around 0.5 with disjoint supports, so
    # the crisp value lands on the side of whichever level dominates
    rb = default_rule_base()
    inputs = {"quality": q, "intensification": i, "diversification": d}
    levels = consequent_levels(rb, rule_activations(rb, inputs))
    crisp = infer(rb, inputs)
    if levels["Maintain"] - levels["Change"] > 1e-9:
        assert crisp > 0.5
    elif levels["Change"] - levels["Maintain"] > 1e-9:
        assert crisp < 0.5
    else:
        assert crisp == pytest.approx(0.5, abs=1e-6)


def test_rule_base_from_json_matches_defaults():
    payload = {
        "variables": {
            "quality": {
                "Poor": [0, 0, 0.2, 0.4],
                "Average": [0.3, 0.45, 0.55, 0.7],
                "Excellent": [0.6, 0.8, 1, 1],
            },
            "push": {"Low": [0, 0, 0.5, 0.6], "High": [0.4, 0.6, 1, 1]},
        },
        "output": {
            "name": "decision",
            "terms": {"Change": [0, 0, 0.3, 0.5], "Maintain": [0.5, 0.7, 1, 1]},
        },
        "rules": [
            {"if": {"quality": "Excellent"}, "then": "Maintain"},
            {"if": {"quality": "Poor", "push": "High"}, "then": "Change"},
            {"if": {"quality": "Poor", "push": "Low"}, "then": "Maintain"},
            {"if": {"quality": "Average"}, "then": "Maintain"},
        ],
        "samples": 501,
    }
    rb = rule_base_from_json(json.dumps(payload))
    assert rb.samples == 501
    assert set(rb.inputs) == {"quality", "push"}
    out = infer(rb, {"quality": 0.1, "push": 1.0})
    assert out < 0.5


def test_rule_base_from_json_rejects_bad_breakpoints():
    payload = {
        "variables": {"q": {"Low": [0, 0, 1]}},
        "output": {"name": "o", "terms": {"X": [0, 0, 1, 1]}},
        "rules": [{"if": {"q": "Low"}, "then": "X"}],
    }
    with pytest.raises(ValueError, match="four breakpoints"):
        rule_base_from_json(json.dumps(payload))
