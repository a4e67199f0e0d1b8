"""Minimal Mamdani inference over trapezoidal terms on the unit interval.

Rules AND their antecedent clauses with min, clip their consequent term at
the activation level, and the per-rule curves are merged with max.  The
crisp output is the centroid of the aggregate, estimated on a uniform
sampling grid; an aggregate that is zero everywhere defuzzifies to the
midpoint 0.5.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Sequence

import numpy as np


class FuzzyDomainError(ValueError):
    """Input value outside the [0, 1] universe."""


class MissingInputError(LookupError):
    def __init__(self, variable: str):
        self.variable = variable
        super().__init__(f"no value supplied for input variable {variable!r}")


@dataclass(frozen=True)
class Trapezoid:
    """Membership breakpoints a <= b <= c <= d within [0, 1].

    a == b or c == d gives a vertical edge; the breakpoint itself then has
    degree 1, so degenerate terms behave like crisp intervals.
    """

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        if not 0.0 <= self.a <= self.b <= self.c <= self.d <= 1.0:
            raise ValueError(f"breakpoints must satisfy 0 <= a <= b <= c <= d <= 1: {self}")

    def membership(self, x: float) -> float:
        if not 0.0 <= x <= 1.0:
            raise FuzzyDomainError(f"value {x} outside [0, 1]")
        if x < self.a or x > self.d:
            return 0.0
        if self.b <= x <= self.c:
            return 1.0
        if x < self.b:
            return (x - self.a) / (self.b - self.a)
        return (self.d - x) / (self.d - self.c)

    def curve(self, xs: np.ndarray) -> np.ndarray:
        """Vectorized membership over grid points already inside [0, 1]."""
        mu = np.zeros_like(xs)
        mu[(xs >= self.b) & (xs <= self.c)] = 1.0
        if self.b > self.a:
            rise = (xs >= self.a) & (xs < self.b)
            mu[rise] = (xs[rise] - self.a) / (self.b - self.a)
        if self.d > self.c:
            fall = (xs > self.c) & (xs <= self.d)
            mu[fall] = (self.d - xs[fall]) / (self.d - self.c)
        return mu


@dataclass(frozen=True)
class LinguisticVariable:
    """A named variable with trapezoidal terms whose supports cover [0, 1]."""

    name: str
    terms: dict[str, Trapezoid]

    def __post_init__(self):
        if not self.terms:
            raise ValueError(f"variable {self.name!r} has no terms")
        reach = 0.0
        for trap in sorted(self.terms.values(), key=lambda t: t.a):
            if trap.a > reach:
                raise ValueError(
                    f"terms of {self.name!r} leave ({reach}, {trap.a}) uncovered"
                )
            reach = max(reach, trap.d)
        if reach < 1.0:
            raise ValueError(f"terms of {self.name!r} leave ({reach}, 1] uncovered")


@dataclass(frozen=True)
class Rule:
    """AND-combined (variable, term) clauses implying one output term."""

    antecedent: tuple[tuple[str, str], ...]
    consequent: str

    @classmethod
    def of(cls, antecedent: Mapping[str, str], consequent: str) -> "Rule":
        return cls(tuple(sorted(antecedent.items())), consequent)


@dataclass(frozen=True)
class RuleBase:
    inputs: dict[str, LinguisticVariable]
    output: LinguisticVariable
    rules: tuple[Rule, ...]
    samples: int = 1001

    def __post_init__(self):
        if self.samples < 2:
            raise ValueError("need at least two grid samples")
        if not self.rules:
            raise ValueError("rule base has no rules")
        referenced: set[str] = set()
        for rule in self.rules:
            if not rule.antecedent:
                raise ValueError("rule with empty antecedent")
            for var, term in rule.antecedent:
                if var not in self.inputs:
                    raise ValueError(f"rule references unknown variable {var!r}")
                if term not in self.inputs[var].terms:
                    raise ValueError(f"variable {var!r} has no term {term!r}")
                referenced.add(var)
            if rule.consequent not in self.output.terms:
                raise ValueError(f"output has no term {rule.consequent!r}")
        unused = set(self.inputs) - referenced
        if unused:
            raise ValueError(f"input variables never referenced by a rule: {sorted(unused)}")

    @cached_property
    def grid(self) -> np.ndarray:
        return np.linspace(0.0, 1.0, self.samples)

    @cached_property
    def _output_curves(self) -> dict[str, np.ndarray]:
        return {name: trap.curve(self.grid) for name, trap in self.output.terms.items()}


def rule_activations(rb: RuleBase, inputs: Mapping[str, float]) -> tuple[float, ...]:
    """Activation of each rule: min over its antecedent memberships."""
    for var in rb.inputs:
        if var not in inputs:
            raise MissingInputError(var)
    return tuple(
        min(rb.inputs[var].terms[term].membership(inputs[var]) for var, term in rule.antecedent)
        for rule in rb.rules
    )


def consequent_levels(rb: RuleBase, activations: Sequence[float]) -> dict[str, float]:
    """Max activation per output term over all rules concluding in it."""
    levels = {name: 0.0 for name in rb.output.terms}
    for rule, act in zip(rb.rules, activations):
        if act > levels[rule.consequent]:
            levels[rule.consequent] = act
    return levels


def aggregate(rb: RuleBase, levels: Mapping[str, float]) -> np.ndarray:
    """Pointwise max of the clipped consequent terms on the sampling grid."""
    curve = np.zeros(rb.samples)
    for name, level in levels.items():
        if level > 0.0:
            np.maximum(curve, np.minimum(level, rb._output_curves[name]), out=curve)
    return curve


def centroid(mu: np.ndarray, grid: np.ndarray | None = None) -> float:
    """Centroid of a membership curve sampled uniformly over [0, 1].

    Returns 0.5 when the curve is identically zero (no rule fired).
    """
    if grid is None:
        grid = np.linspace(0.0, 1.0, len(mu))
    total = float(mu.sum())
    if total == 0.0:
        return 0.5
    return float((grid * mu).sum() / total)


def infer(rb: RuleBase, inputs: Mapping[str, float]) -> float:
    """Crisp output in [0, 1] for the given input assignment."""
    levels = consequent_levels(rb, rule_activations(rb, inputs))
    return centroid(aggregate(rb, levels), rb.grid)


# Default terms: one three-level partition reused by every input variable.
_LOW = Trapezoid(0.0, 0.0, 0.2, 0.4)
_MEDIUM = Trapezoid(0.3, 0.45, 0.55, 0.7)
_HIGH = Trapezoid(0.6, 0.8, 1.0, 1.0)

_DEFAULT_RULES = (
    Rule.of({"quality": "Excellent"}, "Maintain"),
    Rule.of({"quality": "Average", "diversification": "High"}, "Maintain"),
    Rule.of({"quality": "Average", "diversification": "Medium"}, "Maintain"),
    Rule.of(
        {"quality": "Average", "diversification": "Low", "intensification": "High"},
        "Change",
    ),
    Rule.of(
        {"quality": "Average", "diversification": "Low", "intensification": "Medium"},
        "Maintain",
    ),
    Rule.of({"quality": "Poor", "diversification": "High"}, "Maintain"),
    Rule.of(
        {"quality": "Poor", "diversification": "Medium", "intensification": "Low"},
        "Maintain",
    ),
    Rule.of({"quality": "Poor", "intensification": "High"}, "Change"),
    Rule.of({"quality": "Poor", "diversification": "Low"}, "Change"),
)


def default_rule_base(samples: int = 1001) -> RuleBase:
    """The built-in operator-selection rules over quality, intensification
    and diversification.  High quality or high diversity argues for keeping
    the current operator; poor quality with little diversity argues for a
    change."""
    return RuleBase(
        inputs={
            "quality": LinguisticVariable(
                "quality", {"Poor": _LOW, "Average": _MEDIUM, "Excellent": _HIGH}
            ),
            "intensification": LinguisticVariable(
                "intensification", {"Low": _LOW, "Medium": _MEDIUM, "High": _HIGH}
            ),
            "diversification": LinguisticVariable(
                "diversification", {"Low": _LOW, "Medium": _MEDIUM, "High": _HIGH}
            ),
        },
        output=LinguisticVariable(
            "operator-selection",
            {"Change": Trapezoid(0.0, 0.0, 0.3, 0.5), "Maintain": Trapezoid(0.5, 0.7, 1.0, 1.0)},
        ),
        rules=_DEFAULT_RULES,
        samples=samples,
    )


def _trapezoid_from(raw, where: str) -> Trapezoid:
    if not isinstance(raw, (list, tuple)) or len(raw) != 4:
        raise ValueError(f"{where}: expected four breakpoints")
    return Trapezoid(*(float(v) for v in raw))


def rule_base_from_json(text: str, samples: int | None = None) -> RuleBase:
    """Build a rule base from its JSON description.

    Schema: {"variables": {name: {term: [a, b, c, d]}},
             "output": {"name": ..., "terms": {term: [a, b, c, d]}},
             "rules": [{"if": {variable: term}, "then": term}],
             "samples": 1001}
    """
    raw = json.loads(text)
    inputs = {
        var: LinguisticVariable(
            var,
            {term: _trapezoid_from(bp, f"{var}.{term}") for term, bp in terms.items()},
        )
        for var, terms in raw["variables"].items()
    }
    out = raw["output"]
    output = LinguisticVariable(
        out["name"],
        {term: _trapezoid_from(bp, f"output.{term}") for term, bp in out["terms"].items()},
    )
    rules = tuple(Rule.of(entry["if"], entry["then"]) for entry in raw["rules"])
    return RuleBase(
        inputs=inputs,
        output=output,
        rules=rules,
        samples=samples or int(raw.get("samples", 1001)),
    )


def load_rule_base(path: str, samples: int | None = None) -> RuleBase:
    with open(path, encoding="utf-8") as fh:
        return rule_base_from_json(fh.read(), samples=samples)
