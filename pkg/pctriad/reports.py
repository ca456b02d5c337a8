"""Verification reports.

Reports hold exact tokens rather than values so that a witness can be
re-evaluated and serialized without loss. Serialization is YAML with a fixed
field order, so identical runs give byte-identical documents.
"""

from __future__ import annotations

import dataclasses
from typing import Dict, List, Optional, Sequence, Tuple

import yaml

from . import defaults, samplers
from .data import numbers


@dataclasses.dataclass(frozen=True)
class Witness:
    """A concrete input violating an axiom.

    Args:
        index: position of the sample in the stream.
        inputs: the sample, as tokens.
        lhs: evaluated left-hand side, as a token.
        relation: the relation that should have held, e.g. "<=".
        rhs: evaluated right-hand side, as a token.
        check: a short statement of what was checked.
    """

    index: int
    inputs: Tuple[str, ...]
    lhs: str
    relation: str
    rhs: str
    check: str

    def values(self, mode: numbers.Mode) -> Tuple[numbers.Value, ...]:
        return tuple(numbers.parse_token(token, mode) for token in self.inputs)

    def as_dict(self) -> Dict:
        return {
            "index": self.index,
            "inputs": list(self.inputs),
            "check": self.check,
            "lhs": self.lhs,
            "relation": self.relation,
            "rhs": self.rhs,
        }

    def __str__(self) -> str:
        return (
            f"({', '.join(self.inputs)}): {self.check}: "
            f"{self.lhs} {self.relation} {self.rhs} fails"
        )


@dataclasses.dataclass
class AxiomRecord:
    """Outcome of one axiom over a stream."""

    name: str
    checked: int = 0
    violations: int = 0
    witnesses: List[Witness] = dataclasses.field(default_factory=list)

    def add(self, witness: Optional[Witness], limit: int) -> None:
        self.checked += 1
        if witness is None:
            return
        self.violations += 1
        if len(self.witnesses) < limit:
            self.witnesses.append(witness)

    @property
    def passed(self) -> bool:
        return self.violations == 0

    @property
    def first(self) -> Optional[Witness]:
        return self.witnesses[0] if self.witnesses else None

    def as_dict(self) -> Dict:
        return {
            "name": self.name,
            "checked": self.checked,
            "violations": self.violations,
            "witnesses": [witness.as_dict() for witness in self.witnesses],
        }


@dataclasses.dataclass
class AxiomReport:
    """Outcome of a property check.

    Args:
        target: name of the checked function.
        plan: the sample plan used.
        axioms: one record per axiom, in check order.
    """

    target: str
    plan: samplers.SamplePlan
    axioms: List[AxiomRecord]

    @property
    def verdict(self) -> str:
        return "pass" if all(axiom.passed for axiom in self.axioms) else "fail"

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def axiom(self, name: str) -> AxiomRecord:
        for axiom in self.axioms:
            if axiom.name == name:
                return axiom
        raise KeyError(name)

    @property
    def witnesses(self) -> List[Witness]:
        return [
            witness for axiom in self.axioms for witness in axiom.witnesses
        ]

    def as_dict(self) -> Dict:
        return {
            "target": self.target,
            "plan": self.plan.as_dict(),
            "axioms": [axiom.as_dict() for axiom in self.axioms],
            "verdict": self.verdict,
        }

    def to_yaml(self) -> str:
        return dump(self.as_dict())

    def to_text(self) -> str:
        plan = self.plan
        lines = [
            f"target: {self.target}",
            f"plan: seed={plan.seed} count={plan.count} "
            f"domain=[{plan.lo}, {plan.hi}] mode={plan.sampling} "
            f"numbers={plan.mode} tolerance={plan.tolerance}",
        ]
        width = max(len(axiom.name) for axiom in self.axioms)
        for axiom in self.axioms:
            status = "ok" if axiom.passed else "FAILED"
            lines.append(
                f"  {axiom.name.ljust(width)}  {status:6}  "
                f"{axiom.violations}/{axiom.checked} violations"
            )
            if axiom.first:
                lines.append(f"  {' ' * width}  first witness: {axiom.first}")
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines) + "\n"


@dataclasses.dataclass
class BoundEvidence:
    """Values of a function along a growth schedule.

    This is evidence only: a schedule can suggest unboundedness but never
    prove boundedness.

    Args:
        target: name of the probed function.
        trace: (arguments, value) pairs, as tokens.
        max_value: largest finite value seen.
        overflow: whether evaluation overflowed or gave a non-finite value.
        threshold: value beyond which the function is reported unbounded.
    """

    target: str
    trace: List[Tuple[Tuple[str, ...], str]]
    max_value: numbers.Value
    overflow: bool = False
    threshold: numbers.Value = defaults.UNBOUNDED_THRESHOLD

    @property
    def exceeds_one(self) -> bool:
        return self.overflow or self.max_value > 1

    @property
    def exceeds_threshold(self) -> bool:
        return self.overflow or self.max_value > self.threshold

    @property
    def verdict(self) -> str:
        if self.exceeds_threshold:
            return "unbounded (evidence)"
        return "bounded (evidence)"

    def as_dict(self) -> Dict:
        return {
            "target": self.target,
            "trace": [
                {"inputs": list(inputs), "value": value}
                for inputs, value in self.trace
            ],
            "max": numbers.format_value(self.max_value),
            "overflow": self.overflow,
            "exceeds_one": self.exceeds_one,
            "exceeds_threshold": self.exceeds_threshold,
            "threshold": numbers.format_value(self.threshold),
            "verdict": self.verdict,
        }


def tokens(values: Sequence[numbers.Value]) -> Tuple[str, ...]:
    return tuple(numbers.format_value(value) for value in values)


def dump(document: Dict) -> str:
    """Serializes a report document as YAML."""
    return yaml.safe_dump(
        document, sort_keys=False, default_flow_style=False, width=1000
    )
