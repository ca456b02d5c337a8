"""Classifies candidate functions as deviations, bounded, or indicators.

A function is a triad deviation if the deviation conditions survive
falsification, bounded if probing along the growth schedule stays under the
unboundedness threshold, and a triad inconsistency indicator if it is a
bounded deviation whose observed values never exceed 1. All three verdicts
are evidence from samples, not proofs.
"""

import dataclasses
from typing import Dict, List, Optional, Sequence, Union

from . import defaults, deviations, reports, samplers, verify
from .data import numbers


@dataclasses.dataclass
class Classification:
    """Verdicts with the evidence behind them.

    Args:
        target: name of the classified function.
        is_deviation: the deviation conditions were not falsified.
        is_bounded: the growth schedule stayed under the threshold.
        is_indicator: a bounded deviation with no observed value above 1.
        conditions: the deviation-condition report.
        bound: the growth-schedule evidence.
        sampled_max: the largest value over the plan's triads.
    """

    target: str
    is_deviation: bool
    is_bounded: bool
    is_indicator: bool
    conditions: reports.AxiomReport
    bound: reports.BoundEvidence
    sampled_max: numbers.Value

    @property
    def witnesses(self) -> List[reports.Witness]:
        return self.conditions.witnesses

    def as_dict(self) -> Dict:
        return {
            "target": self.target,
            "is_deviation": self.is_deviation,
            "is_bounded": self.is_bounded,
            "is_indicator": self.is_indicator,
            "sampled_max": numbers.format_value(self.sampled_max),
            "bound": self.bound.as_dict(),
            "conditions": self.conditions.as_dict(),
        }

    def to_text(self) -> str:
        def yes(flag: bool) -> str:
            return "yes" if flag else "no"

        lines = [
            f"target: {self.target}",
            f"deviation: {yes(self.is_deviation)}",
            f"bounded: {yes(self.is_bounded)} ({self.bound.verdict}, max "
            f"{numbers.format_value(self.bound.max_value)} on the growth "
            "schedule)",
            f"indicator: {yes(self.is_indicator)} (sampled max "
            f"{numbers.format_value(self.sampled_max)})",
        ]
        for witness in self.witnesses:
            lines.append(f"witness: {witness}")
        return "\n".join(lines) + "\n"


def classify(
    td: Union[deviations.TriadDeviationFn, str],
    plan: Optional[samplers.SamplePlan] = None,
    schedule: Optional[Sequence[Sequence[numbers.Value]]] = None,
) -> Classification:
    """Classifies a candidate triad deviation.

    Args:
        td: a TriadDeviationFn or the name of a cataloged indicator.
        plan: sample plan for the condition checks; defaults to
            `samplers.SamplePlan()`.
        schedule: growth schedule for bound probing; defaults to
            (1, 10^k, 1) for k = 0..12 in the plan's mode.

    Returns:
        Classification.
    """
    if isinstance(td, str):
        td = deviations.get(td)
    if plan is None:
        plan = samplers.SamplePlan()
    if schedule is None:
        schedule = verify.growth_schedule(plan.mode)
    conditions = verify.check_deviation_conditions(td, plan)
    bound = verify.probe_bound(td, schedule, defaults.UNBOUNDED_THRESHOLD)
    sampled_max = max(
        td.function(*sample[:3]) for sample in samplers.stream(plan, 3)
    )
    is_deviation = conditions.passed
    is_bounded = not bound.exceeds_threshold
    is_indicator = (
        is_deviation
        and is_bounded
        and not bound.exceeds_one
        and sampled_max <= 1
    )
    return Classification(
        td.name,
        is_deviation,
        is_bounded,
        is_indicator,
        conditions,
        bound,
        sampled_max,
    )
