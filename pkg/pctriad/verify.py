"""Randomized and structured falsification of metric and deviation axioms.

Each axiom is a checker taking a function, a sample, and the plan, and
returning None if the axiom holds on the sample or a violation otherwise.
Metric checkers consume triples (x, y, z); deviation checkers consume 5-tuples
(a, b, c, d, e), of which the triad conditions use (a, b, c).

Metric axioms:

* identity: d(x, x) = 0.
* separation: d(x, y) > 0 for x != y.
* symmetry: d(x, y) = d(y, x).
* triangle: d(x, z) <= d(x, y) + d(y, z).
* bound: d(x, y) < bound, or <= bound if the bound is attained.

Deviation conditions:

* nonnegative: td(a, b, c) >= 0.
* zero: td(a, ac, c) = 0, and td(a, b, c) > 0 whenever ac != b. In float
  mode the second half is only checked when |ac - b| >= 10^-6 * b.
* commutation: td(a, b, c) = td(b, ac, 1).
* symmetry: td(a, b, c) = td(c, b, a).
* generalized-triangle: td(a, de, c) <= td(a, b, c) + td(d, b, e).
* induced: td(a, b, c) = d(ac, b), for the metric d the deviation claims.
* bound: as for metrics.

In rational mode every comparison is exact. In float mode the violating side
gets slack of tolerance * max(1, |lhs|, |rhs|).
"""

from __future__ import annotations

import logging
import math
from typing import Callable, Dict, Iterable, Optional, Sequence, Tuple, Union

from . import defaults, deviations, metrics, reports, samplers
from .data import numbers

Violation = Tuple[
    Sequence[numbers.Value], numbers.Value, str, numbers.Value, str
]
Checker = Callable[..., Optional[Violation]]
Target = Union[metrics.MetricFn, deviations.TriadDeviationFn]


def _slack(lhs, rhs, plan: samplers.SamplePlan):
    if plan.mode is numbers.Mode.RATIONAL:
        return 0
    return plan.tolerance * max(1.0, abs(lhs), abs(rhs))


def _leq(lhs, rhs, plan: samplers.SamplePlan) -> bool:
    return lhs <= rhs + _slack(lhs, rhs, plan)


def _eq(lhs, rhs, plan: samplers.SamplePlan) -> bool:
    return abs(lhs - rhs) <= _slack(lhs, rhs, plan)


def _separated(ac, b, plan: samplers.SamplePlan) -> bool:
    if plan.mode is numbers.Mode.RATIONAL:
        return ac != b
    return abs(ac - b) >= defaults.SEPARATION * b


# Metric axioms.


def _identity(d: metrics.MetricFn, sample, plan) -> Optional[Violation]:
    x = sample[0]
    value = d.function(x, x)
    if not _eq(value, 0, plan):
        return (x, x), value, "=", 0, "d(x, x)"


def _separation(d: metrics.MetricFn, sample, plan) -> Optional[Violation]:
    x, y = sample[0], sample[1]
    if x == y:
        return
    value = d.function(x, y)
    if not value > 0:
        return (x, y), value, ">", 0, "d(x, y) for x != y"


def _metric_symmetry(
    d: metrics.MetricFn, sample, plan
) -> Optional[Violation]:
    x, y = sample[0], sample[1]
    lhs = d.function(x, y)
    rhs = d.function(y, x)
    if not _eq(lhs, rhs, plan):
        return (x, y), lhs, "=", rhs, "d(x, y) = d(y, x)"


def _triangle(d: metrics.MetricFn, sample, plan) -> Optional[Violation]:
    x, y, z = sample[0], sample[1], sample[2]
    lhs = d.function(x, z)
    rhs = d.function(x, y) + d.function(y, z)
    if not _leq(lhs, rhs, plan):
        return (x, y, z), lhs, "<=", rhs, "d(x, z) <= d(x, y) + d(y, z)"


def _bound_holds(value, bound, attained: bool, plan) -> bool:
    if attained:
        return _leq(value, bound, plan)
    return value < bound


def _metric_bound(d: metrics.MetricFn, sample, plan) -> Optional[Violation]:
    x, y = sample[0], sample[1]
    value = d.function(x, y)
    if not _bound_holds(value, d.declared_bound, d.bound_attained, plan):
        relation = "<=" if d.bound_attained else "<"
        return (x, y), value, relation, d.declared_bound, "d(x, y) bound"


def metric_checkers(d: metrics.MetricFn) -> Dict[str, Checker]:
    checkers = {
        "identity": _identity,
        "separation": _separation,
        "symmetry": _metric_symmetry,
        "triangle": _triangle,
    }
    if d.bounded:
        checkers["bound"] = _metric_bound
    return checkers


# Deviation conditions.


def _nonnegative(td, sample, plan) -> Optional[Violation]:
    a, b, c = sample[0], sample[1], sample[2]
    value = td.function(a, b, c)
    if not _leq(0, value, plan):
        return (a, b, c), value, ">=", 0, "td(a, b, c)"


def _zero(td, sample, plan) -> Optional[Violation]:
    a, b, c = sample[0], sample[1], sample[2]
    ac = a * c
    value = td.function(a, ac, c)
    if not _eq(value, 0, plan):
        return (a, ac, c), value, "=", 0, "td(a, ac, c)"
    if _separated(ac, b, plan):
        value = td.function(a, b, c)
        if not value > 0:
            return (a, b, c), value, ">", 0, "td(a, b, c) for ac != b"


def _commutation(td, sample, plan) -> Optional[Violation]:
    a, b, c = sample[0], sample[1], sample[2]
    lhs = td.function(a, b, c)
    rhs = td.function(b, a * c, numbers.one_like(a))
    if not _eq(lhs, rhs, plan):
        return (a, b, c), lhs, "=", rhs, "td(a, b, c) = td(b, ac, 1)"


def _deviation_symmetry(td, sample, plan) -> Optional[Violation]:
    a, b, c = sample[0], sample[1], sample[2]
    lhs = td.function(a, b, c)
    rhs = td.function(c, b, a)
    if not _eq(lhs, rhs, plan):
        return (a, b, c), lhs, "=", rhs, "td(a, b, c) = td(c, b, a)"


def _generalized_triangle(td, sample, plan) -> Optional[Violation]:
    a, b, c, d, e = sample
    lhs = td.function(a, d * e, c)
    rhs = td.function(a, b, c) + td.function(d, b, e)
    if not _leq(lhs, rhs, plan):
        return (
            sample,
            lhs,
            "<=",
            rhs,
            "td(a, de, c) <= td(a, b, c) + td(d, b, e)",
        )


def _induced(td, sample, plan) -> Optional[Violation]:
    a, b, c = sample[0], sample[1], sample[2]
    lhs = td.function(a, b, c)
    rhs = td.metric.function(a * c, b)
    if not _eq(lhs, rhs, plan):
        check = f"td(a, b, c) = {td.metric.name}(ac, b)"
        return (a, b, c), lhs, "=", rhs, check


def _deviation_bound(td, sample, plan) -> Optional[Violation]:
    a, b, c = sample[0], sample[1], sample[2]
    value = td.function(a, b, c)
    if not _bound_holds(value, td.declared_bound, td.bound_attained, plan):
        relation = "<=" if td.bound_attained else "<"
        return (a, b, c), value, relation, td.declared_bound, "td bound"


def deviation_checkers(td: deviations.TriadDeviationFn) -> Dict[str, Checker]:
    checkers = {
        "nonnegative": _nonnegative,
        "zero": _zero,
        "commutation": _commutation,
        "symmetry": _deviation_symmetry,
        "generalized-triangle": _generalized_triangle,
    }
    if td.metric is not None:
        checkers["induced"] = _induced
    if td.bounded:
        checkers["bound"] = _deviation_bound
    return checkers


# Running checks.


def _witness(index: int, violation: Violation) -> reports.Witness:
    inputs, lhs, relation, rhs, check = violation
    return reports.Witness(
        index,
        reports.tokens(inputs),
        numbers.format_value(lhs),
        relation,
        numbers.format_value(rhs),
        check,
    )


def _family(fn: Target) -> Tuple[Dict[str, Checker], int]:
    if isinstance(fn, metrics.MetricFn):
        return metric_checkers(fn), 3
    return deviation_checkers(fn), 5


def _run(
    fn: Target, checkers: Dict[str, Checker], plan: samplers.SamplePlan, arity
) -> reports.AxiomReport:
    logging.info(
        "Checking %s: %d samples (seed %d, %s, %s mode)",
        fn.name,
        plan.count,
        plan.seed,
        plan.sampling,
        plan.mode,
    )
    records = {name: reports.AxiomRecord(name) for name in checkers}
    for index, sample in enumerate(samplers.stream(plan, arity)):
        for name, checker in checkers.items():
            violation = checker(fn, sample, plan)
            records[name].add(
                None if violation is None else _witness(index, violation),
                plan.max_witnesses,
            )
    report = reports.AxiomReport(fn.name, plan, list(records.values()))
    logging.info("%s: %s", fn.name, report.verdict)
    return report


def check_metric_axioms(
    d: metrics.MetricFn, plan: samplers.SamplePlan
) -> reports.AxiomReport:
    """Checks the metric axioms of d on the plan's triples.

    Args:
        d: the candidate metric.
        plan: the sample plan.

    Returns:
        AxiomReport; failures are recorded, never raised.
    """
    return _run(d, metric_checkers(d), plan, 3)


def check_deviation_conditions(
    td: deviations.TriadDeviationFn, plan: samplers.SamplePlan
) -> reports.AxiomReport:
    """Checks the triad deviation conditions of td on the plan's 5-tuples.

    Args:
        td: the candidate deviation.
        plan: the sample plan.

    Returns:
        AxiomReport; failures are recorded, never raised.
    """
    return _run(td, deviation_checkers(td), plan, 5)


def check(fn: Target, plan: samplers.SamplePlan) -> reports.AxiomReport:
    """Dispatches to the metric or the deviation checks."""
    checkers, arity = _family(fn)
    return _run(fn, checkers, plan, arity)


def find_counterexample(
    fn: Target, condition: str, plan: samplers.SamplePlan
) -> Optional[reports.Witness]:
    """Finds the first sample in the stream violating a condition.

    Args:
        fn: the candidate deviation (or metric).
        condition: a checker name, e.g. "generalized-triangle".
        plan: the sample plan.

    Returns:
        The first witness, or None if the whole stream passes.

    Raises:
        KeyError: unknown condition for this kind of function.
    """
    checkers, arity = _family(fn)
    checker = checkers[condition]
    for index, sample in enumerate(samplers.stream(plan, arity)):
        violation = checker(fn, sample, plan)
        if violation is not None:
            return _witness(index, violation)
    return None


def recheck(
    fn: Target,
    condition: str,
    witness: reports.Witness,
    plan: samplers.SamplePlan,
) -> Optional[reports.Witness]:
    """Re-evaluates a witness from its tokens.

    Returns:
        The reproduced witness, or None if the violation does not reproduce.
    """
    checkers, arity = _family(fn)
    values = witness.values(plan.mode)
    # Some checks record only the leading coordinates; pads with ones.
    one = numbers.one_like(values[0])
    sample = values + (one,) * (arity - len(values))
    violation = checkers[condition](fn, sample, plan)
    if violation is None:
        return None
    return _witness(witness.index, violation)


def check_round_trip(
    d: metrics.MetricFn, plan: samplers.SamplePlan
) -> reports.AxiomReport:
    """Checks that the metric induced by the deviation induced by d is d."""
    induced = metrics.induce_metric_from_deviation(
        deviations.induce_deviation(d)
    )
    record = reports.AxiomRecord("round-trip")
    for index, (x, y) in enumerate(samplers.stream(plan, 2)):
        lhs = induced.function(x, y)
        rhs = d.function(x, y)
        if plan.mode is numbers.Mode.RATIONAL:
            holds = lhs == rhs
        else:
            holds = abs(lhs - rhs) <= defaults.ROUND_TRIP_TOLERANCE
        witness = None
        if not holds:
            violation = (x, y), lhs, "=", rhs, "d_td(x, y) = d(x, y)"
            witness = _witness(index, violation)
        record.add(witness, plan.max_witnesses)
    return reports.AxiomReport(f"round-trip({d.name})", plan, [record])


def growth_schedule(
    mode: numbers.Mode = numbers.Mode.FLOAT,
    exponents: Iterable[int] = defaults.GROWTH_EXPONENTS,
) -> Tuple[Tuple[numbers.Value, ...], ...]:
    """The triads (1, 10^k, 1)."""
    one = numbers.coerce(1, mode)
    return tuple((one, numbers.coerce(10**k, mode), one) for k in exponents)


def probe_bound(
    td: deviations.TriadDeviationFn,
    schedule: Optional[Sequence[Sequence[numbers.Value]]] = None,
    threshold: numbers.Value = defaults.UNBOUNDED_THRESHOLD,
) -> reports.BoundEvidence:
    """Evaluates td along a growth schedule.

    Overflow is recorded as evidence of unboundedness, not raised.

    Args:
        td: the function to probe.
        schedule: argument triples; defaults to (1, 10^k, 1), k = 0..12.
        threshold: value beyond which td is reported unbounded.

    Returns:
        BoundEvidence.
    """
    if schedule is None:
        schedule = growth_schedule()
    trace = []
    maximum = None
    overflow = False
    for arguments in schedule:
        try:
            value = td.function(*arguments)
        except (OverflowError, ZeroDivisionError):
            logging.warning("%s overflowed at %s", td.name, arguments)
            overflow = True
            trace.append((reports.tokens(arguments), "overflow"))
            continue
        if isinstance(value, float) and not math.isfinite(value):
            logging.warning("%s is not finite at %s", td.name, arguments)
            overflow = True
        elif maximum is None or value > maximum:
            maximum = value
        trace.append((reports.tokens(arguments), numbers.format_value(value)))
    if maximum is None:
        maximum = math.inf
    return reports.BoundEvidence(td.name, trace, maximum, overflow, threshold)


def max_form_discrepancy(
    plan: samplers.SamplePlan,
) -> Tuple[float, Optional[Tuple[str, ...]]]:
    """Largest pairwise disagreement among the three Kii forms.

    Returns:
        The maximum absolute discrepancy and the triad (as tokens) where it
        occurs, or None for the triad if all forms agree exactly.
    """
    worst = 0.0
    witness = None
    for a, b, c in samplers.stream(plan, 3):
        values = [
            deviations.kii(a, b, c, form) for form in deviations.KII_FORMS
        ]
        discrepancy = float(max(values) - min(values))
        if discrepancy > worst:
            worst = discrepancy
            witness = reports.tokens((a, b, c))
    return worst, witness
