"""Triad deviations and inconsistency indicators.

A triad deviation is a map td(a, b, c) = d(ac, b) for some metric d on the
positive reals; it is zero exactly on consistent triads (ac = b). A bounded
deviation with values never above 1 is a triad inconsistency indicator.

The cataloged indicators are:

* DI: induced by the discrete metric; values in {0, 1}.
* EI: induced by the Euclidean metric, |ac - b|; unbounded.
* I1: induced by d1, |ac - b| / (1 + |ac - b|); values in [0, 1).
* Kii: the distance-based indicator 1 - min(b / ac, ac / b), induced by the
  bounded ratio metric; values in [0, 1).
* PL: b / ac + ac / b - 2. Unbounded, and it violates the generalized
  triangle inequality, so it is not a triad deviation at all. It is cataloged
  so it can be evaluated and checked, not because it qualifies.

Matrix-level scores take the maximum of a per-triad indicator over all
triads of the matrix.
"""

from __future__ import annotations

import dataclasses
import logging
import math
from typing import Callable, Dict, Optional, Sequence, Tuple, Union

from . import defaults, metrics
from .data import matrices, numbers


class Error(Exception):

    pass


EXPLICIT_FORMULA = "explicit-formula"


@dataclasses.dataclass(frozen=True)
class TriadDeviationFn:
    """A named ternary map on the positive reals.

    Args:
        name: identifier.
        function: the map (a, b, c) -> td(a, b, c).
        origin: "induced-from-metric(<metric name>)" or "explicit-formula".
        declared_bound: upper bound on the values, if any.
        bound_attained: whether the bound is a possible value.
        metric: the metric d with td(a, b, c) = d(ac, b), if one is claimed.
    """

    name: str
    function: Callable[
        [numbers.Value, numbers.Value, numbers.Value], numbers.Value
    ]
    origin: str = EXPLICIT_FORMULA
    declared_bound: Optional[numbers.Value] = None
    bound_attained: bool = False
    metric: Optional[metrics.MetricFn] = None

    def __call__(
        self, a: numbers.Value, b: numbers.Value, c: numbers.Value
    ) -> numbers.Value:
        return self.function(a, b, c)

    @property
    def bounded(self) -> bool:
        return self.declared_bound is not None


def induce_deviation(
    d: metrics.MetricFn, name: Optional[str] = None
) -> TriadDeviationFn:
    """Builds the deviation td(a, b, c) = d(ac, b).

    Args:
        d: the metric.
        name: name for the deviation; defaults to "induced(<metric name>)".

    Returns:
        TriadDeviationFn inheriting the metric's bound.
    """
    function = d.function

    def induced(
        a: numbers.Value, b: numbers.Value, c: numbers.Value
    ) -> numbers.Value:
        a, b, c = _check(a, b, c)
        return function(a * c, b)

    return TriadDeviationFn(
        name or f"induced({d.name})",
        induced,
        f"induced-from-metric({d.name})",
        d.declared_bound,
        d.bound_attained,
        d,
    )


def _check(a, b, c):
    if not all(numbers.is_positive(value) for value in (a, b, c)):
        raise Error(
            f"Triad values must be finite and positive: ({a}, {b}, {c})"
        )
    return numbers.exact(a), numbers.exact(b), numbers.exact(c)


KII_FORMS = ("min-abs", "one-minus-min", "exponential")


def kii(
    a: numbers.Value,
    b: numbers.Value,
    c: numbers.Value,
    form: str = defaults.KII_FORM,
) -> numbers.Value:
    """Computes the distance-based indicator Kii.

    The three forms agree mathematically:

    * min-abs: min(|1 - b / ac|, |1 - ac / b|).
    * one-minus-min: 1 - min(b / ac, ac / b).
    * exponential: 1 - exp(-|ln(b / ac)|); always a float.

    Args:
        a, b, c: the triad.
        form: one of KII_FORMS.

    Returns:
        Value in [0, 1).
    """
    a, b, c = _check(a, b, c)
    ac = a * c
    if form == "one-minus-min":
        return 1 - min(b / ac, ac / b)
    elif form == "min-abs":
        return min(abs(1 - b / ac), abs(1 - ac / b))
    elif form == "exponential":
        return 1 - math.exp(-abs(math.log(b / ac)))
    else:
        raise Error(f"Unknown Kii form {form!r}")


def pl(a: numbers.Value, b: numbers.Value, c: numbers.Value) -> numbers.Value:
    """Computes b / ac + ac / b - 2.

    This is exact for rational inputs.
    """
    a, b, c = _check(a, b, c)
    ac = a * c
    return b / ac + ac / b - 2


INDICATORS: Dict[str, TriadDeviationFn] = {
    "DI": induce_deviation(metrics.METRICS["discrete"], "DI"),
    "EI": induce_deviation(metrics.METRICS["euclidean"], "EI"),
    "I1": induce_deviation(metrics.METRICS["d1"], "I1"),
    "Kii": TriadDeviationFn(
        "Kii", kii, EXPLICIT_FORMULA, 1, False, metrics.METRICS["ratio"]
    ),
    "PL": TriadDeviationFn("PL", pl),
}


def get(name: str) -> TriadDeviationFn:
    """Looks up a cataloged indicator by name."""
    try:
        return INDICATORS[name]
    except KeyError:
        raise Error(
            f"Unknown indicator {name!r}; expected one of "
            f"{', '.join(INDICATORS)}"
        )


def evaluate_named(
    name: str,
    triad: Union[matrices.Triad, Sequence[numbers.Value]],
) -> numbers.Value:
    """Evaluates a cataloged indicator on a triad.

    Args:
        name: one of DI, EI, I1, Kii, PL.
        triad: a Triad or a value triple (a, b, c).

    Returns:
        The indicator value.
    """
    values = triad.values if isinstance(triad, matrices.Triad) else triad
    return get(name)(*values)


@dataclasses.dataclass
class Inconsistency:
    """Matrix-level result of an indicator.

    Args:
        indicator: name of the indicator.
        score: maximum indicator value over all triads (0 if none).
        worst: the lexicographically first triad attaining the score.
        per_triad: value of the indicator on each triad by index triple.
        triads: the triads by index triple.
    """

    indicator: str
    score: numbers.Value
    worst: Optional[matrices.Triad]
    per_triad: Dict[Tuple[int, int, int], numbers.Value]
    triads: Dict[Tuple[int, int, int], matrices.Triad]

    @property
    def has_triads(self) -> bool:
        return bool(self.per_triad)


def matrix_inconsistency(
    matrix: matrices.PCMatrix, name: str = defaults.INDICATOR
) -> Inconsistency:
    """Scores a matrix by the maximum indicator value over its triads.

    Triads are visited in lexicographic order and the worst triad is only
    replaced on a strictly larger value, so ties go to the first one.

    Args:
        matrix: the PC matrix.
        name: indicator name.

    Returns:
        Inconsistency.
    """
    td = get(name)
    score = numbers.zero_like(matrix[0, 0])
    worst = None
    per_triad = {}
    triads = {}
    for triad in matrices.enumerate_triads(matrix):
        value = td(*triad.values)
        per_triad[triad.indices] = value
        triads[triad.indices] = triad
        if worst is None or value > score:
            score = value
            worst = triad
    if worst is None:
        logging.warning("Matrix has no triads (n = %d); score is 0", matrix.n)
    return Inconsistency(name, score, worst, per_triad, triads)
