"""Metrics on the positive reals.

These metrics induce triad deviations through td(a, b, c) = d(ac, b); see
`deviations`. All of them reject non-positive arguments rather than clamping
them. None of the metric properties is assumed here: `verify` checks them on
samples.
"""

from __future__ import annotations

import dataclasses
from typing import TYPE_CHECKING, Callable, Dict, Optional

from .data import numbers

if TYPE_CHECKING:
    from . import deviations


class Error(Exception):

    pass


@dataclasses.dataclass(frozen=True)
class MetricFn:
    """A named binary distance on the positive reals.

    Args:
        name: identifier.
        function: the map (x, y) -> d(x, y).
        declared_bound: upper bound on the values, if any.
        bound_attained: whether the bound is a possible value (as for the
            discrete metric) or only a supremum (as for d1).
    """

    name: str
    function: Callable[[numbers.Value, numbers.Value], numbers.Value]
    declared_bound: Optional[numbers.Value] = None
    bound_attained: bool = False

    def __call__(self, x: numbers.Value, y: numbers.Value) -> numbers.Value:
        return self.function(x, y)

    @property
    def bounded(self) -> bool:
        return self.declared_bound is not None


def _check(x, y):
    if not (numbers.is_positive(x) and numbers.is_positive(y)):
        raise Error(
            f"Metric arguments must be finite and positive: ({x}, {y})"
        )
    return numbers.exact(x), numbers.exact(y)


def discrete_metric(x: numbers.Value, y: numbers.Value) -> numbers.Value:
    """0 if x = y, else 1.

    Equality is exact comparison, even for floats.
    """
    x, y = _check(x, y)
    zero = numbers.zero_like(x)
    return zero if x == y else zero + 1


def euclidean_metric(x: numbers.Value, y: numbers.Value) -> numbers.Value:
    """|x - y|."""
    x, y = _check(x, y)
    return abs(x - y)


def d1_metric(x: numbers.Value, y: numbers.Value) -> numbers.Value:
    """|x - y| / (1 + |x - y|), with values in [0, 1)."""
    x, y = _check(x, y)
    difference = abs(x - y)
    return difference / (1 + difference)


def bounded_ratio_metric(x: numbers.Value, y: numbers.Value) -> numbers.Value:
    """1 - min(x / y, y / x), with values in [0, 1)."""
    x, y = _check(x, y)
    return 1 - min(x / y, y / x)


def squared_difference(x: numbers.Value, y: numbers.Value) -> numbers.Value:
    """(x - y)^2.

    Not a metric: it fails the triangle inequality, e.g., at (1, 2, 3). It is
    kept as a negative control for the axiom checks.
    """
    x, y = _check(x, y)
    return (x - y) ** 2


METRICS: Dict[str, MetricFn] = {
    "discrete": MetricFn("discrete", discrete_metric, 1, True),
    "euclidean": MetricFn("euclidean", euclidean_metric),
    "d1": MetricFn("d1", d1_metric, 1, False),
    "ratio": MetricFn("ratio", bounded_ratio_metric, 1, False),
}

NEGATIVE_CONTROLS: Dict[str, MetricFn] = {
    "squared": MetricFn("squared", squared_difference),
}


def get(name: str) -> MetricFn:
    """Looks up a cataloged metric or negative control by name."""
    try:
        return METRICS.get(name) or NEGATIVE_CONTROLS[name]
    except KeyError:
        raise Error(f"Unknown metric {name!r}")


def induce_metric_from_deviation(
    td: deviations.TriadDeviationFn,
) -> MetricFn:
    """Builds the metric d_td(x, y) = td(x, y, 1).

    If td satisfies the deviation conditions, d_td is a metric and td is
    induced by it; otherwise the failure shows up when the result is checked.
    """
    function = td.function

    def induced(x: numbers.Value, y: numbers.Value) -> numbers.Value:
        return function(x, y, numbers.one_like(x))

    return MetricFn(
        f"induced({td.name})",
        induced,
        td.declared_bound,
        td.bound_attained,
    )
