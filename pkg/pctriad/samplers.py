"""Sample plans and deterministic sample streams.

A stream first yields the structured probes (if enabled), then `count` draws.
Draws come from a seeded torch generator in fixed-size chunks, so the stream
only depends on the plan: the same plan always gives the same samples in the
same order, and a sample's position in the stream identifies it.

Structured probes are:

* pairs and triples: a ladder of small integers, their reciprocals, and the
  extremes 1/1000 and 1000, with each sorted triple p <= q <= r arranged in
  the three orderings x <= y <= z, x <= z <= y, and y <= x <= z.
* 5-tuples (a, b, c, d, e): the counterexample (1, 3, 5, 1, 2) for PL,
  followed by every 5-tuple over {1, 2, 3, 5}.
"""

from __future__ import annotations

import dataclasses
import enum
import fractions
import itertools
import math
from typing import Dict, Iterator, List, Tuple

import torch

from . import defaults
from .data import numbers


class Error(Exception):

    pass


class Sampling(enum.Enum):
    """How draws are spread over the domain."""

    UNIFORM_LOG = "uniform-log"
    UNIFORM_LINEAR = "uniform-linear"
    STRUCTURED_GRID = "structured-grid"

    def __str__(self) -> str:
        return self.value


@dataclasses.dataclass(frozen=True)
class SamplePlan:
    """A reproducible sampling configuration.

    Args:
        seed: generator seed.
        count: number of draws (probes come on top of these).
        lo: lower end of the domain for each coordinate; must be > 0.
        hi: upper end of the domain; must be > lo.
        sampling: distribution of the draws.
        tolerance: slack for float-mode comparisons.
        mode: numeric mode of the samples.
        probes: whether the stream starts with the structured probes.
        max_witnesses: how many witnesses to keep per axiom.
    """

    seed: int = defaults.SEED
    count: int = defaults.SAMPLES
    lo: float = defaults.LO
    hi: float = defaults.HI
    sampling: Sampling = Sampling(defaults.SAMPLING)
    tolerance: float = defaults.TOLERANCE
    mode: numbers.Mode = numbers.Mode.FLOAT
    probes: bool = defaults.PROBES
    max_witnesses: int = defaults.MAX_WITNESSES

    def __post_init__(self):
        if not self.lo > 0:
            raise Error(f"Domain lower bound {self.lo} <= 0")
        if not (self.hi > self.lo and math.isfinite(self.hi)):
            raise Error(f"Domain upper bound {self.hi} <= {self.lo}")
        if self.count < 1:
            raise Error(f"Sample count {self.count} < 1")
        if self.tolerance < 0:
            raise Error(f"Tolerance {self.tolerance} < 0")
        if self.max_witnesses < 1:
            raise Error(f"Witness limit {self.max_witnesses} < 1")
        # Accepts strings for convenience.
        object.__setattr__(self, "sampling", Sampling(str(self.sampling)))
        object.__setattr__(self, "mode", numbers.Mode(str(self.mode)))

    def as_dict(self) -> Dict:
        return {
            "seed": self.seed,
            "count": self.count,
            "domain": [
                numbers.format_value(float(self.lo)),
                numbers.format_value(float(self.hi)),
            ],
            "mode": str(self.sampling),
            "numbers": str(self.mode),
            "tolerance": numbers.format_value(float(self.tolerance)),
            "probes": self.probes,
        }


Sample = Tuple[numbers.Value, ...]

_F = fractions.Fraction

LADDER = (
    _F(1),
    _F(2),
    _F(3),
    _F(5),
    _F(10),
    _F(1, 2),
    _F(1, 3),
    _F(1, 10),
    _F(1, 1000),
    _F(1000),
)

PL_COUNTEREXAMPLE = (_F(1), _F(3), _F(5), _F(1), _F(2))

SMALL_INTEGERS = (_F(1), _F(2), _F(3), _F(5))


def _ordering_triples() -> Iterator[Sample]:
    for p, q, r in (
        sorted(combo)
        for combo in itertools.combinations_with_replacement(LADDER, 3)
    ):
        yield p, q, r  # x <= y <= z.
        yield p, r, q  # x <= z <= y.
        yield q, p, r  # y <= x <= z.


def probes(arity: int) -> List[Sample]:
    """The structured probes of the given arity, as fractions."""
    if arity == 1:
        return [(value,) for value in LADDER]
    elif arity == 2:
        return list(itertools.product(LADDER, repeat=2))
    elif arity == 3:
        return list(_ordering_triples())
    elif arity == 5:
        return [PL_COUNTEREXAMPLE] + list(
            itertools.product(SMALL_INTEGERS, repeat=5)
        )
    else:
        raise Error(f"No structured probes of arity {arity}")


def _convert(value: float, mode: numbers.Mode) -> numbers.Value:
    if mode is numbers.Mode.FLOAT:
        return value
    snapped = fractions.Fraction(value).limit_denominator(defaults.DENOMINATOR)
    return snapped if snapped > 0 else fractions.Fraction(value)


def _draws(plan: SamplePlan, arity: int) -> Iterator[Sample]:
    generator = torch.Generator().manual_seed(plan.seed)
    log_lo = math.log(plan.lo)
    log_hi = math.log(plan.hi)
    remaining = plan.count
    while remaining > 0:
        size = min(defaults.CHUNK_SIZE, remaining)
        uniform = torch.rand(
            (size, arity), generator=generator, dtype=torch.float64
        )
        if plan.sampling is Sampling.UNIFORM_LOG:
            draws = torch.exp(log_lo + uniform * (log_hi - log_lo))
        else:
            draws = plan.lo + uniform * (plan.hi - plan.lo)
        draws = torch.clamp(draws, plan.lo, plan.hi)
        for row in draws.tolist():
            yield tuple(_convert(value, plan.mode) for value in row)
        remaining -= size


def _grid(plan: SamplePlan, arity: int) -> Iterator[Sample]:
    points = 2
    while points**arity < plan.count:
        points += 1
    ratio = plan.hi / plan.lo
    ladder = [
        _convert(plan.lo * ratio ** (i / (points - 1)), plan.mode)
        for i in range(points)
    ]
    yield from itertools.islice(
        itertools.product(ladder, repeat=arity), plan.count
    )


def stream(plan: SamplePlan, arity: int) -> Iterator[Sample]:
    """Yields the probes (if enabled) and then the draws of a plan.

    Args:
        plan: the sample plan.
        arity: number of coordinates per sample.

    Yields:
        Tuples of values in the plan's numeric mode.
    """
    if plan.probes:
        for sample in probes(arity):
            yield tuple(numbers.coerce(value, plan.mode) for value in sample)
    if plan.sampling is Sampling.STRUCTURED_GRID:
        yield from _grid(plan, arity)
    else:
        yield from _draws(plan, arity)
