#!/usr/bin/env python
"""Probes whether Kii grows as a consistent triad is pushed away.

Starting from consistent triads (x, xz, z), this scales one of the three
entries by t for increasing t >= 1 and reports any step where Kii decreases.
This is exploratory; Kii is not required to behave this way.
"""

import argparse
import itertools
import logging

from pctriad import deviations, samplers
from pctriad.data import numbers


def _perturb(triad, position: int, t):
    return tuple(
        value * t if i == position else value for i, value in enumerate(triad)
    )


def main(args: argparse.Namespace) -> None:
    plan = samplers.SamplePlan(
        seed=args.seed, count=args.samples, mode="rational", probes=False
    )
    factors = [numbers.coerce(2**k, numbers.Mode.RATIONAL) for k in range(10)]
    checked = 0
    decreases = 0
    for x, z in samplers.stream(plan, 2):
        consistent = (x, x * z, z)
        for position in range(3):
            values = [
                deviations.kii(*_perturb(consistent, position, t))
                for t in factors
            ]
            for step, (before, after) in enumerate(
                itertools.pairwise(values), 1
            ):
                checked += 1
                if after < before:
                    decreases += 1
                    logging.warning(
                        "Kii decreases at (%s), entry %d, t = %s",
                        ", ".join(
                            numbers.format_value(value)
                            for value in consistent
                        ),
                        position,
                        numbers.format_value(factors[step]),
                    )
    logging.info("Steps checked:\t%d", checked)
    logging.info("Decreasing steps:\t%d", decreases)


if __name__ == "__main__":
    logging.basicConfig(format="%(levelname)s: %(message)s", level="INFO")
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=10_000)
    parser.add_argument("--seed", type=int, default=1995)
    main(parser.parse_args())
