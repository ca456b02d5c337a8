#!/usr/bin/env python
"""Checks that the three forms of Kii agree on a large seeded sample."""

import argparse
import logging
import sys

from pctriad import defaults, samplers, verify


def main(args: argparse.Namespace) -> None:
    plan = samplers.SamplePlan(
        seed=args.seed,
        count=args.samples,
        lo=args.lo,
        hi=args.hi,
        probes=False,
    )
    discrepancy, witness = verify.max_form_discrepancy(plan)
    if witness is None:
        logging.info("All forms agree exactly on %d triads", plan.count)
    else:
        logging.info(
            "Maximum discrepancy:\t%.3e at (%s)",
            discrepancy,
            ", ".join(witness),
        )
    if discrepancy > args.tolerance:
        logging.error("Discrepancy exceeds %.1e", args.tolerance)
        sys.exit(1)


if __name__ == "__main__":
    logging.basicConfig(format="%(levelname)s: %(message)s", level="INFO")
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--samples", type=int, default=1_000_000, help="number of triads"
    )
    parser.add_argument("--seed", type=int, default=defaults.SEED)
    parser.add_argument("--lo", type=float, default=defaults.LO)
    parser.add_argument("--hi", type=float, default=defaults.HI)
    parser.add_argument("--tolerance", type=float, default=1e-12)
    main(parser.parse_args())
