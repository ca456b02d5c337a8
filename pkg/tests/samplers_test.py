"""Unit tests for sample plans and streams."""

import fractions
import itertools
import unittest

from parameterized import parameterized

from pctriad import samplers
from pctriad.data import numbers

F = fractions.Fraction


def _take(plan: samplers.SamplePlan, arity: int, count: int):
    return list(itertools.islice(samplers.stream(plan, arity), count))


class SamplePlanTest(unittest.TestCase):

    def test_defaults(self):
        plan = samplers.SamplePlan()
        self.assertEqual(plan.seed, 1995)
        self.assertEqual(plan.count, 100_000)
        self.assertIs(plan.sampling, samplers.Sampling.UNIFORM_LOG)
        self.assertIs(plan.mode, numbers.Mode.FLOAT)

    def test_strings(self):
        plan = samplers.SamplePlan(sampling="uniform-linear", mode="rational")
        self.assertIs(plan.sampling, samplers.Sampling.UNIFORM_LINEAR)
        self.assertIs(plan.mode, numbers.Mode.RATIONAL)

    @parameterized.expand(
        [
            ("lo", {"lo": 0}),
            ("hi", {"lo": 2.0, "hi": 1.0}),
            ("count", {"count": 0}),
            ("tolerance", {"tolerance": -1.0}),
            ("witnesses", {"max_witnesses": 0}),
        ]
    )
    def test_invalid(self, _, kwargs):
        with self.assertRaises(samplers.Error):
            samplers.SamplePlan(**kwargs)

    def test_bad_sampling(self):
        with self.assertRaises(ValueError):
            samplers.SamplePlan(sampling="gaussian")

    def test_as_dict(self):
        plan = samplers.SamplePlan(seed=7, count=10)
        self.assertEqual(
            plan.as_dict(),
            {
                "seed": 7,
                "count": 10,
                "domain": ["0.001", "1000.0"],
                "mode": "uniform-log",
                "numbers": "float",
                "tolerance": "1e-12",
                "probes": True,
            },
        )


class ProbeTest(unittest.TestCase):

    def test_pl_counterexample_first(self):
        self.assertEqual(
            samplers.probes(5)[0], (F(1), F(3), F(5), F(1), F(2))
        )
        self.assertEqual(len(samplers.probes(5)), 1 + 4**5)

    def test_pairs(self):
        self.assertEqual(len(samplers.probes(2)), len(samplers.LADDER) ** 2)

    def test_triples_include_orderings(self):
        triples = samplers.probes(3)
        self.assertIn((F(1), F(2), F(3)), triples)
        self.assertIn((F(1), F(3), F(2)), triples)
        self.assertIn((F(2), F(1), F(3)), triples)

    def test_bad_arity(self):
        with self.assertRaises(samplers.Error):
            samplers.probes(4)


class StreamTest(unittest.TestCase):

    def test_deterministic(self):
        plan = samplers.SamplePlan(seed=42, count=100, probes=False)
        self.assertEqual(_take(plan, 3, 100), _take(plan, 3, 100))

    def test_seed_matters(self):
        first = samplers.SamplePlan(seed=1, count=10, probes=False)
        second = samplers.SamplePlan(seed=2, count=10, probes=False)
        self.assertNotEqual(_take(first, 3, 10), _take(second, 3, 10))

    def test_prefix_stable(self):
        # A longer plan extends a shorter one with the same seed.
        short = samplers.SamplePlan(seed=5, count=10, probes=False)
        long = samplers.SamplePlan(seed=5, count=1000, probes=False)
        self.assertEqual(_take(short, 2, 10), _take(long, 2, 10))

    def test_probes_come_first(self):
        plan = samplers.SamplePlan(count=10, mode="rational")
        samples = _take(plan, 5, 1)
        self.assertEqual(samples[0], (F(1), F(3), F(5), F(1), F(2)))

    def test_length(self):
        plan = samplers.SamplePlan(count=25)
        self.assertEqual(
            len(list(samplers.stream(plan, 2))),
            len(samplers.probes(2)) + 25,
        )

    @parameterized.expand(
        [
            ("uniform-log", "float"),
            ("uniform-linear", "float"),
            ("uniform-log", "rational"),
            ("structured-grid", "float"),
            ("structured-grid", "rational"),
        ]
    )
    def test_domain(self, sampling: str, mode: str):
        plan = samplers.SamplePlan(
            count=200,
            lo=0.5,
            hi=4.0,
            sampling=sampling,
            mode=mode,
            probes=False,
        )
        samples = list(samplers.stream(plan, 3))
        self.assertEqual(len(samples), 200)
        expected = fractions.Fraction if mode == "rational" else float
        for sample in samples:
            self.assertEqual(len(sample), 3)
            for value in sample:
                self.assertIsInstance(value, expected)
                self.assertGreaterEqual(value, 0.5)
                self.assertLessEqual(value, 4.0)

    def test_grid_extremes(self):
        plan = samplers.SamplePlan(
            count=8,
            lo=1.0,
            hi=100.0,
            sampling="structured-grid",
            probes=False,
        )
        samples = list(samplers.stream(plan, 3))
        self.assertEqual(samples[0], (1.0, 1.0, 1.0))
        self.assertEqual(samples[-1], (100.0, 100.0, 100.0))


if __name__ == "__main__":
    unittest.main()
