"""Unit tests for metrics on the positive reals."""

import fractions
import unittest

from parameterized import parameterized

from pctriad import deviations, metrics

F = fractions.Fraction


class MetricTest(unittest.TestCase):

    @parameterized.expand(
        [
            ("discrete", F(2), F(2), F(0)),
            ("discrete", F(2), F(3), F(1)),
            ("euclidean", F(2), F(7, 2), F(3, 2)),
            ("d1", F(1), F(3), F(2, 3)),
            ("ratio", F(2), F(8), F(3, 4)),
            ("ratio", F(8), F(2), F(3, 4)),
            ("squared", F(1), F(3), F(4)),
        ]
    )
    def test_value(self, name: str, x, y, expected):
        self.assertEqual(metrics.get(name)(x, y), expected)

    @parameterized.expand(["discrete", "euclidean", "d1", "ratio"])
    def test_exact(self, name: str):
        value = metrics.get(name)(2, 5)
        self.assertIsInstance(value, fractions.Fraction)

    @parameterized.expand(["discrete", "euclidean", "d1", "ratio"])
    def test_float(self, name: str):
        value = metrics.get(name)(2.0, 5.0)
        self.assertIsInstance(value, float)

    @parameterized.expand(
        [
            ("zero", F(0), F(1)),
            ("negative", F(1), F(-1)),
            ("nan", float("nan"), 1.0),
            ("infinite", 1.0, float("inf")),
        ]
    )
    def test_non_positive(self, _, x, y):
        with self.assertRaises(metrics.Error):
            metrics.get("euclidean")(x, y)

    def test_bounds(self):
        self.assertTrue(metrics.get("discrete").bounded)
        self.assertTrue(metrics.get("discrete").bound_attained)
        self.assertTrue(metrics.get("d1").bounded)
        self.assertFalse(metrics.get("d1").bound_attained)
        self.assertFalse(metrics.get("euclidean").bounded)

    def test_unknown(self):
        with self.assertRaises(metrics.Error):
            metrics.get("manhattan")


class InducedMetricTest(unittest.TestCase):

    @parameterized.expand(
        [
            ("DI", "discrete"),
            ("EI", "euclidean"),
            ("I1", "d1"),
            ("Kii", "ratio"),
        ]
    )
    def test_round_trip(self, indicator: str, metric: str):
        induced = metrics.induce_metric_from_deviation(
            deviations.get(indicator)
        )
        d = metrics.get(metric)
        for x, y in [
            (F(1), F(1)),
            (F(1), F(3)),
            (F(5, 2), F(1, 7)),
            (F(1000), F(1, 1000)),
        ]:
            self.assertEqual(induced(x, y), d(x, y))

    def test_name(self):
        induced = metrics.induce_metric_from_deviation(deviations.get("PL"))
        self.assertEqual(induced.name, "induced(PL)")
        self.assertFalse(induced.bounded)
        # PL(x, y, 1) = y / x + x / y - 2.
        self.assertEqual(induced(F(1), F(2)), F(1, 2))


if __name__ == "__main__":
    unittest.main()
