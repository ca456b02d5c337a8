"""Full tests of the command-line interface.

These run each subcommand on small inputs and compare the emitted documents
against known values."""

import contextlib
import io
import os
import tempfile
import unittest

import yaml
from parameterized import parameterized

from pctriad import cli

# Directory the unit test is located in, relative to the working directory.
DIR = os.path.relpath(os.path.dirname(__file__), os.getcwd())
TESTDATA_DIR = os.path.join(DIR, "testdata")


class PCTriadTest(unittest.TestCase):
    def assertNonEmptyFileExists(self, path: str):
        self.assertTrue(os.path.exists(path), msg=f"file {path} not found")
        self.assertGreater(
            os.stat(path).st_size, 0, msg=f"file {path} is empty"
        )

    def setUp(self):
        self.tempdir = tempfile.TemporaryDirectory(prefix="pctriad_test-")

    def tearDown(self):
        self.tempdir.cleanup()

    def run_cli(self, args):
        """Runs the CLI, returning the exit code and what it printed."""
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            code = cli.pctriad_python_interface(args)
        return code, buf.getvalue()

    def run_structured(self, args):
        """Runs the CLI with structured output to a file; parses it."""
        path = os.path.join(self.tempdir.name, "report.yaml")
        code = cli.pctriad_python_interface(
            args + ["--out=structured", f"--output={path}"]
        )
        self.assertNonEmptyFileExists(path)
        with open(path, "r") as source:
            return code, yaml.safe_load(source)

    # analyze.

    def test_analyze(self):
        path = os.path.join(TESTDATA_DIR, "inconsistent_4.txt")
        code, document = self.run_structured(["analyze", path])
        self.assertEqual(code, 0)
        self.assertEqual(document["n"], 4)
        self.assertEqual(document["mode"], "rational")
        self.assertTrue(document["reciprocal"])
        self.assertFalse(document["consistent"])
        self.assertEqual(document["indicator"], "Kii")
        self.assertEqual(document["score"], "1/2")
        self.assertEqual(document["worst"]["indices"], [0, 1, 3])
        self.assertEqual(document["worst"]["values"], ["2", "12", "3"])
        self.assertEqual(document["intransitive_triads"], 2)
        self.assertEqual(len(document["per_triad"]), 4)

    @parameterized.expand(
        [("Kii", "1/2"), ("PL", "1/2"), ("DI", "1"), ("EI", "1")]
    )
    def test_analyze_single_triad(self, indicator: str, score: str):
        path = os.path.join(TESTDATA_DIR, "single_triad.txt")
        code, document = self.run_structured(
            ["analyze", path, f"--indicator={indicator}"]
        )
        self.assertEqual(code, 0)
        self.assertEqual(document["score"], score)
        self.assertEqual(document["worst"]["indices"], [0, 1, 2])

    def test_analyze_text(self):
        path = os.path.join(TESTDATA_DIR, "consistent_4.txt")
        code, text = self.run_cli(["analyze", path])
        self.assertEqual(code, 0)
        self.assertIn("consistent: yes", text)
        self.assertIn("score: 0\n", text)
        self.assertIn("worst triad: (0, 1, 2) = (2, 6, 3)", text)

    def test_analyze_float(self):
        path = os.path.join(TESTDATA_DIR, "float_3.txt")
        code, document = self.run_structured(["analyze", path])
        self.assertEqual(code, 0)
        self.assertEqual(document["mode"], "float")
        self.assertTrue(document["consistent"])
        self.assertEqual(document["score"], "0.0")

    def test_analyze_forced_mode(self):
        path = os.path.join(TESTDATA_DIR, "single_triad.txt")
        code, document = self.run_structured(
            ["analyze", path, "--mode=float"]
        )
        self.assertEqual(code, 0)
        self.assertEqual(document["mode"], "float")
        self.assertEqual(document["score"], "0.5")

    def test_analyze_no_triads(self):
        path = os.path.join(TESTDATA_DIR, "pair.txt")
        code, text = self.run_cli(["analyze", path])
        self.assertEqual(code, 0)
        self.assertIn("worst triad: none", text)

    @parameterized.expand(
        [
            "bad_token.txt",
            "non_square.txt",
            "does_not_exist.txt",
            "nan_entry.txt",
            "overflow_entry.txt",
        ]
    )
    def test_analyze_bad_input(self, filename: str):
        path = os.path.join(TESTDATA_DIR, filename)
        with self.assertLogs(level="ERROR"):
            code, text = self.run_cli(["analyze", path])
        self.assertEqual(code, 2)
        self.assertEqual(text, "")

    def test_analyze_unknown_indicator(self):
        path = os.path.join(TESTDATA_DIR, "single_triad.txt")
        with contextlib.redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as context:
                cli.pctriad_python_interface(
                    ["analyze", path, "--indicator=GI"]
                )
        self.assertEqual(context.exception.code, 2)

    # axioms.

    @parameterized.expand(
        [
            ("discrete", 0),
            ("ratio", 0),
            ("squared", 1),
            ("Kii", 0),
            ("EI", 0),
            ("PL", 1),
            ("induced:Kii", 0),
        ]
    )
    def test_axioms(self, target: str, expected: int):
        code, document = self.run_structured(
            ["axioms", target, "--samples=200"]
        )
        self.assertEqual(code, expected)
        self.assertEqual(document["verdict"], "fail" if expected else "pass")
        self.assertEqual(document["plan"]["count"], 200)
        self.assertEqual(document["plan"]["seed"], 1995)

    def test_axioms_pl_witness(self):
        code, document = self.run_structured(
            ["axioms", "PL", "--samples=100", "--mode=rational"]
        )
        self.assertEqual(code, 1)
        (triangle,) = [
            axiom
            for axiom in document["axioms"]
            if axiom["name"] == "generalized-triangle"
        ]
        witness = triangle["witnesses"][0]
        self.assertEqual(witness["inputs"], ["1", "3", "5", "1", "2"])
        self.assertEqual(witness["lhs"], "9/10")
        self.assertEqual(witness["rhs"], "13/30")

    def test_axioms_reproducible(self):
        args = ["axioms", "squared", "--samples=300", "--seed=7"]
        _, first = self.run_cli(args)
        _, second = self.run_cli(args)
        self.assertEqual(first, second)
        self.assertIn("verdict: fail", first)

    def test_axioms_config(self):
        config_path = os.path.join(self.tempdir.name, "config.yaml")
        with open(config_path, "w") as sink:
            yaml.safe_dump({"samples": 50, "seed": 3, "probes": False}, sink)
        code, document = self.run_structured(
            ["axioms", f"--config={config_path}", "Kii"]
        )
        self.assertEqual(code, 0)
        self.assertEqual(document["plan"]["count"], 50)
        self.assertEqual(document["plan"]["seed"], 3)
        self.assertFalse(document["plan"]["probes"])

    def test_axioms_unknown_target(self):
        with self.assertLogs(level="ERROR"):
            code, _ = self.run_cli(["axioms", "manhattan"])
        self.assertEqual(code, 2)

    def test_axioms_bad_domain(self):
        with self.assertLogs(level="ERROR"):
            code, _ = self.run_cli(["axioms", "Kii", "--lo=0"])
        self.assertEqual(code, 2)

    # classify.

    @parameterized.expand(
        [
            ("Kii", True, True, True),
            ("EI", True, False, False),
            ("PL", False, False, False),
            ("d1", True, True, True),
        ]
    )
    def test_classify(
        self,
        target: str,
        is_deviation: bool,
        is_bounded: bool,
        is_indicator: bool,
    ):
        code, document = self.run_structured(
            ["classify", target, "--samples=200"]
        )
        self.assertEqual(code, 0)
        self.assertEqual(document["is_deviation"], is_deviation)
        self.assertEqual(document["is_bounded"], is_bounded)
        self.assertEqual(document["is_indicator"], is_indicator)

    def test_classify_text(self):
        code, text = self.run_cli(["classify", "EI", "--samples=100"])
        self.assertEqual(code, 0)
        self.assertIn("deviation: yes", text)
        self.assertIn("bounded: no (unbounded (evidence)", text)
        self.assertIn("indicator: no", text)

    # reconstruct.

    def test_reconstruct(self):
        code, text = self.run_cli(["reconstruct", "2", "3", "1"])
        self.assertEqual(code, 0)
        self.assertEqual(
            text,
            "4\n"
            "1   2   6   6\n"
            "1/2 1   3   3\n"
            "1/6 1/3 1   1\n"
            "1/6 1/3 1   1\n",
        )

    def test_reconstruct_structured(self):
        code, document = self.run_structured(["reconstruct", "3/2", "4"])
        self.assertEqual(code, 0)
        self.assertEqual(
            document["entries"],
            [["1", "3/2", "6"], ["2/3", "1", "4"], ["1/6", "1/4", "1"]],
        )
        self.assertTrue(document["reciprocal"])

    def test_reconstruct_round_trip(self):
        path = os.path.join(self.tempdir.name, "matrix.txt")
        code = cli.pctriad_python_interface(
            ["reconstruct", "2", "1/5", "7", f"--output={path}"]
        )
        self.assertEqual(code, 0)
        self.assertNonEmptyFileExists(path)
        code, document = self.run_structured(["analyze", path])
        self.assertEqual(code, 0)
        self.assertTrue(document["consistent"])
        self.assertEqual(document["score"], "0")

    @parameterized.expand(["0", "nan", "1e999"])
    def test_reconstruct_bad_ratio(self, ratio: str):
        with self.assertLogs(level="ERROR"):
            code, _ = self.run_cli(["reconstruct", "2", ratio])
        self.assertEqual(code, 2)

    # counterexample.

    def test_counterexample_pl(self):
        code, text = self.run_cli(
            [
                "counterexample",
                "PL",
                "--condition=generalized-triangle",
                "--mode=rational",
                "--samples=10",
            ]
        )
        self.assertEqual(code, 1)
        self.assertEqual(
            text,
            "PL: generalized-triangle: (1, 3, 5, 1, 2): "
            "td(a, de, c) <= td(a, b, c) + td(d, b, e): "
            "9/10 <= 13/30 fails\n",
        )

    def test_counterexample_squared(self):
        code, document = self.run_structured(
            [
                "counterexample",
                "squared",
                "--condition=triangle",
                "--mode=rational",
                "--samples=10",
            ]
        )
        self.assertEqual(code, 1)
        self.assertEqual(document["witness"]["inputs"], ["1", "2", "3"])

    def test_counterexample_none(self):
        code, document = self.run_structured(
            [
                "counterexample",
                "Kii",
                "--condition=generalized-triangle",
                "--samples=200",
            ]
        )
        self.assertEqual(code, 0)
        self.assertIsNone(document["witness"])

    def test_counterexample_unknown_condition(self):
        with self.assertLogs(level="ERROR"):
            code, _ = self.run_cli(
                ["counterexample", "Kii", "--condition=associativity"]
            )
        self.assertEqual(code, 2)


if __name__ == "__main__":
    unittest.main()
