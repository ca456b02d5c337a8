"""Command-line interface.

Subcommands:

* analyze: scores a matrix file with an indicator.
* axioms: checks the metric axioms or the deviation conditions of a target.
* classify: classifies a target as deviation, bounded, or indicator.
* reconstruct: builds the consistent matrix from adjacent ratios.
* counterexample: searches for the first violation of one condition.

Exit codes: 0 on success, 1 when an axiom or condition fails, 2 on usage or
input errors.
"""

import dataclasses
import logging
import sys
from typing import Dict, List, Literal, Optional, Tuple

import jsonargparse

from . import (
    classification,
    defaults,
    deviations,
    metrics,
    reports,
    samplers,
    verify,
)
from .data import matrices, numbers, textfile

SUCCESS = 0
FAILURE = 1
USAGE = 2

COMMANDS = ("analyze", "axioms", "classify", "reconstruct", "counterexample")
INDUCED_PREFIX = "induced:"


class Error(Exception):

    pass


@dataclasses.dataclass
class RunConfig:
    """Options for a single run.

    Args:
        command: one of COMMANDS.
        inputs: matrix path (analyze) or ratio tokens (reconstruct).
        target: metric or indicator name (axioms, classify, counterexample).
        indicator: indicator name (analyze).
        condition: condition name (counterexample).
        mode: numeric mode; inferred from the input if not specified.
        seed: sampling seed.
        samples: number of draws.
        lo: lower end of the sampling domain.
        hi: upper end of the sampling domain.
        sampling: distribution of the draws.
        probes: whether to prepend the structured probes.
        tolerance: float-mode tolerance.
        out: output format, text or structured.
        output: output path; stdout if not specified.
    """

    command: str
    inputs: List[str] = dataclasses.field(default_factory=list)
    target: Optional[str] = None
    indicator: str = defaults.INDICATOR
    condition: Optional[str] = None
    mode: Optional[numbers.Mode] = None
    seed: int = defaults.SEED
    samples: int = defaults.SAMPLES
    lo: float = defaults.LO
    hi: float = defaults.HI
    sampling: str = defaults.SAMPLING
    probes: bool = defaults.PROBES
    tolerance: float = defaults.TOLERANCE
    out: str = defaults.OUT
    output: Optional[str] = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise Error(f"Unknown command {self.command!r}")
        if self.tolerance < 0:
            raise Error(f"Tolerance {self.tolerance} < 0")
        if self.samples < 1:
            raise Error(f"Sample count {self.samples} < 1")
        self.mode = numbers.Mode.parse(self.mode)
        if self.command in ("analyze", "reconstruct") and not self.inputs:
            raise Error(f"{self.command} requires an input")
        if self.command == "analyze":
            deviations.get(self.indicator)
        if self.command in ("axioms", "classify", "counterexample"):
            if not self.target:
                raise Error(f"{self.command} requires a target")
            resolve(self.target)
        if self.command == "counterexample" and not self.condition:
            raise Error("counterexample requires a condition")

    @property
    def plan(self) -> samplers.SamplePlan:
        return samplers.SamplePlan(
            seed=self.seed,
            count=self.samples,
            lo=self.lo,
            hi=self.hi,
            sampling=self.sampling,
            tolerance=self.tolerance,
            mode=self.mode or numbers.Mode.FLOAT,
            probes=self.probes,
        )

    @property
    def structured(self) -> bool:
        return self.out == "structured"


def resolve(target: str) -> verify.Target:
    """Looks up a metric, an indicator, or a metric induced by one.

    Names are indicator names (DI, EI, I1, Kii, PL), metric names (discrete,
    euclidean, d1, ratio), the negative control `squared`, or
    `induced:<indicator>` for the metric induced by an indicator.
    """
    if target in deviations.INDICATORS:
        return deviations.INDICATORS[target]
    if target.startswith(INDUCED_PREFIX):
        td = deviations.get(target[len(INDUCED_PREFIX) :])
        return metrics.induce_metric_from_deviation(td)
    try:
        return metrics.get(target)
    except metrics.Error:
        raise Error(
            f"Unknown target {target!r}; expected an indicator "
            f"({', '.join(deviations.INDICATORS)}), a metric "
            f"({', '.join(metrics.METRICS)}), squared, or "
            f"{INDUCED_PREFIX}<indicator>"
        )


# Commands. Each returns the document to emit and the exit code.


def _triad_row(
    indices: Tuple[int, int, int], triad: matrices.Triad, value
) -> Dict:
    return {
        "indices": list(indices),
        "values": list(reports.tokens(triad.values)),
        "value": numbers.format_value(value),
    }


def cmd_analyze(config: RunConfig) -> Tuple[str, int]:
    """Scores a matrix file with an indicator."""
    path = config.inputs[0]
    matrix = textfile.parse_from_path(path, config.mode, config.tolerance)
    logging.info(
        "Read %d x %d matrix from %s (%s mode)",
        matrix.n,
        matrix.n,
        path,
        matrix.mode,
    )
    if not matrix.reciprocal:
        logging.warning("Matrix %s is not reciprocal", path)
    consistent = matrices.is_consistent(matrix)
    intransitive = matrices.count_intransitive_triads(matrix)
    result = deviations.matrix_inconsistency(matrix, config.indicator)
    document = {
        "matrix": path,
        "n": matrix.n,
        "mode": str(matrix.mode),
        "reciprocal": matrix.reciprocal,
        "consistent": consistent,
        "indicator": config.indicator,
        "triads": len(result.per_triad),
        "intransitive_triads": intransitive,
        "score": numbers.format_value(result.score),
        "worst": (
            None
            if result.worst is None
            else _triad_row(
                result.worst.indices,
                result.worst,
                result.per_triad[result.worst.indices],
            )
        ),
        "per_triad": [
            _triad_row(indices, result.triads[indices], value)
            for indices, value in result.per_triad.items()
        ],
    }
    if config.structured:
        return reports.dump(document), SUCCESS
    return _analysis_text(document), SUCCESS


def _analysis_text(document: Dict) -> str:
    def yes(flag: bool) -> str:
        return "yes" if flag else "no"

    lines = [
        f"matrix: {document['matrix']}",
        f"n: {document['n']}",
        f"mode: {document['mode']}",
        f"reciprocal: {yes(document['reciprocal'])}",
        f"consistent: {yes(document['consistent'])}",
        f"intransitive triads: {document['intransitive_triads']} of "
        f"{document['triads']}",
        f"indicator: {document['indicator']}",
        f"score: {document['score']}",
    ]
    rows = document["per_triad"]
    if not rows:
        lines.append("worst triad: none (no triads)")
        return "\n".join(lines) + "\n"
    worst = document["worst"]
    lines.append(
        f"worst triad: {tuple(worst['indices'])} = "
        f"({', '.join(worst['values'])})"
    )
    lines.append("triads:")
    for row in rows[: defaults.TEXT_ROW_LIMIT]:
        lines.append(
            f"  {tuple(row['indices'])}\t({', '.join(row['values'])})\t"
            f"{row['value']}"
        )
    if len(rows) > defaults.TEXT_ROW_LIMIT:
        hidden = len(rows) - defaults.TEXT_ROW_LIMIT
        logging.info(
            "Truncated text listing to %d triads", defaults.TEXT_ROW_LIMIT
        )
        lines.append(
            f"  ... {hidden} more triads not shown; use --out structured"
        )
    return "\n".join(lines) + "\n"


def cmd_axioms(config: RunConfig) -> Tuple[str, int]:
    """Checks the axioms of a metric or the conditions of a deviation."""
    report = verify.check(resolve(config.target), config.plan)
    text = report.to_yaml() if config.structured else report.to_text()
    return text, SUCCESS if report.passed else FAILURE


def cmd_classify(config: RunConfig) -> Tuple[str, int]:
    """Classifies a deviation (or the deviation induced by a metric)."""
    target = resolve(config.target)
    if isinstance(target, metrics.MetricFn):
        target = deviations.induce_deviation(target)
    result = classification.classify(
        target,
        config.plan,
        verify.growth_schedule(config.plan.mode),
    )
    if config.structured:
        return reports.dump(result.as_dict()), SUCCESS
    return result.to_text(), SUCCESS


def cmd_reconstruct(config: RunConfig) -> Tuple[str, int]:
    """Builds the consistent matrix from adjacent ratios."""
    matrix = matrices.reconstruct_consistent(config.inputs, config.mode)
    if config.structured:
        return reports.dump(matrices.as_dict(matrix)), SUCCESS
    return textfile.format_matrix(matrix), SUCCESS


def cmd_counterexample(config: RunConfig) -> Tuple[str, int]:
    """Searches for the first violation of one condition."""
    target = resolve(config.target)
    try:
        witness = verify.find_counterexample(
            target, config.condition, config.plan
        )
    except KeyError:
        raise Error(f"Unknown condition {config.condition!r}")
    document = {
        "target": target.name,
        "condition": config.condition,
        "plan": config.plan.as_dict(),
        "witness": None if witness is None else witness.as_dict(),
    }
    code = SUCCESS if witness is None else FAILURE
    if config.structured:
        return reports.dump(document), code
    if witness is None:
        return f"{target.name}: {config.condition}: none found\n", code
    return f"{target.name}: {config.condition}: {witness}\n", code


COMMAND_FUNCTIONS = {
    "analyze": cmd_analyze,
    "axioms": cmd_axioms,
    "classify": cmd_classify,
    "reconstruct": cmd_reconstruct,
    "counterexample": cmd_counterexample,
}


# Parsing.


def _add_output_arguments(parser: jsonargparse.ArgumentParser) -> None:
    parser.add_argument(
        "--out",
        type=Literal["text", "structured"],
        default=defaults.OUT,
        help="Output format.",
    )
    parser.add_argument(
        "--output",
        type=Optional[str],
        help="Output path; stdout if not specified.",
    )


def _add_mode_argument(parser: jsonargparse.ArgumentParser, default=None):
    parser.add_argument(
        "--mode",
        type=Optional[Literal["rational", "float"]],
        default=default,
        help="Numeric mode.",
    )


def _add_sampling_arguments(parser: jsonargparse.ArgumentParser) -> None:
    _add_mode_argument(parser, str(numbers.Mode.FLOAT))
    parser.add_argument("--samples", type=int, default=defaults.SAMPLES)
    parser.add_argument("--seed", type=int, default=defaults.SEED)
    parser.add_argument("--lo", type=float, default=defaults.LO)
    parser.add_argument("--hi", type=float, default=defaults.HI)
    parser.add_argument(
        "--sampling",
        type=Literal["uniform-log", "uniform-linear", "structured-grid"],
        default=defaults.SAMPLING,
    )
    parser.add_argument(
        "--probes",
        type=bool,
        default=defaults.PROBES,
        help="Prepends the structured probes to the sample stream.",
    )
    parser.add_argument("--tol", type=float, default=defaults.TOLERANCE)


def _subparser(description: str) -> jsonargparse.ArgumentParser:
    parser = jsonargparse.ArgumentParser(description=description)
    parser.add_argument("--config", action=jsonargparse.ActionConfigFile)
    return parser


def get_parser() -> jsonargparse.ArgumentParser:
    """Builds the parser; use with `--help` to see the full set of options."""
    parser = jsonargparse.ArgumentParser(
        prog="pctriad",
        description="Pairwise comparisons triad inconsistency toolkit.",
    )
    parser.add_argument(
        "--log_level",
        type=Literal["DEBUG", "INFO", "WARNING", "ERROR"],
        default="INFO",
    )
    subcommands = parser.add_subcommands()
    # analyze.
    analyze = _subparser(cmd_analyze.__doc__)
    analyze.add_argument("path", type=str, help="Path to a matrix file.")
    analyze.add_argument(
        "--indicator",
        type=Literal[tuple(deviations.INDICATORS)],
        default=defaults.INDICATOR,
    )
    _add_mode_argument(analyze)
    analyze.add_argument("--tol", type=float, default=defaults.TOLERANCE)
    _add_output_arguments(analyze)
    subcommands.add_subcommand("analyze", analyze)
    # axioms, classify, and counterexample.
    for name, function in (
        ("axioms", cmd_axioms),
        ("classify", cmd_classify),
        ("counterexample", cmd_counterexample),
    ):
        subparser = _subparser(function.__doc__)
        subparser.add_argument("target", type=str, help="Target name.")
        if name == "counterexample":
            subparser.add_argument(
                "--condition",
                type=str,
                default="generalized-triangle",
                help="Condition name, e.g. zero, commutation, "
                "generalized-triangle, symmetry.",
            )
        _add_sampling_arguments(subparser)
        _add_output_arguments(subparser)
        subcommands.add_subcommand(name, subparser)
    # reconstruct.
    reconstruct = _subparser(cmd_reconstruct.__doc__)
    reconstruct.add_argument(
        "ratios", nargs="+", help="Adjacent ratios m_{i, i + 1}."
    )
    _add_mode_argument(reconstruct)
    _add_output_arguments(reconstruct)
    subcommands.add_subcommand("reconstruct", reconstruct)
    return parser


def _make_config(command: str, options: jsonargparse.Namespace) -> RunConfig:
    def option(name, default=None):
        return getattr(options, name, default)

    inputs = []
    if command == "analyze":
        inputs = [options.path]
    elif command == "reconstruct":
        inputs = list(options.ratios)
    return RunConfig(
        command,
        inputs=inputs,
        target=option("target"),
        indicator=option("indicator", defaults.INDICATOR),
        condition=option("condition"),
        mode=option("mode"),
        seed=option("seed", defaults.SEED),
        samples=option("samples", defaults.SAMPLES),
        lo=option("lo", defaults.LO),
        hi=option("hi", defaults.HI),
        sampling=option("sampling", defaults.SAMPLING),
        probes=option("probes", defaults.PROBES),
        tolerance=option("tol", defaults.TOLERANCE),
        out=option("out", defaults.OUT),
        output=option("output"),
    )


_ERRORS = (
    Error,
    numbers.Error,
    matrices.Error,
    textfile.Error,
    metrics.Error,
    deviations.Error,
    samplers.Error,
    OSError,
)


def run(config: RunConfig) -> int:
    """Runs a command and emits its document; returns the exit code."""
    text, code = COMMAND_FUNCTIONS[config.command](config)
    if config.output:
        with open(config.output, "w") as sink:
            sink.write(text)
    else:
        sys.stdout.write(text)
        sys.stdout.flush()
    return code


def pctriad_python_interface(args: Optional[List[str]] = None) -> int:
    """Interface to use the toolkit through Python.

    Args:
        args: command-line arguments; sys.argv if not specified.

    Returns:
        The exit code. Usage errors exit the process with code 2, as
        argument parsers do.
    """
    parser = get_parser()
    cfg = parser.parse_args(args)
    logging.getLogger().setLevel(cfg.log_level)
    command = cfg.subcommand
    try:
        return run(_make_config(command, getattr(cfg, command)))
    except _ERRORS as error:
        logging.error("%s", error)
        return USAGE


def main() -> None:
    logging.basicConfig(
        format="%(filename)s %(levelname)s: %(asctime)s - %(message)s",
        datefmt="%d-%b-%y %H:%M:%S",
        level="INFO",
    )
    sys.exit(pctriad_python_interface())


if __name__ == "__main__":
    main()
