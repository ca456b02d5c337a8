"""Matrix text format parser and writer.

The format is:

    # Comments run from `#` to the end of the line.
    3
    1   2   6
    1/2 1   3
    1/6 1/3 1

The first line holding a single positive integer is an optional header giving
the dimension n; then come n rows of n whitespace-separated tokens. Tokens are
decimal literals or exact fractions `p/q` (see `numbers`). Unless the mode is
given, a matrix whose tokens are all integers or fractions is read in rational
mode, and any decimal literal switches it to float mode.
"""

from __future__ import annotations

import dataclasses
import logging
import re
from typing import Iterable, Iterator, List, Optional, TextIO, Tuple

from .. import defaults
from . import matrices, numbers


class Error(Exception):
    """Parse error with a 1-based position.

    Args:
        message: what went wrong.
        line: line number.
        column: column number, if the error is about a token.
    """

    line: int
    column: Optional[int]

    def __init__(self, message: str, line: int, column: Optional[int] = None):
        self.line = line
        self.column = column
        if column is None:
            super().__init__(f"line {line}: {message}")
        else:
            super().__init__(f"line {line}, column {column}: {message}")


@dataclasses.dataclass
class Token:
    """A token with its position."""

    text: str
    line: int
    column: int


def _tokenize(handle: Iterable[str]) -> Iterator[Tuple[int, List[Token]]]:
    """Yields (line number, tokens) for each non-blank line."""
    for linenum, line in enumerate(handle, 1):
        line = line.split("#", 1)[0]
        tokens = [
            Token(mtch.group(), linenum, mtch.start() + 1)
            for mtch in re.finditer(r"\S+", line)
        ]
        if tokens:
            yield linenum, tokens


def _parse_from_lines(
    handle: Iterable[str],
    mode: Optional[numbers.Mode],
    tolerance: float,
) -> matrices.PCMatrix:
    rows: List[List[Token]] = []
    n: Optional[int] = None
    lastline = 0
    for linenum, tokens in _tokenize(handle):
        lastline = linenum
        if n is None and not rows and len(tokens) == 1:
            if re.fullmatch(r"\d+", tokens[0].text):
                n = int(tokens[0].text)
                if n < 2:
                    raise Error(f"dimension {n} < 2", linenum, 1)
                continue
        if n is None:
            n = len(tokens)
        if len(rows) == n:
            raise Error(f"more than {n} rows", linenum)
        if len(tokens) != n:
            raise Error(
                f"row has {len(tokens)} entries, expected {n}", linenum
            )
        rows.append(tokens)
    if not rows:
        raise Error("empty matrix", lastline + 1)
    if len(rows) != n:
        raise Error(f"expected {n} rows, found {len(rows)}", lastline + 1)
    if n < 2:
        raise Error(f"dimension {n} < 2", rows[0][0].line)
    if mode is None:
        mode = numbers.infer_mode(token.text for row in rows for token in row)
        logging.info("Reading matrix in %s mode", mode)
    grid = []
    for row in rows:
        values = []
        for token in row:
            try:
                value = numbers.parse_token(token.text, mode)
            except numbers.Error as error:
                raise Error(str(error), token.line, token.column)
            if not numbers.is_positive(value):
                raise Error(
                    f"non-positive entry {token.text}",
                    token.line,
                    token.column,
                )
            values.append(value)
        grid.append(values)
    return matrices.validate_pc_matrix(grid, mode, tolerance)


def parse_from_string(
    buffer: str,
    mode: Optional[numbers.Mode] = None,
    tolerance: float = defaults.TOLERANCE,
) -> matrices.PCMatrix:
    """Parses a matrix from a string.

    Args:
        buffer: string containing a serialized matrix.
        mode: numeric mode; inferred from the tokens if not specified.
        tolerance: relative tolerance for float-mode comparisons.

    Returns:
        PCMatrix.
    """
    return _parse_from_lines(buffer.splitlines(), mode, tolerance)


def parse_from_path(
    path: str,
    mode: Optional[numbers.Mode] = None,
    tolerance: float = defaults.TOLERANCE,
) -> matrices.PCMatrix:
    """Parses a matrix from a file path.

    Args:
        path: path to the matrix file.
        mode: numeric mode; inferred from the tokens if not specified.
        tolerance: relative tolerance for float-mode comparisons.

    Returns:
        PCMatrix.
    """
    with open(path, "r") as source:
        return _parse_from_lines(source, mode, tolerance)


def format_matrix(matrix: matrices.PCMatrix, header: bool = True) -> str:
    """Serializes a matrix, with columns aligned."""
    cells = [
        [numbers.format_value(value) for value in row]
        for row in matrix.entries
    ]
    width = max(len(cell) for row in cells for cell in row)
    lines = [str(matrix.n)] if header else []
    for row in cells:
        lines.append(" ".join(cell.ljust(width) for cell in row).rstrip())
    return "\n".join(lines) + "\n"


def write_matrix(
    matrix: matrices.PCMatrix, sink: TextIO, header: bool = True
) -> None:
    sink.write(format_matrix(matrix, header))
