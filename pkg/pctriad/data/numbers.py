"""Numeric modes and exact value tokens.

Every value held by a matrix, a triad, or a witness is either a
`fractions.Fraction` (rational mode) or a `float` (float mode). The two are
never mixed within one matrix.

Tokens are the textual form of values, used both in matrix files and in
reports. A token is either a decimal literal (`2`, `0.5`, `1e-3`) or an exact
fraction `p/q` with integers p > 0, q > 0. Rational values are written back as
`p/q` (or `p` when q = 1); floats are written as their shortest round-trip
decimal, so re-reading a token always reproduces the value exactly. There
are no tokens for infinities or NaN, and a decimal literal outside the float
range is an error in float mode.
"""

from __future__ import annotations

import enum
import fractions
import math
import re
from typing import Iterable, Optional, Union

Value = Union[fractions.Fraction, float]


class Error(Exception):

    pass


class Mode(enum.Enum):
    """Numeric mode of a run."""

    RATIONAL = "rational"
    FLOAT = "float"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, name: Optional[Union[str, Mode]]) -> Optional[Mode]:
        if name is None or isinstance(name, Mode):
            return name
        try:
            return cls(name)
        except ValueError:
            raise Error(f"Unknown numeric mode {name!r}")


_INTEGER = re.compile(r"[+-]?\d+")
_FRACTION = re.compile(r"([+-]?\d+)/([+-]?\d+)")
_DECIMAL = re.compile(r"[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?")
_NONZERO_DIGIT = re.compile(r"[1-9]")


def is_exact_token(token: str) -> bool:
    """True if the token is an integer or a fraction."""
    return bool(_INTEGER.fullmatch(token) or _FRACTION.fullmatch(token))


def infer_mode(tokens: Iterable[str]) -> Mode:
    """Rational if every token is exact, float otherwise."""
    if all(is_exact_token(token) for token in tokens):
        return Mode.RATIONAL
    return Mode.FLOAT


def infer_mode_from_values(values: Iterable) -> Mode:
    for value in values:
        if isinstance(value, bool) or not isinstance(
            value, (int, fractions.Fraction)
        ):
            return Mode.FLOAT
    return Mode.RATIONAL


def parse_token(token: str, mode: Mode) -> Value:
    """Parses a single token.

    Args:
        token: the token.
        mode: numeric mode for the result.

    Returns:
        The value, a Fraction in rational mode and a float in float mode.

    Raises:
        Error: malformed token, malformed fraction, or (in float mode) a
            value that overflows or underflows a float.
    """
    if mtch := _FRACTION.fullmatch(token):
        numerator = int(mtch.group(1))
        denominator = int(mtch.group(2))
        if numerator <= 0 or denominator <= 0:
            raise Error(f"Fraction {token} must have p > 0 and q > 0")
        value = fractions.Fraction(numerator, denominator)
        if mode is Mode.RATIONAL:
            return value
        return _fraction_to_float(value, token)
    if _DECIMAL.fullmatch(token):
        if mode is Mode.RATIONAL:
            return fractions.Fraction(token)
        mantissa = re.split(r"[eE]", token)[0]
        return _in_float_range(
            float(token), token, bool(_NONZERO_DIGIT.search(mantissa))
        )
    raise Error(f"Unable to parse number {token!r}")


def _in_float_range(result: float, token: str, nonzero: bool) -> float:
    if math.isinf(result):
        raise Error(f"Number {token} overflows a float")
    if result == 0 and nonzero:
        raise Error(f"Number {token} underflows to 0 as a float")
    return result


def _fraction_to_float(value: fractions.Fraction, token: str) -> float:
    try:
        result = float(value)
    except OverflowError:
        result = math.inf
    return _in_float_range(result, token, value != 0)


def coerce(value, mode: Mode) -> Value:
    """Converts a Python number to the representation for the mode."""
    if isinstance(value, str):
        return parse_token(value, mode)
    if mode is Mode.RATIONAL:
        try:
            return fractions.Fraction(value)
        except (OverflowError, ValueError):
            raise Error(f"{value} has no rational value")
    if isinstance(value, fractions.Fraction):
        return _fraction_to_float(value, str(value))
    return float(value)


def is_positive(value) -> bool:
    """True iff the value is finite and > 0; NaN and infinities are not."""
    if isinstance(value, float):
        return math.isfinite(value) and value > 0
    return value > 0


def exact(value):
    """Promotes plain integers to fractions; leaves other values alone."""
    if type(value) is int:
        return fractions.Fraction(value)
    return value


def zero_like(value) -> Value:
    return 0.0 if isinstance(value, float) else fractions.Fraction(0)


def one_like(value) -> Value:
    return 1.0 if isinstance(value, float) else fractions.Fraction(1)


def format_value(value) -> str:
    """Writes a value as an exact token."""
    if isinstance(value, fractions.Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return repr(value)
    return str(value)
