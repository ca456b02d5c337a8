"""Pairwise comparisons matrices, triads, and weights.

A PC matrix holds strictly positive ratios m_ij of entity i to entity j. It is
reciprocal if m_ij * m_ji = 1 for all i, j and consistent if
m_ij * m_jk = m_ik for all i, j, k. A triad is the value triple
(a, b, c) = (m_ij, m_ik, m_jk) for indices i < j < k; a consistent triad has
ac = b.

Comparisons are exact in rational mode. In float mode, x = y means
|x - y| <= tolerance * |y|.
"""

from __future__ import annotations

import dataclasses
import itertools
from typing import Dict, Iterator, Optional, Sequence, Tuple, Union

from .. import defaults
from . import numbers


class Error(Exception):

    pass


@dataclasses.dataclass(frozen=True)
class Triad:
    """A triad drawn from a PC matrix.

    Args:
        indices: distinct indices (i, j, k).
        values: (m_ij, m_ik, m_jk).
    """

    indices: Tuple[int, int, int]
    values: Tuple[numbers.Value, numbers.Value, numbers.Value]

    def __post_init__(self):
        if len(set(self.indices)) != 3:
            raise Error(f"Triad indices {self.indices} are not distinct")
        if not all(numbers.is_positive(value) for value in self.values):
            raise Error(
                f"Triad values {self.values} are not all finite and positive"
            )

    def __str__(self) -> str:
        values = ", ".join(numbers.format_value(v) for v in self.values)
        return f"{self.indices} = ({values})"


@dataclasses.dataclass(frozen=True)
class Weights:
    """Positive priority weights of n entities."""

    w: Tuple[numbers.Value, ...]

    def __post_init__(self):
        if not self.w:
            raise Error("Empty weight vector")
        for i, weight in enumerate(self.w):
            if not numbers.is_positive(weight):
                raise Error(
                    f"Non-positive or non-finite weight {weight} at {i}"
                )

    def __len__(self) -> int:
        return len(self.w)


@dataclasses.dataclass(frozen=True)
class PCMatrix:
    """A validated PC matrix.

    Use `validate_pc_matrix` to build one from a raw grid; the constructor
    expects entries already converted to the mode.

    Args:
        entries: n x n grid of positive values.
        mode: numeric mode of every entry.
        tolerance: relative tolerance for float-mode comparisons.
    """

    entries: Tuple[Tuple[numbers.Value, ...], ...]
    mode: numbers.Mode
    tolerance: float = defaults.TOLERANCE
    reciprocal: bool = dataclasses.field(init=False)

    def __post_init__(self):
        n = len(self.entries)
        if n < 2:
            raise Error(f"Dimension {n} < 2")
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise Error(f"Row {i} has {len(row)} entries, expected {n}")
            for j, value in enumerate(row):
                if not numbers.is_positive(value):
                    raise Error(
                        f"Non-positive or non-finite entry {value} at "
                        f"({i}, {j})"
                    )
        object.__setattr__(self, "reciprocal", is_reciprocal(self))

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, key: Tuple[int, int]) -> numbers.Value:
        i, j = key
        return self.entries[i][j]

    def equal(self, lhs: numbers.Value, rhs: numbers.Value) -> bool:
        """Equality under the matrix's mode and tolerance."""
        if self.mode is numbers.Mode.RATIONAL:
            return lhs == rhs
        return abs(lhs - rhs) <= self.tolerance * abs(rhs)


Grid = Sequence[Sequence[Union[numbers.Value, int, str]]]


def validate_pc_matrix(
    raw: Grid,
    mode: Optional[numbers.Mode] = None,
    tolerance: float = defaults.TOLERANCE,
) -> PCMatrix:
    """Validates a raw grid as a PC matrix.

    Args:
        raw: rectangular grid of numbers (or tokens).
        mode: numeric mode; if not specified, rational when every entry is
            an integer or a fraction (or an exact token), float otherwise.
        tolerance: relative tolerance for float-mode comparisons.

    Returns:
        PCMatrix.

    Raises:
        Error: empty input, non-square grid, or non-positive entry.
    """
    if not raw or not raw[0]:
        raise Error("Empty matrix")
    n = len(raw)
    for i, row in enumerate(raw):
        if len(row) != n:
            raise Error(
                f"Matrix is not square: row {i} has {len(row)} entries, "
                f"expected {n}"
            )
    flat = [value for row in raw for value in row]
    if mode is None:
        if all(isinstance(value, str) for value in flat):
            mode = numbers.infer_mode(flat)
        else:
            mode = numbers.infer_mode_from_values(
                value for value in flat if not isinstance(value, str)
            )
    try:
        entries = tuple(
            tuple(numbers.coerce(value, mode) for value in row) for row in raw
        )
    except numbers.Error as error:
        raise Error(str(error))
    return PCMatrix(entries, mode, tolerance)


def is_reciprocal(matrix: PCMatrix) -> bool:
    """True iff m_ij * m_ji = 1 for all i, j (which forces m_ii = 1)."""
    one = numbers.one_like(matrix[0, 0])
    return all(
        matrix.equal(matrix[i, j] * matrix[j, i], one)
        for i in range(matrix.n)
        for j in range(i, matrix.n)
    )


def is_consistent(matrix: PCMatrix, tolerance: Optional[float] = None) -> bool:
    """True iff m_ij * m_jk = m_ik for all i, j, k.

    Args:
        matrix: the PC matrix.
        tolerance: overrides the matrix's float-mode tolerance.
    """
    if tolerance is not None:
        matrix = dataclasses.replace(matrix, tolerance=tolerance)
    n = matrix.n
    return all(
        matrix.equal(matrix[i, j] * matrix[j, k], matrix[i, k])
        for i, j, k in itertools.product(range(n), repeat=3)
    )


def enumerate_triads(matrix: PCMatrix) -> Iterator[Triad]:
    """Yields the C(n, 3) triads at i < j < k in lexicographic order.

    A matrix with n < 3 has no triads.
    """
    for i, j, k in itertools.combinations(range(matrix.n), 3):
        yield Triad((i, j, k), (matrix[i, j], matrix[i, k], matrix[j, k]))


def count_intransitive_triads(
    matrix: PCMatrix, tolerance: Optional[float] = None
) -> int:
    """Counts triads with ac != b."""
    if tolerance is not None:
        matrix = dataclasses.replace(matrix, tolerance=tolerance)
    return sum(
        not matrix.equal(a * c, b)
        for a, b, c in (triad.values for triad in enumerate_triads(matrix))
    )


def reconstruct_consistent(
    ratios: Sequence, mode: Optional[numbers.Mode] = None
) -> PCMatrix:
    """Builds the consistent reciprocal matrix with given adjacent ratios.

    For i < j, m_ij = r_i * r_{i + 1} * ... * r_{j - 1} and m_ji = 1 / m_ij.
    This is the only consistent completion; for n = 3 it is
    m_13 = m_12 * m_23.

    Args:
        ratios: the n - 1 ratios r_i = m_{i, i + 1}.
        mode: numeric mode; inferred from the ratios if not specified.

    Returns:
        PCMatrix.

    Raises:
        Error: empty or non-positive ratios.
    """
    if not ratios:
        raise Error("Empty ratio list")
    if mode is None:
        mode = (
            numbers.infer_mode(ratios)
            if all(isinstance(ratio, str) for ratio in ratios)
            else numbers.infer_mode_from_values(ratios)
        )
    try:
        ratios = [numbers.coerce(ratio, mode) for ratio in ratios]
    except numbers.Error as error:
        raise Error(str(error))
    for i, ratio in enumerate(ratios):
        if not numbers.is_positive(ratio):
            raise Error(f"Non-positive or non-finite ratio {ratio} at {i}")
    n = len(ratios) + 1
    one = numbers.one_like(ratios[0])
    grid = [[one] * n for _ in range(n)]
    for i in range(n):
        product = one
        for j in range(i + 1, n):
            product *= ratios[j - 1]
            grid[i][j] = product
            grid[j][i] = one / product
    return PCMatrix(tuple(tuple(row) for row in grid), mode)


def adjacent_ratios(matrix: PCMatrix) -> Tuple[numbers.Value, ...]:
    """Extracts (m_{i, i + 1}); the inverse of `reconstruct_consistent`."""
    return tuple(matrix[i, i + 1] for i in range(matrix.n - 1))


def from_weights(
    weights: Union[Weights, Sequence], mode: Optional[numbers.Mode] = None
) -> PCMatrix:
    """Builds the matrix m_ij = w_i / w_j.

    The result is reciprocal and consistent (exactly so in rational mode).
    """
    if not isinstance(weights, Weights):
        weights = Weights(tuple(weights))
    if mode is None:
        mode = numbers.infer_mode_from_values(weights.w)
    try:
        w = [numbers.coerce(weight, mode) for weight in weights.w]
    except numbers.Error as error:
        raise Error(str(error))
    if len(w) < 2:
        raise Error(f"Dimension {len(w)} < 2")
    return PCMatrix(tuple(tuple(wi / wj for wj in w) for wi in w), mode)


def relabel(matrix: PCMatrix, order: Sequence[int]) -> PCMatrix:
    """Permutes rows and columns simultaneously.

    Entry (i, j) of the result is entry (order[i], order[j]) of the input.
    """
    if sorted(order) != list(range(matrix.n)):
        raise Error(f"{order} is not a permutation of range({matrix.n})")
    return PCMatrix(
        tuple(tuple(matrix[i, j] for j in order) for i in order),
        matrix.mode,
        matrix.tolerance,
    )


def as_dict(matrix: PCMatrix) -> Dict:
    return {
        "n": matrix.n,
        "mode": str(matrix.mode),
        "reciprocal": matrix.reciprocal,
        "entries": [
            [numbers.format_value(value) for value in row]
            for row in matrix.entries
        ],
    }
