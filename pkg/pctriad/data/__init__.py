"""Data classes."""

# Symbols that need to be seen outside this submodule.

from .matrices import PCMatrix, Triad, Weights  # noqa: F401
from .numbers import Mode, Value  # noqa: F401
from .textfile import parse_from_path, parse_from_string  # noqa: F401
