"""pctriad: triad inconsistency in pairwise comparisons matrices.

This module just exposes the version.
"""

from importlib import metadata

try:
    __version__ = metadata.version("pctriad")
except metadata.PackageNotFoundError:
    __version__ = "0.0.0"
