"""Exact analysis of orbigraphs.

An orbigraph is a weighted directed graph with nonnegative integer weights,
constant out-weight k and symmetric support. Rationals come back as
``fractions.Fraction`` and big integers as ``int``.
"""

from ._core import *  # noqa: F401,F403
from ._core import OrbigraphError


def error_kind(exc: OrbigraphError) -> str:
    """The error kind name, e.g. ``"RowSumMismatch"``."""
    return str(exc).split(":", 1)[0]


__all__ = [name for name in dir() if not name.startswith("_")]
