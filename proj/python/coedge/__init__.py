"""Exact spectral and combinatorial analysis of co-edge-regular graphs."""

from ._core import *  # noqa: F401,F403
from ._core import Graph, ParseError, Error

__all__ = [name for name in dir() if not name.startswith("_")]
