"""Odd induced subgraphs: exact oracles, certificates and verification helpers."""

from ._oddsub import *  # noqa: F401,F403
from ._oddsub import Graph, fo_exact

__all__ = [name for name in dir() if not name.startswith("_")]
