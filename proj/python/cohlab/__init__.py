"""Basis-dependent quantum coherence: entropies, coherence relations and
Lewenstein-Sanpera bounds, backed by the C++ library."""

from ._cohlab import *  # noqa: F401,F403
from ._cohlab import CohlabError

__all__ = [name for name in dir() if not name.startswith("_")]
