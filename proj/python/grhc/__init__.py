"""Ramsey and Gallai-Ramsey witnesses for complete hypergraphs."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
