"""Radical-convexity classification and inequality verification."""

from ._radconvex import *  # noqa: F401,F403
from ._radconvex import __version__  # noqa: F401
