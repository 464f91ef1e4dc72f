"""Harmonic analysis on rank-one symmetric spaces."""

from ._symspace import *  # noqa: F401,F403
from ._symspace import __version__  # noqa: F401
