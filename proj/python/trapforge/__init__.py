"""Planar electron-ion ring-trap design toolkit."""

from trapforge._core import *  # noqa: F401,F403
from trapforge._core import __version__  # noqa: F401
