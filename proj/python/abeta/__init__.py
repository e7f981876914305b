"""Coefficient bounds for the class A_beta and a numerical verifier for them."""

from ._core import *  # noqa: F401,F403
from ._core import run_cli, format_number  # noqa: F401

__all__ = [name for name in dir() if not name.startswith("_")]
