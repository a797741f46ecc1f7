"""Weak endomorphisms of the finite directed path."""

from ._core import *  # noqa: F401,F403
from ._core import ParseError, Transformation, __doc__  # noqa: F401

__version__ = "0.1.0"
