"""Python bindings for the wordrel library."""

from ._wordrel import *  # noqa: F401,F403
from ._wordrel import CapExceeded, DomainError, ParseError, WordrelError

__all__ = [name for name in dir() if not name.startswith("_")]
