"""Finite-temperature Lifshitz-theory Casimir force computations."""
from ._casimir import *  # noqa: F401,F403
from ._casimir import __doc__  # noqa: F401
