"""Pure Nash equilibria of public goods games on graphs with finite best-response patterns."""

from .core import (
    Graph,
    ParseError,
    Pattern,
    PggError,
    PggInstance,
    is_ntpne,
    is_pne,
)
from .reductions import classify
from .solve import solve_ntpne

__all__ = ["Graph", "ParseError", "Pattern", "PggError", "PggInstance",
           "classify", "is_ntpne", "is_pne", "solve_ntpne"]
__version__ = "0.1.0"
