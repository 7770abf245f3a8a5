"""Exact top intersection numbers of psi-classes on m-stable genus-one spaces.

The engine computes any level-m number from the 1/24 seed via string,
dilaton and reduction recursions with partition-indexed corrections; a
symbolic quotient-ring oracle and a built-in reference table keep it
honest.  Everything is exact rational arithmetic.
"""

from .core import (
    IntersectionSymbol,
    TauWord,
    canonicalize,
    symbol_to_tau,
    tau_to_symbol,
)
from .recursion import (
    MemoTable,
    PREFER_DILATON,
    PREFER_STRING,
    Strategy,
    compute,
    dilaton_step,
    error_sum,
    initial_condition,
    reduce_step,
    string_step,
    via_reduction,
)
from .tau_text import format_tau_word, parse_tau_word

__version__ = "0.1.0"

__all__ = [
    "IntersectionSymbol",
    "TauWord",
    "canonicalize",
    "symbol_to_tau",
    "tau_to_symbol",
    "MemoTable",
    "PREFER_DILATON",
    "PREFER_STRING",
    "Strategy",
    "compute",
    "dilaton_step",
    "error_sum",
    "initial_condition",
    "reduce_step",
    "string_step",
    "via_reduction",
    "format_tau_word",
    "parse_tau_word",
    "__version__",
]
