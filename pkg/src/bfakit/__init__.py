"""Boolean and alternating finite automata: models, conversions, operations and state-complexity checks."""

from .boolfn import BooleanFunction, classify, parse_expr, print_expr, substitute
from .complexity import asc_lower, bounds_report, bsc_lower, check_singletons
from .convert import (
    bfa_reverse_dfa,
    bfa_to_afa,
    bfa_to_dfa,
    bfa_to_mnfa,
    determinize,
    dfa_to_afa_of_reverse,
    dfa_to_bfa_of_reverse,
    mnfa_to_bfa,
    mnfa_to_nfa,
)
from .errors import AutomatonError, BoundCheckError, CapExceededError, PreconditionError, UnknownSymbolError
from .fileformat import FormatError, parse_automaton, print_automaton
from .machines import Bfa, Dfa, Mnfa, accepts, classify_machine, state_count
from .oracle import equivalent, minimize
from .ops import Model, Operation, apply, table1_size

__version__ = "0.1.0"
