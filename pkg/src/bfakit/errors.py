"""Exception hierarchy shared across the package."""


class AutomatonError(ValueError):
    """Malformed automaton or invalid argument."""


class UnknownSymbolError(AutomatonError):
    def __init__(self, symbol, alphabet):
        super().__init__(f"symbol {symbol!r} not in alphabet {','.join(alphabet)}")
        self.symbol = symbol


class PreconditionError(AutomatonError):
    """Input violates a conversion or operation precondition."""


class BoundCheckError(RuntimeError):
    """A construction produced a size that contradicts its proven bound.

    This signals a bug, never a user error.
    """


class CapExceededError(AutomatonError):
    """An exploration or enumeration would exceed a configured cap."""
