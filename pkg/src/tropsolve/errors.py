"""Exception hierarchy for tropsolve."""


class TropsolveError(Exception):
    """Base class for all library errors."""


class KindMismatch(TropsolveError, TypeError):
    """Operands (or file tokens) belong to different semiring kinds."""


class MagnitudeOverflow(TropsolveError, OverflowError):
    """A magnitude left the representable integer range."""


class BalancedOrZeroHasNoSign(TropsolveError, ValueError):
    pass


class ShapeMismatch(TropsolveError, ValueError):
    pass


class NotSquare(TropsolveError, ValueError):
    pass


class UnreducedSystem(TropsolveError, ValueError):
    """The system still has a zero right-hand side entry or an all-zero column."""


class EmptyAfterReduction(TropsolveError):
    """Every equation was removed by reduction; the system is trivially solvable.

    The reduction trace is attached so callers can still report which
    variables were forced to zero and which are free.
    """

    def __init__(self, trace):
        super().__init__("all equations removed by reduction")
        self.trace = trace


class NotACover(TropsolveError, ValueError):
    pass


class GridTooLarge(TropsolveError, ValueError):
    pass


class RightHandSideNotSigned(TropsolveError, ValueError):
    pass


class ParseError(TropsolveError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
