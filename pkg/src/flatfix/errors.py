"""Exceptions raised by flatfix.

Every error derives from a builtin (ValueError, KeyError, RuntimeError) so
plain ``except ValueError`` keeps working, and from :class:`FlatfixError` so
the command line can tell library failures apart from bugs.
"""


class FlatfixError(Exception):
    """Marker base for every error raised on purpose by this package."""


class FormulaSyntaxError(FlatfixError, ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = f" at line {line}, column {column}" if line is not None and line > 0 else ""
        super().__init__(f"{message}{where}")


class UnknownConnectiveError(FlatfixError, ValueError):
    pass


class ArityError(FlatfixError, ValueError):
    pass


class SignatureError(FlatfixError, ValueError):
    pass


class FragmentError(FlatfixError, ValueError):
    """Input lies outside the grammar an operation expects."""


class UnguardedError(FragmentError):
    pass


class UnassignedVariableError(FlatfixError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unassigned variable"


class NonMonotoneError(FlatfixError, RuntimeError):
    pass


class IterationBoundError(FlatfixError, RuntimeError):
    pass


class BudgetExceededError(FlatfixError, RuntimeError):
    pass
