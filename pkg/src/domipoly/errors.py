"""Exception hierarchy shared by every module of the package."""


class DomipolyError(Exception):
    """Base class for all errors raised by domipoly."""


class InvalidVertexError(DomipolyError, IndexError):
    """A vertex index is outside ``0..n-1``."""


class CapacityError(DomipolyError, ValueError):
    """A graph or polynomial exceeds a hard or configured size bound."""


class SpecDomainError(DomipolyError, ValueError):
    """A family parameter set lies outside the family's definition."""


class InvalidScriptError(DomipolyError, ValueError):
    """A k-tree attachment script names something other than a k-clique."""


class UndefinedDegreeError(DomipolyError, ValueError):
    """Degree queries on the zero polynomial."""


class GraphFormatError(DomipolyError, ValueError):
    """Malformed graph text file."""


class ConvergenceError(DomipolyError, RuntimeError):
    """Root iteration hit its cap before every root met the tolerance.

    The partially converged estimates are kept on ``partial`` so callers
    can inspect them.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
