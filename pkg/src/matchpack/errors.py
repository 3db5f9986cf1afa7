"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class MatchpackError(Exception):
    """Base class for all errors raised by matchpack."""


class GraphError(MatchpackError, ValueError):
    pass


class LoopEdge(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class IndexOutOfRange(GraphError, IndexError):
    pass


class OddOrder(MatchpackError, ValueError):
    pass


class ParseError(MatchpackError, ValueError):
    pass


class HasPerfectMatching(MatchpackError):
    pass


class ResidualHasPerfectMatching(HasPerfectMatching):
    pass


class PreconditionViolated(MatchpackError, ValueError):
    """An input does not satisfy the hypotheses of the requested operation.

    ``which`` names the failed condition so callers can report it.
    """

    def __init__(self, which: str, detail: str = ""):
        self.which = which
        self.detail = detail
        super().__init__(f"{which}: {detail}" if detail else which)


class InternalContradiction(MatchpackError, RuntimeError):
    """A search failed although its preconditions guarantee success."""


class SearchExhausted(MatchpackError, RuntimeError):
    pass


class OddCycle(MatchpackError, ValueError):
    pass


class ClaimViolated(MatchpackError, RuntimeError):
    """A structural claim the augmentation relies on did not hold at runtime."""

    def __init__(self, claim: str, detail: str = ""):
        self.claim = claim
        self.detail = detail
        super().__init__(f"{claim}: {detail}" if detail else claim)


class BadOrder(MatchpackError, ValueError):
    pass


class InfeasibleDegree(MatchpackError, ValueError):
    pass


class CapExceeded(MatchpackError, RuntimeError):
    pass


class Cancelled(MatchpackError, RuntimeError):
    pass


class TargetUnreachable(MatchpackError):
    """The exact search proved that the requested family size is impossible.

    The best (maximum) result is attached as ``result``.
    """

    def __init__(self, message: str, result=None):
        super().__init__(message)
        self.result = result


class BudgetExhausted(MatchpackError):
    """Heuristic strategies gave up; ``result`` holds the best family found."""

    def __init__(self, message: str, result=None):
        super().__init__(message)
        self.result = result
