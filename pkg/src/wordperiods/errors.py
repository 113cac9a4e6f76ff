"""Exception types raised across the package."""


class InvalidArgument(ValueError):
    """An argument violates an operation's precondition."""


class ResourceLimit(InvalidArgument):
    """Requested enumeration exceeds the configured size cap."""


class WalkStalled(RuntimeError):
    """The greedy stockpile walk could not move although stockpiles remain.

    Carries the partial trace so the failing schedule can be inspected.
    """

    def __init__(self, message, trace):
        super().__init__(message)
        self.trace = trace


class ConstructionImpossible(RuntimeError):
    """No fill word exists for ``u`` and ``m``, even by exhaustive search."""

    def __init__(self, u, m):
        super().__init__(f"no fill of length {m} exists for u={u}")
        self.u = u
        self.m = m


class ConstructionMismatch(RuntimeError):
    """A recursion step produced a word whose period set is not the expected one."""

    def __init__(self, h, w_h, w_prev, expected, actual):
        super().__init__(
            f"step h={h}: w_h={w_h} gave w_(h-1)={w_prev} with periods {actual}, expected {expected}"
        )
        self.h = h
        self.w_h = w_h
        self.w_prev = w_prev
        self.expected = expected
        self.actual = actual
