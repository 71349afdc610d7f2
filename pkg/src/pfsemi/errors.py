"""Exception types raised by pfsemi."""


class PFSemiError(ValueError):
    """Base class for invalid-input errors."""


class EmptyInput(PFSemiError):
    pass


class GcdNotOne(PFSemiError):
    pass


class NoPositiveElement(PFSemiError):
    pass


class NotAGapSet(PFSemiError):
    pass


class InvalidPF(PFSemiError):
    pass


class BoundExceeded(PFSemiError):
    pass


class TimeBudgetExceeded(RuntimeError):
    """Raised when a search runs past its deadline.

    ``partial`` holds whatever was found before the abort.
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial
