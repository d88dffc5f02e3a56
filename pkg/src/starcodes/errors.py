"""Exception hierarchy shared by every module of the package."""


class CodingError(Exception):
    """Base class for all errors raised by starcodes."""


class NotPrime(CodingError, ValueError):
    pass


class ReduciblePolynomial(CodingError, ValueError):
    pass


class UnsupportedOrder(CodingError, ValueError):
    pass


class FieldMismatch(CodingError, ValueError):
    pass


class DivisionByZero(CodingError, ZeroDivisionError):
    pass


class LengthMismatch(CodingError, ValueError):
    pass


class EmptyList(CodingError, ValueError):
    pass


class InvalidParams(CodingError, ValueError):
    pass


class PreconditionViolated(CodingError):
    """An operation was called outside its documented domain."""


class DependentSeed(PreconditionViolated):
    pass


class ZeroCode(PreconditionViolated):
    pass


class ZeroProduct(PreconditionViolated):
    """The supports of the input codes have empty intersection."""


class SupportConditionViolated(PreconditionViolated):
    """Some coordinate lies in the support of more than one but not all codes."""


class TooLong(InvalidParams):
    pass


class DuplicatePoints(InvalidParams):
    pass


class BudgetExceeded(CodingError):
    """An exhaustive search would enumerate more objects than allowed.

    ``bracket`` optionally carries ``(lower, upper)`` known bounds on the
    quantity that could not be computed exactly.
    """

    def __init__(self, message, bracket=None):
        super().__init__(message)
        self.bracket = bracket


class CodeFormatError(CodingError, ValueError):
    """Malformed code file."""
