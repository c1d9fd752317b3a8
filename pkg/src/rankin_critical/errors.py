"""Exception hierarchy.

``DomainError`` covers inputs that are well formed but violate a mathematical
precondition (the CLI maps these to exit code 2); ``InputError`` covers
malformed input (exit code 1).
"""


class RankinCriticalError(Exception):
    pass


class InputError(RankinCriticalError, ValueError):
    """Malformed or inconsistent input data."""


class DomainError(RankinCriticalError, ValueError):
    """A mathematical precondition does not hold."""


class NonIntegralResult(DomainError):
    pass


class NotPure(DomainError):
    pass


class DegenerateIndexRange(DomainError):
    pass


class RankMismatch(DomainError):
    pass


class NotKostant(DomainError):
    pass


class OddDimension(DomainError):
    pass


class ShapeMismatch(DomainError):
    pass


class NotDisjoint(DomainError):
    pass


class MiddleHodgeType(DomainError):
    pass


class NotCritical(DomainError):
    pass


class NotOddOdd(DomainError):
    pass


class TooLarge(DomainError):
    pass
