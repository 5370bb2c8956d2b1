"""Exception hierarchy shared by every module of the package."""


class EEWTError(Exception):
    """Base class for all errors raised by eewt."""


class UsageError(EEWTError):
    """Invalid parameters or configuration (CLI exit code 1)."""


class DataError(EEWTError):
    """Input data that cannot be processed (CLI exit code 2)."""


# galois
class ReducibleModulus(UsageError):
    pass


class UnsupportedSize(UsageError):
    pass


class DivisionByZero(DataError, ZeroDivisionError):
    pass


class FieldMismatch(DataError):
    pass


# matrix
class NoSolution(DataError):
    pass


# codes
class DuplicatePoints(UsageError):
    pass


class ZeroPointWithShift(UsageError):
    pass


class InvalidDimension(UsageError):
    pass


class RankDeficient(UsageError):
    pass


class ExhaustiveTooLarge(UsageError):
    def __init__(self, message, count=None):
        super().__init__(message)
        self.count = count


# wiretap
class InvalidParams(UsageError):
    pass


class CapacityViolation(UsageError):
    pass


class IntersectionNotTrivial(UsageError):
    pass


class BadDimensions(UsageError):
    pass


class LengthMismatch(DataError):
    pass


class Inconsistent(DataError):
    """The observation is not the restriction of any codeword."""


class AmbiguousSecret(DataError):
    """More than one secret is consistent with the observation."""

    def __init__(self, message, gap):
        super().__init__(message)
        self.gap = gap


# analysis
class TooLargeToEnumerate(UsageError):
    pass


class NonUniformPosterior(EEWTError):
    pass


# storage
class UnsupportedField(UsageError):
    pass


class HeaderMismatch(DataError):
    pass


class InsufficientShares(DataError):
    def __init__(self, message, needed):
        super().__init__(message)
        self.needed = needed


class CorruptShare(DataError):
    pass
