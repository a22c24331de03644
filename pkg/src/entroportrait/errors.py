"""Exception hierarchy.

Every error raised by the package derives from :class:`EntroportraitError`
so callers (notably the CLI) can catch one type.
"""


class EntroportraitError(ValueError):
    pass


class NotSquare(EntroportraitError):
    pass


class NotHermitian(EntroportraitError):
    pass


class TraceNotOne(EntroportraitError):
    pass


class NotPositive(EntroportraitError):
    def __init__(self, message, eigenvalue=None):
        super().__init__(message)
        self.eigenvalue = eigenvalue


class NotNormalized(EntroportraitError):
    pass


class NegativeComponent(EntroportraitError):
    def __init__(self, message, index=None, value=None):
        super().__init__(message)
        self.index = index
        self.value = value


class TooShort(EntroportraitError):
    pass


class TooSmall(EntroportraitError):
    pass


class NotAPermutation(EntroportraitError):
    pass


class ZeroTotal(EntroportraitError):
    pass


class LengthMismatch(EntroportraitError):
    pass


class DimensionMismatch(EntroportraitError):
    pass


class BadFactorization(EntroportraitError):
    pass


class TooLargeForExhaustive(EntroportraitError):
    pass


class BadRank(EntroportraitError):
    pass


class ZeroDenominator(EntroportraitError):
    pass


class ZeroColumn(ZeroDenominator):
    pass


class ZeroProbabilityBlock(ZeroDenominator):
    pass


class ParseError(EntroportraitError):
    pass


class UsageError(EntroportraitError):
    pass
