"""Exception hierarchy shared by every module."""


class SeidelSkewError(Exception):
    """Base class for all domain errors raised by this package."""


class NotATournament(SeidelSkewError, ValueError):
    pass


class BadModulus(SeidelSkewError, ValueError):
    pass


class IndexOutOfRange(SeidelSkewError, IndexError):
    pass


class NotAlmostRegular(SeidelSkewError, ValueError):
    pass


class NotDoublyRegular(SeidelSkewError, ValueError):
    pass


class NotSkewHadamard(SeidelSkewError, ValueError):
    pass


class NormalizationFailed(SeidelSkewError, ArithmeticError):
    pass


class ImaginaryResidue(SeidelSkewError, ArithmeticError):
    """A coefficient that must vanish by skew-symmetry did not (internal bug)."""


class GroupingAmbiguous(SeidelSkewError, ArithmeticError):
    pass


class PoleAtSample(SeidelSkewError, ValueError):
    pass


class DimensionMismatch(SeidelSkewError, ValueError):
    pass


class TooLarge(SeidelSkewError, ValueError):
    pass


class CounterexampleFound(SeidelSkewError, AssertionError):
    pass


class ParseError(SeidelSkewError, ValueError):
    pass
