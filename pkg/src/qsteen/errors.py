"""Exception types raised by the engine."""


class QSteenError(Exception):
    """Base class for all engine errors."""


class ExponentOverflow(QSteenError):
    """A T-exponent left the configured guard interval."""


class NotMonomial(QSteenError):
    """A single-monomial scalar was required."""


class NoMonomialPivot(QSteenError):
    """Elimination found a nonzero column with no T-monomial entry to pivot on."""


class RingMismatch(QSteenError):
    pass


class ExponentRange(QSteenError):
    pass


class UnsupportedTwist(QSteenError):
    """The operation only has closed forms for the twist k = 1."""


class NegativeHExponent(QSteenError):
    pass


class NotInvertibleConstantTerm(QSteenError):
    pass


class NotInBasis(QSteenError):
    pass


class InconsistentSystem(QSteenError):
    pass


class DimensionMismatch(QSteenError):
    pass


class UnsupportedClass(QSteenError):
    pass


class ConfigError(QSteenError):
    """Invalid job configuration; ``errors`` maps field name to message."""

    def __init__(self, errors):
        self.errors = dict(errors)
        msg = "; ".join(f"{k}: {v}" for k, v in sorted(self.errors.items()))
        super().__init__(msg)


class CacheIOWarning(UserWarning):
    """The result cache could not be read or written; the result was computed directly."""
