"""Exception hierarchy for admeans."""


class AdMeansError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(AdMeansError, ValueError):
    pass


class NotHermitian(AdMeansError, ValueError):
    pass


class NotPSD(AdMeansError, ValueError):
    pass


class NotPD(NotPSD):
    pass


class Singular(AdMeansError, ValueError):
    pass


class SingularBlock(Singular):
    """The (2,2) block of a partitioned matrix is (numerically) singular."""


class NotAccretiveDissipative(AdMeansError, ValueError):
    pass


# short alias used throughout the docs
NotAD = NotAccretiveDissipative


class ConvergenceFailure(AdMeansError, ArithmeticError):
    pass


class SqrtNotInCone(AdMeansError, ArithmeticError):
    """A computed square root failed the accretive-dissipative membership test."""


class HypothesisFail(AdMeansError, ValueError):
    """The hypotheses of a closed-form result do not hold for the given input."""


class UnknownSuite(AdMeansError, KeyError):
    pass
