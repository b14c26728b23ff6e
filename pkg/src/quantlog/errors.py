"""Exception hierarchy.

Every error raised for a violated input precondition derives from
:class:`PreconditionError`; the CLI maps those to exit code 2.
"""


class QuantlogError(Exception):
    """Base class for all package errors."""


class PreconditionError(QuantlogError, ValueError):
    """An input violates an operation's precondition."""


class SingularMatrix(PreconditionError):
    pass


class NotHermitian(PreconditionError):
    pass


class EigOnNegativeRealAxis(PreconditionError):
    pass


class IllConditionedEigenbasis(PreconditionError):
    pass


class UnsupportedOrder(PreconditionError):
    pass


class DomainError(PreconditionError):
    pass


class NotInUnitBall(PreconditionError):
    """Raised when ||A - I|| >= 1."""


class NearSingularShift(PreconditionError):
    pass


class ZeroImage(PreconditionError):
    """log(A)|b> vanishes, so the target state is undefined."""


class EpsilonOutOfRange(PreconditionError):
    pass


class AlphaTooSmall(PreconditionError):
    pass


class NotUnitary(PreconditionError):
    pass


class DimensionMismatch(PreconditionError):
    pass


class WrongStage(QuantlogError):
    """A pipeline step was applied to a state at the wrong stage."""


class ZeroProbability(QuantlogError):
    pass


class IndexOutOfRange(PreconditionError, IndexError):
    pass


class NoSuchNonzero(PreconditionError, LookupError):
    pass
