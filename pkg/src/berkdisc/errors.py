"""Exception hierarchy shared by every module of the package."""


class BerkdiscError(Exception):
    """Base class for all domain errors raised by berkdisc."""


class DivisionByZero(BerkdiscError, ZeroDivisionError):
    pass


class NegativeValuation(BerkdiscError, ValueError):
    pass


# polygon
class EmptyInput(BerkdiscError, ValueError):
    pass


class OutOfDomain(BerkdiscError, ValueError):
    pass


class NotInvertible(BerkdiscError, ValueError):
    pass


# disc morphisms
class InvalidMorphism(BerkdiscError, ValueError):
    """The polynomial does not define a finite self-map of the open unit disc."""


class NotCompatible(InvalidMorphism):
    pass


class NotFinite(InvalidMorphism):
    pass


class BoundaryZeros(InvalidMorphism):
    pass


class NotInDisc(BerkdiscError, ValueError):
    pass


class LambdaNotInValueGroup(BerkdiscError, ValueError):
    pass


# radiality
class NotWeaklyNRadial(BerkdiscError):
    pass


class ThetaIsZero(BerkdiscError):
    pass


class NotCertified(BerkdiscError):
    pass


# fibers
class InvalidFiber(BerkdiscError, ValueError):
    pass


class RootMismatch(InvalidFiber):
    pass


class WrongCount(InvalidFiber):
    pass


class RootOutsideDisc(InvalidFiber):
    pass


class BranchedFiber(InvalidFiber):
    """Repeated roots: the fiber lies over a branch point."""


class NotConverged(BerkdiscError):
    pass


class InvariantViolation(BerkdiscError, AssertionError):
    """A theorem-level identity failed; signals a bug or inconsistent input."""


# pushforward
class InconsistentCount(BerkdiscError, ValueError):
    pass


class NotRealizable(BerkdiscError, ValueError):
    pass


# reduction
class NotIntegral(BerkdiscError, ValueError):
    pass


class DegreeDrop(BerkdiscError, ValueError):
    pass


class ConstantInput(BerkdiscError, ValueError):
    pass


class UsageError(BerkdiscError):
    """Bad command line or malformed input file (exit code 2)."""


class MissingFibers(BerkdiscError, ValueError):
    """The operation needs more validated fibers than the input supplies."""
