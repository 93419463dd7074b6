"""Exception hierarchy shared by all divrank modules."""


class DivrankError(Exception):
    """Base class for all errors raised by this package."""


# field construction / tower errors
class NotPrime(DivrankError):
    pass


class NotMonic(DivrankError):
    pass


class NotIrreducible(DivrankError):
    pass


class FieldMismatch(DivrankError):
    pass


class BadSubfieldSize(DivrankError):
    pass


# linear algebra errors
class AmbientMismatch(DivrankError):
    pass


class NotABasis(DivrankError):
    pass


class NotInvertible(DivrankError):
    pass


class BadDivisor(DivrankError):
    pass


class ArityMismatch(DivrankError):
    pass


# code-level errors
class TooLarge(DivrankError):
    pass


class ZeroCode(DivrankError):
    pass


class NotSquare(DivrankError):
    pass


class SearchSpaceTooLarge(DivrankError):
    pass


class DegenerateCode(DivrankError):
    pass


class ZeroVector(DivrankError):
    pass


class DegenerateForm(DivrankError):
    pass


class TooFewPoints(DivrankError):
    pass


class TheoremViolation(DivrankError):
    """A numerically checked classification failed on a concrete instance.

    This is never expected; it signals a bug in this package, not bad input.
    """


# recognition errors
class NoInvertibleElement(DivrankError):
    pass


class WrongDimension(DivrankError):
    pass


class CommonKernelNonzero(DivrankError):
    pass


class SearchBudgetExceeded(DivrankError):
    pass


class NotFqmLinear(DivrankError):
    pass


class ConjugationFailed(DivrankError):
    pass


class BadParams(DivrankError):
    pass
