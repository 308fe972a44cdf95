"""Exception hierarchy shared by all modules.

DomainError covers well-formed requests whose answer does not exist
(exit code 2 in the CLI); PrecisionExhausted means an interval value
ran out of refinement budget before the question could be settled
(exit code 3); ParseError is malformed input (exit code 1).
"""


class CFGroupsError(Exception):
    pass


class ParseError(CFGroupsError, ValueError):
    pass


class DomainError(CFGroupsError):
    pass


class PrecisionExhausted(CFGroupsError):
    """An interval real could not be refined enough to answer exactly."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial  # partial result reached before exhaustion


# realnum
class ZeroDenominator(DomainError):
    pass


class NegativeRadicand(DomainError):
    pass


# regular_cf
class PoleAtInput(DomainError):
    pass


class NotFactorable(DomainError):
    pass


class NotEnoughDigits(DomainError):
    pass


# jacobi_perron
class DegenerateStep(DomainError):
    """theta_1 was an exact integer: the expansion terminates here."""


class DimensionMismatch(DomainError):
    pass


class NotEnoughSteps(DomainError):
    pass


class ZeroLeadingEntry(DomainError):
    pass


# modular_group
class NotUnimodular(DomainError):
    pass


class EllipticInput(DomainError):
    pass


class IdentityInput(DomainError):
    pass


class NotHyperbolic(DomainError):
    pass


# dimension_group
class RankMismatch(DomainError):
    pass


class ZeroLeading(DomainError):
    pass


class NonPositiveUnit(DomainError):
    pass


class OutOfRange(DomainError):
    pass
