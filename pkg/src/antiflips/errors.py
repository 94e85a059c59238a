"""Exception hierarchy.

``DomainError`` subclasses signal invalid or out-of-range input and map to
CLI exit code 2.  ``InternalInvariantError`` signals a broken internal
consistency check (a bug, not a user error) and maps to exit code 1.
"""


class DomainError(ValueError):
    """Invalid input for the requested computation."""


class InvalidInput(DomainError):
    pass


class DegenerateChain(DomainError):
    """Continued-fraction evaluation hit a zero denominator."""


class NoSolution(DomainError):
    """The linear congruence has no solution."""


class NotWellFormed(DomainError):
    """Group action weights are not coprime to the order."""


class SmoothPoint(DomainError):
    """The germ is smooth; there is no resolution data to compute."""


class NotIsolatedAction(DomainError):
    """The action fixes a divisor, so the quotient must be reduced first."""


class NotONCForm(DomainError):
    """The weights do not have the orbifold-normal-crossing shape."""


class NotDelta2(DomainError):
    pass


class DeltaTooSmall(DomainError):
    pass


class ExcludedCase(DomainError):
    """The degree-4 cone, which sits outside the two-to-one correspondence."""


class InvalidFP(DomainError):
    pass


class NoTermination(DomainError):
    """The index sequence never became non-positive within the safety bound."""


class InternalInvariantError(RuntimeError):
    """A consistency identity that must hold for valid inputs failed."""


class NonIntegralA1(InternalInvariantError):
    """The derived first weight of the initial neighbourhood is not an integer."""
