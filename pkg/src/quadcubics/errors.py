"""Exception hierarchy.

Refusals carry a short machine-readable ``reason`` so the CLI can report
them without parsing messages.
"""


class QuadCubicsError(Exception):
    pass


class DomainError(QuadCubicsError, ValueError):
    """An argument lies outside the domain of the operation."""


class NonGenericWeightsError(DomainError):
    """A localization denominator vanishes for the chosen weights."""


class RefusalError(QuadCubicsError):
    reason = "refused"

    def __init__(self, message, reason=None):
        super().__init__(message)
        if reason is not None:
            self.reason = reason


class RankMismatchError(RefusalError):
    reason = "rank/dimension mismatch"


class NotOrientableError(RefusalError):
    reason = "not relatively orientable"


class VanishingError(RefusalError):
    reason = "even degree: Euler class vanishes, count 0"


class UnsupportedDegreeError(RefusalError):
    reason = "unsupported degree"


class ConsistencyError(QuadCubicsError):
    """Internal consistency failure: non-integral total or disagreeing samples."""
