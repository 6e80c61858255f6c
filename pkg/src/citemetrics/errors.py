"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Input data violates a documented invariant."""


class UndefinedRatioError(ZeroDivisionError):
    """A ratio has an empty denominator, e.g. the impact factor of a venue
    with no papers. Callers get this exception, never a sentinel value."""


class IngestError(ValueError):
    """Raised by parsers after a full pass over the input.

    Carries every violation found (one string per issue, with line
    numbers) so a dataset can be cleaned up in a single round.
    """

    def __init__(self, issues):
        self.issues = list(issues)
        super().__init__("\n".join(self.issues))
