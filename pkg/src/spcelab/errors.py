"""Exception types shared across the package."""


class SpcelabError(Exception):
    """Base class for all errors raised by spcelab."""


class InvalidSpecError(SpcelabError, ValueError):
    """A model specification, distribution, or matrix violates its invariants."""


class UndefinedEstimateError(SpcelabError, ValueError):
    """An estimator was asked for a quantity the data cannot define (e.g. empty sample)."""


class ConfigError(SpcelabError, ValueError):
    """Experiment configuration failed validation.

    Carries the full list of field-level problems so callers can report
    all of them at once instead of one per run.
    """

    def __init__(self, errors):
        self.errors = list(errors)
        super().__init__("; ".join(self.errors))
