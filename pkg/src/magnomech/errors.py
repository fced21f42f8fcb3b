"""Exception hierarchy shared across the package."""


class MagnomechError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(MagnomechError, ValueError):
    """An argument is outside the mathematical domain of an operation."""


class ConfigError(MagnomechError, ValueError):
    """A configuration file or parameter set is invalid."""


class SingularConfigurationError(MagnomechError):
    """A steady-state denominator vanished for the given parameters."""


class ConvergenceError(MagnomechError):
    """An iterative solver failed to converge.

    The last iterate is attached as ``last`` so callers can inspect it.
    """

    def __init__(self, message, last=None):
        super().__init__(message)
        self.last = last


class OracleError(MagnomechError):
    """A test-only oracle computation failed."""


class StabilityError(MagnomechError):
    """The drift matrix is not Hurwitz stable; no steady state exists."""


class NumericalError(MagnomechError):
    """A linear-algebra routine failed or produced an untrustworthy result."""


class AccuracyError(MagnomechError):
    """A requested tolerance cannot be met within the given limits."""
