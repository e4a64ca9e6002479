"""Exception hierarchy shared by all pairbox modules.

Two families matter for callers: :class:`InputError` (bad parameters or
malformed data, CLI exit code 2, HTTP 422) and :class:`NumericsError`
(a computation that started from valid input failed to converge, CLI exit
code 3, HTTP 500).
"""


class PairboxError(Exception):
    """Base class for all pairbox errors."""


class InputError(PairboxError):
    """Invalid parameters, configuration, or state passed by the caller."""


class NumericsError(PairboxError):
    """A numerical procedure failed despite valid input."""


class InvalidMatrix(InputError):
    """Tridiagonal matrix violates its structural invariants."""


class InvalidParams(InputError):
    """Model parameters violate their invariants."""


class DimensionMismatch(InputError):
    """A state vector has the wrong length for the given parameters."""


class InvalidConfig(InputError):
    """Condensate configuration with a negative square-root argument."""


class InvalidAmps(InputError):
    """Single-particle amplitudes are not normalized or not nonnegative."""


class SizeLimit(InputError):
    """Requested dense output exceeds the supported size."""


class ConvergenceFailure(NumericsError):
    """Eigenvalue iteration exceeded its iteration budget."""


class TruncationFailure(NumericsError):
    """Charge-basis truncation did not converge within the schedule."""
