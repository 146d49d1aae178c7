"""Exception types shared across the package."""


class NotHermitian(ValueError):
    """Matrix fails the Hermiticity check."""


class DimensionMismatch(ValueError):
    """Operands have incompatible shapes or subsystem dimensions."""


class OutOfRange(ValueError):
    """Parameter outside its admissible interval."""


class NotNormalized(ValueError):
    """State-vector amplitudes do not square-sum to one."""


class CompletenessViolation(RuntimeError):
    """Kraus operators do not resolve the identity."""


class AlphaOutOfDomain(ValueError):
    """Renyi order outside (0, 1) | (1, inf)."""


class SumMismatch(ValueError):
    """Vectors compared under majorization have different totals."""


class NoSignChange(ValueError):
    """Bisection bracket does not straddle the target."""
