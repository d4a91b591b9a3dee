"""Exception hierarchy for the sine-Gordon toolkit."""


class SineGordonError(Exception):
    """Base class for all errors raised by this package."""


class OnConeError(SineGordonError):
    """Evaluation requested exactly on the null cone |t| = |x|.

    All distributions here are evaluated pointwise away from the cone;
    the cone itself is a null set for every integral we perform.
    """


class DomainError(SineGordonError):
    """Argument outside the mathematical domain of an operation."""


class SuperrenormalizableError(DomainError):
    """Coupling in the window 1 <= beta < 2: finite-regime machinery only."""


class CoincidentPointError(SineGordonError):
    """Two light-cone coordinates coincide; the algebraic identity degenerates."""


class ShapeError(SineGordonError):
    """Array / matrix dimensions incompatible with the requested operation."""


class LengthMismatchError(SineGordonError):
    """Charge list and point list have different lengths."""


class EqualTimesError(SineGordonError):
    """Time-ordering requested for points with equal time coordinates."""


class QuadratureFailure(SineGordonError):
    """Deterministic quadrature did not reach the requested tolerance."""


class SingularHitBudgetExceeded(SineGordonError):
    """Monte Carlo resampled more than the allowed fraction of cone hits."""


class VarianceBlowup(SineGordonError):
    """Monte Carlo standard error exceeds 25% of the estimate's modulus."""


class FieldModeError(SineGordonError):
    """Interacting field Phi(f) requested in the singular mass-limit state."""


class ConfigError(SineGordonError):
    """Run configuration invalid; message names the offending key."""
