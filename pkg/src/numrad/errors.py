"""Exception types shared across the package.

ValueError is reserved for a single malformed argument (bad shape, NaN
entries, out-of-range scalar); the classes below flag conditions that
depend on the mathematical content of the inputs or on identifiers.
"""


class DimensionMismatchError(ValueError):
    """Operands have incompatible dimensions."""


class NotHermitianError(ValueError):
    """Matrix is not Hermitian within tolerance."""


class NotPSDError(ValueError):
    """Matrix is not positive semidefinite within tolerance."""


class NotUnitVectorError(ValueError):
    """Vector is required to have unit norm and does not."""


class NoConvergenceError(RuntimeError):
    """The eigensolver failed to converge or produced an inaccurate result."""


class NegativeCoefficientError(ValueError):
    """Quadratic certificate coefficients must be non-negative."""


class UnknownBoundError(KeyError):
    """Bound identifier is not in the catalog."""


class UnknownChainError(KeyError):
    """Chain identifier is not in the catalog."""


class UnknownFunctionError(KeyError):
    """Function identifier is not in the convex-function registry."""


class InvalidConfigError(ValueError):
    """Ensemble configuration is malformed."""
