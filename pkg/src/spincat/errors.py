"""Exception types raised across the package."""


class SpinCatError(ValueError):
    """Base class for invalid inputs to spincat routines."""


class DegenerateCatError(SpinCatError):
    """The odd cat state at unit overlap has no normalizable representative."""


class SchemeError(SpinCatError):
    """A splitting scheme does not fit the parent spin or the operation."""


class DensityMatrixError(SpinCatError):
    """A matrix fails the Hermitian / unit-trace / PSD checks."""


class RankError(DensityMatrixError):
    """A density matrix has higher rank than the routine supports."""


class ConvergenceWarning(RuntimeWarning):
    """Local refinement stopped before reaching its step floor."""
