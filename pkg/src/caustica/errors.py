"""Exception types shared across the package."""


class CausticaError(Exception):
    """Base class for all package-specific errors."""


class BackendMismatchError(CausticaError):
    """Operands use different scalar backends (exact vs. complex-float)."""


class NotInvertibleError(CausticaError):
    """A polynomial shares a root with the modulus and has no inverse mod it."""


class NonDistinctRootsError(CausticaError):
    """The modulus has a repeated root; coset/trace results are undefined."""


class NonConvergenceError(CausticaError):
    """Root polishing failed to reach the residual tolerance."""


class DegenerateLeadingCoefficientError(CausticaError):
    """Leading coefficient is too small relative to the other coefficients."""


class NotProportionalError(CausticaError):
    """Elimination resultant is not a constant multiple of the catalog polynomial."""


class IdentityFailureError(CausticaError):
    """An exact polynomial identity from the catalog failed to hold."""


class EquivalenceFailureError(CausticaError):
    """Gradient/induced-map equivalence check failed."""


class InconsistentSignError(CausticaError):
    """Jacobian/Hessian determinant sign is not constant across sample points."""


class GuardViolationError(CausticaError):
    """Parameter or source values violate a singularity's admissibility guard."""


class BackSubSingularError(CausticaError):
    """Back-substitution denominator vanishes (or nearly so) at a root."""


class NearCausticError(CausticaError):
    """Target point is too close to the caustic for reliable numerics."""


class ToleranceExceededError(CausticaError):
    """A computed magnification sum misses its tolerance bound."""


class InconsistentScanError(CausticaError):
    """Real-root counts changed between cells without a caustic crossing."""
