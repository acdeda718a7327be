"""Exception hierarchy shared by every module."""


class Mink4Error(Exception):
    """Base class for all package errors."""


class DomainError(Mink4Error, ValueError):
    """A point or parameter falls outside the validity domain of a formula."""


class BadFamilyParams(DomainError):
    """Family parameters (or the evaluation point) violate a family constraint."""


class QuadNonConvergence(Mink4Error):
    """Adaptive quadrature hit its subdivision cap before reaching tolerance."""

    def __init__(self, message, estimate, error_bound):
        super().__init__(message)
        self.estimate = estimate
        self.error_bound = error_bound


class SingularFrame(Mink4Error):
    """The coordinate frame Gram matrix is too ill-conditioned to invert."""


class DegenerateMetric(Mink4Error):
    """The induced metric determinant is numerically zero."""


class ConsistencyError(Mink4Error):
    """Two independent evaluations of the same quantity disagree."""


class UnsupportedK(Mink4Error, ValueError):
    """The requested operator index k is not implemented."""


class ConventionMismatch(Mink4Error):
    """The configured Newton-transformation sign convention fails calibration."""


class CaseMismatch(Mink4Error, ValueError):
    """The surface does not belong to the requested special family."""


class IndeterminateDecomposition(Mink4Error):
    """The (m, n, C) system is degenerate at this point (harmonic case)."""


class InsufficientSamples(Mink4Error, ValueError):
    """Too few (or too clustered) sample points for a classification."""
