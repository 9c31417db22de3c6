"""Exception types raised by the spectral pipeline."""


class ManakovError(Exception):
    """Base class for all package errors."""


class NonFiniteError(ManakovError):
    """Integration state overflowed (Im lambda too large for the step budget)."""


class ContourTooCloseError(ManakovError):
    """A zero (or an identically vanishing function) sits too close to a contour."""


class NonIntegerWindingError(ManakovError):
    """Winding-number quadrature did not settle near an integer."""


class CountMismatchError(ManakovError):
    """Polished roots (with multiplicity) disagree with the contour count."""


class InsufficientCoverageError(ManakovError):
    """Eigenvalue lists do not reach far enough for the requested evaluation."""


class BranchAmbiguityError(ManakovError):
    """Two arccos determinations are equidistant; branch cannot be fixed."""


class LabelingFailureError(ManakovError):
    """Multiplier labels on a gap are inconsistent (no clean unimodular/reciprocal split)."""


class IllConditionedFitError(ManakovError):
    """Least-squares design matrix for the moment fit is numerically singular."""


class ConfigError(ManakovError):
    """Malformed run configuration or potential spec file."""
