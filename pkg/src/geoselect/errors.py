"""Semantic exception hierarchy for geoselect.

Violations of *data* invariants (general position reports, bound checks) are
returned as values, never raised; these exceptions mark contract breaches.
"""


class GeoSelectError(Exception):
    """Base class for all geoselect errors."""


class DimensionMismatch(GeoSelectError):
    """Object family or operation not applicable to the point set's dimension."""


class CoordinateTie(GeoSelectError):
    """A query point lies on a grid line through another point of the set."""


class CapExceeded(GeoSelectError):
    """Input size exceeds the configured cap for an expensive search."""


class CertificationFailed(GeoSelectError):
    """Centerpoint search exhausted its retry budget without an exact certificate."""


class NotSymmetric(GeoSelectError):
    """Point set is not centrally symmetric about the origin as required."""


class NotFound(GeoSelectError):
    """A constructive search failed where existence is guaranteed (input corruption)."""


class InvalidSpec(GeoSelectError):
    """Construction spec violates its invariants."""


class InvalidRange(GeoSelectError):
    """Parameter outside the validity range of a construction."""


class MTooLarge(GeoSelectError):
    """Requested subset size exceeds the number of available induced objects."""


class RetryExhausted(GeoSelectError):
    """Rejection sampling failed to reach general position within its budget."""
