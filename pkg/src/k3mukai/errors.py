"""Exception hierarchy shared by every module.

Anything derived from :class:`MukaiError` is a domain error: the CLI maps it
to exit code 1, as opposed to usage errors (exit code 2).
"""


class MukaiError(Exception):
    """Base class for domain errors."""


class InvalidGenus(MukaiError, ValueError):
    pass


class NotSpherical(MukaiError, ValueError):
    """A reflection was requested along a vector whose square is not -2."""


class InconsistentDimension(MukaiError, ValueError):
    pass


class AdmissibilityError(MukaiError, ValueError):
    """Family parameters violate ``g0 >= k(k+1)`` (equivalently ``v^2 >= 0``)."""

    def __init__(self, message, *, g0=None, k=None, v_squared=None):
        super().__init__(message)
        self.g0 = g0
        self.k = k
        self.v_squared = v_squared


class NotInvertible(MukaiError, ValueError):
    pass


class NoNontrivialSolution(MukaiError, ValueError):
    pass


class NotInComplement(MukaiError, ValueError):
    """A lattice vector is not orthogonal to the Mukai vector it was checked against."""
