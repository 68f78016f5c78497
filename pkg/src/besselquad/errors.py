"""Exception types shared across the package."""


class BesselQuadError(Exception):
    """Base class for all besselquad errors."""


class DomainError(BesselQuadError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class NearDegenerateError(BesselQuadError):
    """Scale factors too close for the analytic path to be trustworthy.

    Raised when |alpha - beta| falls below the degeneracy guard and the
    affected trigonometric terms have no series representation.  Callers
    evaluating definite integrals should fall back to quadrature.
    """


class QuadratureRecommendedError(BesselQuadError):
    """The analytic path would evaluate a trigonometric primitive in its
    hazardous small-argument regime (exponent below -1 near zero), where
    no reliable expansion is available.  Use quadrature instead."""


class NotConvergedError(BesselQuadError):
    """Adaptive quadrature could not reach the requested tolerance."""

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result
