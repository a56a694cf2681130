"""Exception hierarchy for polyfoci.

Every error raised by the engine derives from ``PolyfociError``, which is a
``ValueError`` so callers that only know about bad arguments still catch it.
"""

from __future__ import annotations


class PolyfociError(ValueError):
    """Base class for all polyfoci errors."""


class DegreeError(PolyfociError):
    """Polynomial degree does not satisfy an operation's precondition.

    Example:
        >>> find_roots(ComplexPolynomial([7]))
        DegreeError: no roots of a nonzero constant
    """


class DegenerateError(PolyfociError):
    """Input sits on a degenerate configuration (segment, rank-1 map, ...)."""


class ConvexityError(PolyfociError):
    """Polygon is not convex and counterclockwise."""


class DomainError(PolyfociError):
    """Argument outside the domain of an operation (non-finite, wrong size, ...)."""


__all__ = [
    "PolyfociError",
    "DegreeError",
    "DegenerateError",
    "ConvexityError",
    "DomainError",
]
