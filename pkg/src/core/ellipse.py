"""Ellipse geometry: foci, the confocal family with foci ±1, membership,
line tangency and normalization onto the unit circle."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple, Union

import numpy as np

from src.core.affine import invert
from src.errors import DegenerateError, DomainError
from src.models.geometry import AffineMap, ConfocalParameter, ConformalSimilarity, Ellipse
from src.models.polynomial import Number, as_complex

logger = logging.getLogger(__name__)

UnitCircleMap = Union[AffineMap, ConformalSimilarity]

_SEGMENT_TOL = 1e-9


def foci(ellipse: Ellipse) -> Tuple[complex, complex]:
    """center ± f e^{i rotation}; both equal the center for a circle."""
    offset = ellipse.focal_distance * ellipse.axis
    return (ellipse.center + offset, ellipse.center - offset)


def eccentricity(ellipse: Ellipse) -> float:
    return ellipse.eccentricity


def confocal_member(s: Union[ConfocalParameter, float]) -> Ellipse:
    """cosh s cos t + i sinh s sin t; foci ±1, eccentricity sech s.

    Raises:
        DegenerateError: If s <= 0 (the segment [-1, 1])
    """
    param = s if isinstance(s, ConfocalParameter) else ConfocalParameter(s)
    return Ellipse(0j, math.cosh(param.s), math.sinh(param.s), 0.0)


def confocal_through_point(z: Number) -> ConfocalParameter:
    """The member of the family passing through z, from cosh s = (|z-1| + |z+1|)/2.

    Raises:
        DegenerateError: If z lies within 1e-9 of the segment [-1, 1]
    """
    z = as_complex(z)
    nearest = min(max(z.real, -1.0), 1.0)
    if abs(z - nearest) <= _SEGMENT_TOL:
        raise DegenerateError(f"degenerate confocal coordinate: {z!r} lies on [-1, 1]")
    cosh_s = (abs(z - 1) + abs(z + 1)) / 2
    return ConfocalParameter(math.acosh(cosh_s))


def _axis_frame(ellipse: Ellipse, z):
    """Coordinates of z in the ellipse's principal-axis frame."""
    return (np.asarray(z, dtype=np.complex128) - ellipse.center) * np.conj(ellipse.axis)


def quadratic_form(ellipse: Ellipse, z):
    """x^2/A^2 + y^2/B^2 in the axis frame: 1 on the ellipse, < 1 inside.

    Raises:
        DegenerateError: If the ellipse is a segment
    """
    if ellipse.is_degenerate:
        raise DegenerateError("degenerate ellipse: semi-minor axis is zero")
    w = _axis_frame(ellipse, z)
    value = (w.real / ellipse.semi_major) ** 2 + (w.imag / ellipse.semi_minor) ** 2
    return float(value) if np.ndim(value) == 0 else value


def contains_point(ellipse: Ellipse, z: Number, tol: float = 1e-9) -> bool:
    """True iff z is on the ellipse: quadratic form within tol of 1."""
    return abs(quadratic_form(ellipse, z) - 1.0) <= tol


def map_to_unit_circle(ellipse: Ellipse) -> UnitCircleMap:
    """Map sending the ellipse onto |w| = 1.

    Circles get a ConformalSimilarity; proper ellipses the inverse of the
    canonical map e^{it} -> center + e^{i rot}(A cos t + i B sin t).

    Raises:
        DegenerateError: If semi_minor == 0
    """
    if ellipse.is_degenerate:
        raise DegenerateError("degenerate ellipse: semi-minor axis is zero")
    if ellipse.is_circle:
        radius = ellipse.semi_major
        return ConformalSimilarity(-ellipse.center / radius, 1 / radius)
    major, minor = ellipse.semi_major, ellipse.semi_minor
    canonical = AffineMap(
        (major + minor) / 2 * ellipse.axis,
        (major - minor) / 2 * ellipse.axis,
        ellipse.center,
    )
    return invert(canonical)


def similarity_to_confocal(ellipse: Ellipse) -> Tuple[ConformalSimilarity, ConfocalParameter]:
    """Similarity S sending the ellipse onto a member of the foci ±1 family.

    S(z) = (z - center) e^{-i rot} / f and tanh s = B/A.

    Raises:
        DegenerateError: For circles (no focal axis) and segments
    """
    if ellipse.is_circle:
        raise DegenerateError("circle has no focal axis to normalize onto foci ±1")
    f = ellipse.focal_distance
    turn = np.conj(ellipse.axis) / f
    s = ConfocalParameter(math.atanh(ellipse.semi_minor / ellipse.semi_major))
    logger.debug(f"Confocal member s={s.s:.6g}, focal distance {f:.6g}")
    return ConformalSimilarity(-ellipse.center * turn, turn), s


class TangencyKind(str, Enum):
    TANGENT = "tangent"
    SECANT = "secant"
    DISJOINT = "disjoint"


@dataclass(frozen=True)
class SegmentTangency:
    """How the line through p and q meets an ellipse.

    Attributes:
        kind: Classification of the normalized discriminant
        discriminant: 1 - d^2, d the line's distance from the origin after
            mapping the ellipse onto the unit circle
        parameter: Line parameter u of the closest approach p + u (q - p)
        point: Touching point when tangent
        within_segment: Tangent point lies on the segment, with slack
    """

    kind: TangencyKind
    discriminant: float
    parameter: float
    point: Optional[complex] = None
    within_segment: bool = False

    @property
    def is_tangent(self) -> bool:
        return self.kind is TangencyKind.TANGENT

    @property
    def residual(self) -> float:
        return abs(self.discriminant)


def segment_tangency(ellipse: Ellipse, p: Number, q: Number, tol: float = 1e-7) -> SegmentTangency:
    """Classify the line through p and q against the ellipse.

    The line is carried into the unit-circle frame, where the discriminant
    of |P0 + u D|^2 = 1 divided by |D|^4 is 1 - d^2. Affine maps preserve
    line parameters, so the double root u* gives the tangent point on the
    original segment.

    Raises:
        DomainError: If p == q
        DegenerateError: If the ellipse is a segment
    """
    p, q = as_complex(p), as_complex(q)
    if p == q:
        raise DomainError("segment endpoints coincide")
    to_unit = map_to_unit_circle(ellipse)
    start = complex(to_unit(p))
    direction = complex(to_unit(q)) - start
    length_sq = abs(direction) ** 2
    along = (start * direction.conjugate()).real
    across = (start * direction.conjugate()).imag
    delta = 1.0 - across * across / length_sq
    u_star = -along / length_sq

    if abs(delta) <= tol:
        within = -tol <= u_star <= 1 + tol
        return SegmentTangency(
            TangencyKind.TANGENT, delta, u_star, point=p + u_star * (q - p), within_segment=within
        )
    kind = TangencyKind.SECANT if delta > 0 else TangencyKind.DISJOINT
    return SegmentTangency(kind, delta, u_star)


def trace_points(ellipse: Ellipse, count: int = 64) -> np.ndarray:
    """``count`` points equally spaced in the trace parameter."""
    if count < 1:
        raise DomainError("count must be positive")
    return ellipse.point(np.linspace(0.0, 2 * np.pi, count, endpoint=False))


__all__ = [
    "UnitCircleMap",
    "foci",
    "eccentricity",
    "confocal_member",
    "confocal_through_point",
    "quadratic_form",
    "contains_point",
    "map_to_unit_circle",
    "similarity_to_confocal",
    "TangencyKind",
    "SegmentTangency",
    "segment_tangency",
    "trace_points",
]
