"""Value types shared by the polyfoci engine."""

from .geometry import (
    AffineDecomposition,
    AffineMap,
    ConfocalParameter,
    ConformalSimilarity,
    Ellipse,
    wrap_angle,
    wrap_axis_angle,
)
from .polynomial import ComplexPolynomial, Number, PointMultiset, as_complex, as_complex_array
from .regularity import (
    CharacterizationResult,
    CriticalForm,
    Polygon,
    RegularityFit,
    VerificationReport,
    VerificationStatus,
)

__all__ = [
    # Scalars and polynomials
    "Number",
    "as_complex",
    "as_complex_array",
    "ComplexPolynomial",
    "PointMultiset",
    # Plane geometry
    "wrap_angle",
    "wrap_axis_angle",
    "ConformalSimilarity",
    "AffineMap",
    "AffineDecomposition",
    "Ellipse",
    "ConfocalParameter",
    # Theorem layer
    "Polygon",
    "RegularityFit",
    "CriticalForm",
    "VerificationStatus",
    "VerificationReport",
    "CharacterizationResult",
]
