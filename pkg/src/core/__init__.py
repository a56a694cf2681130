"""Core polyfoci engine modules."""

from src.core.config import Settings, Tolerances, get_settings, resolve_tolerances, settings
from src.core.numeric import critical_points, derivative, evaluate, find_roots, poly_from_roots
from src.core.chebyshev import cheb_on_ellipse, cheb_t, cheb_u, periodicity_check, u_roots
from src.core.affine import decompose, invert, recompose, unit_circle_image
from src.core.ellipse import foci, map_to_unit_circle, segment_tangency
from src.core.regularity import (
    detect_affinely_regular,
    fit_critical_form,
    inscribed_midpoint_ellipse,
    synthesize,
    verify_bocher_grace,
    verify_characterization,
)
from src.core.batch import BatchVerifier

__all__ = [
    "Settings",
    "Tolerances",
    "get_settings",
    "resolve_tolerances",
    "settings",
    "poly_from_roots",
    "derivative",
    "evaluate",
    "find_roots",
    "critical_points",
    "cheb_t",
    "cheb_u",
    "u_roots",
    "cheb_on_ellipse",
    "periodicity_check",
    "decompose",
    "recompose",
    "invert",
    "unit_circle_image",
    "foci",
    "map_to_unit_circle",
    "segment_tangency",
    "detect_affinely_regular",
    "fit_critical_form",
    "inscribed_midpoint_ellipse",
    "synthesize",
    "verify_bocher_grace",
    "verify_characterization",
    "BatchVerifier",
]
