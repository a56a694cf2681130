"""Affinely regular polygons, Chebyshev critical-point forms and the
midpoint inellipse.

A convex n-gon is affinely regular iff its vertex sequence has Fourier
support in the modes 0, 1 and n-1 only; the three coefficients are the
witnessing affine map. For a polynomial whose critical points are
alpha + beta cos(k pi/n), the roots form such a polygon and the foci of the
ellipse through the side midpoints are alpha ± beta cos(pi/n).
"""

from __future__ import annotations

import cmath
import logging
import math
from typing import Iterable, List, Optional, Tuple, Union

import numpy as np

from src.core.chebyshev import cheb_t, chebyshev_level_roots, u_roots
from src.core.config import Tolerances, resolve_tolerances
from src.core.ellipse import foci, map_to_unit_circle, segment_tangency
from src.core.numeric import critical_points, find_roots, is_coincident, poly_from_roots
from src.errors import ConvexityError, DegenerateError, DegreeError, DomainError
from src.models.geometry import AffineMap, ConformalSimilarity, Ellipse
from src.models.polynomial import ComplexPolynomial, Number, PointMultiset, as_complex, as_complex_array
from src.models.regularity import (
    CharacterizationResult,
    CriticalForm,
    Polygon,
    RegularityFit,
    VerificationReport,
    VerificationStatus,
)

logger = logging.getLogger(__name__)

BETA_ZERO = "β=0 (circle case)"
DEGENERATE_IMAGE = "degenerate (collinear) image"


def _diameter(points: np.ndarray) -> float:
    if points.size < 2:
        return 0.0
    return float(np.abs(points[:, None] - points[None, :]).max())


def midpoints(polygon: Polygon) -> Polygon:
    """Side midpoints (v_k + v_{k+1})/2, in order."""
    v = polygon.array
    return Polygon((v + np.roll(v, -1)) / 2)


def polygon_from_roots(points: Union[PointMultiset, Iterable[Number]]) -> Polygon:
    """Order points counterclockwise by angle about their centroid.

    Ties in angle are broken by distance from the centroid. Convexity is
    not checked here.

    Raises:
        DegenerateError: Fewer than 3 points or repeated points
    """
    arr = as_complex_array(points)
    if arr.size < 3:
        raise DegenerateError(f"need a polygon: got {arr.size} points")
    centered = arr - arr.mean()
    order = np.lexsort((np.abs(centered), np.angle(centered)))
    return Polygon(arr[order])


def detect_affinely_regular(polygon: Polygon, tol: Optional[float] = None) -> RegularityFit:
    """Fourier witness of affine regularity.

    c_m = (1/n) sum_k v_k w^{-mk}; gamma = c_0, alpha = c_1, beta = c_{n-1}
    and the residual collects every other mode. Acceptance compares the
    residual with ``tol`` times the polygon diameter, so it is unchanged by
    cyclic relabeling and by conformal similarities.

    Args:
        polygon: Convex counterclockwise polygon
        tol: Relative residual bound (default ``tol_regular``)

    Returns:
        RegularityFit; rejections carry a ``reason``

    Raises:
        ConvexityError: If the polygon is not convex and counterclockwise

    Example:
        >>> fit = detect_affinely_regular(Polygon([2+1j, -2+1j, -2-1j, 2-1j]))
        >>> fit.accepted, fit.gamma
        (True, 0j)
    """
    tol = resolve_tolerances().tol_regular if tol is None else tol
    if not polygon.is_convex():
        raise ConvexityError("convex polygon required")

    n = polygon.n
    coeffs = np.fft.fft(polygon.array) / n
    gamma, alpha, beta = complex(coeffs[0]), complex(coeffs[1]), complex(coeffs[n - 1])
    others = np.abs(coeffs[2 : n - 1]) if n > 3 else np.zeros(0)
    residual = float(math.sqrt(np.sum(others ** 2)))
    scale = polygon.scale
    logger.debug(f"DFT fit n={n}: residual={residual:.3g} scale={scale:.3g}")

    reason = None
    if abs(abs(alpha) - abs(beta)) <= tol * scale:
        reason = DEGENERATE_IMAGE
    elif residual > tol * scale:
        reason = f"not affinely regular: Fourier residual {residual / scale:.3g} x scale"
    return RegularityFit(
        alpha=alpha,
        beta=beta,
        gamma=gamma,
        n=n,
        residual=residual,
        scale=scale,
        accepted=reason is None,
        reason=reason,
        similarity_image=reason is None and abs(beta) <= tol * scale,
    )


def _fit_image_ellipse(fit: RegularityFit, radius: float) -> Ellipse:
    if not fit.accepted:
        raise DomainError(f"regularity fit not accepted: {fit.reason}")
    alpha, beta = fit.alpha, fit.beta
    rotation = (cmath.phase(alpha) + cmath.phase(beta)) / 2 if beta != 0 else 0.0
    return Ellipse(
        center=fit.gamma,
        semi_major=radius * (abs(alpha) + abs(beta)),
        semi_minor=radius * abs(abs(alpha) - abs(beta)),
        rotation=rotation,
    )


def inscribed_midpoint_ellipse(fit: RegularityFit) -> Ellipse:
    """Image of the circle of radius cos(pi/n) under the fit's affine map.

    It passes through every side midpoint and is tangent there.

    Raises:
        DomainError: If the fit was rejected
    """
    return _fit_image_ellipse(fit, math.cos(math.pi / fit.n))


def circumscribed_ellipse(fit: RegularityFit) -> Ellipse:
    """Image of the unit circle: the ellipse through all n vertices."""
    return _fit_image_ellipse(fit, 1.0)


def inscribed_foci_closed_form(fit: RegularityFit) -> Tuple[complex, complex]:
    """gamma ± 2 cos(pi/n) sqrt(alpha beta), unordered."""
    offset = 2 * math.cos(math.pi / fit.n) * cmath.sqrt(fit.alpha * fit.beta)
    return (fit.gamma + offset, fit.gamma - offset)


def fit_critical_form(
    points: Union[PointMultiset, Iterable[Number]],
    n: int,
    tol: Optional[float] = None,
    *,
    tol_coincident: Optional[float] = None,
    scale: Optional[float] = None,
) -> CriticalForm:
    """Fit points to alpha + beta cos(k pi/n), k = 1..n-1.

    The points are projected on their total-least-squares line and matched
    in order against the decreasing targets cos(k pi/n). The reversed
    matching yields -beta with the same residual; beta is returned with
    Re beta > 0 (Im beta > 0 when purely imaginary).

    Args:
        points: n - 1 points, counted with multiplicity
        n: Chebyshev degree
        tol: Residual bound relative to the point spread (``tol_critical``)
        tol_coincident: Bound for treating all points as one (``tol_coincident``)
        scale: Reference length for the coincidence test

    Raises:
        DegreeError: If n < 3
        DomainError: If ``len(points) != n - 1``
    """
    defaults = resolve_tolerances()
    tol = defaults.tol_critical if tol is None else tol
    tol_coincident = defaults.tol_coincident if tol_coincident is None else tol_coincident
    if n < 3:
        raise DegreeError(f"critical form needs n >= 3, got {n}")
    z = as_complex_array(points)
    if z.size != n - 1:
        raise DomainError(f"expected {n - 1} critical points, got {z.size}")

    alpha = complex(z.mean())
    shifted = z - alpha
    reference = scale if scale else max(1.0, float(np.abs(z).max()))
    if is_coincident(z, reference, tol_coincident):
        return CriticalForm(
            alpha=alpha,
            beta=0j,
            n=n,
            residual=float(np.abs(shifted).max()),
            spread=0.0,
            accepted=False,
            reason=f"{BETA_ZERO}: critical points coincide at {alpha:.6g}",
        )

    # principal axis of the centered point cloud
    _, _, vt = np.linalg.svd(np.column_stack([shifted.real, shifted.imag]))
    direction = complex(vt[0, 0], vt[0, 1])
    projection = (shifted * np.conj(direction)).real
    ordered = shifted[np.argsort(-projection, kind="stable")]
    targets = np.array(u_roots(n))
    beta = complex(np.dot(targets, ordered) / np.dot(targets, targets))
    residual = float(np.sqrt(np.mean(np.abs(ordered - beta * targets) ** 2)))
    # targets are antisymmetric under reversal, so the reversed matching is -beta
    if beta.real < 0 or (beta.real == 0 and beta.imag < 0):
        beta = -beta
    spread = _diameter(z)
    logger.debug(f"Critical form n={n}: beta={beta:.6g} residual={residual:.3g} spread={spread:.3g}")

    reason = None
    if abs(beta) <= tol * spread:
        reason = f"{BETA_ZERO}: fitted beta vanishes"
    elif residual > tol * spread:
        reason = f"not of Chebyshev form: residual {residual / spread:.3g} x spread"
    return CriticalForm(
        alpha=alpha,
        beta=beta,
        n=n,
        residual=residual,
        spread=spread,
        accepted=reason is None,
        reason=reason,
    )


def chebyshev_level_on_vertices(
    points: Union[PointMultiset, Iterable[Number]], n: int, alpha: complex = 0j, beta: complex = 1
) -> Tuple[complex, float]:
    """Mean and spread of T_n((z - alpha)/beta) over the points.

    A polynomial with critical points alpha + beta cos(k pi/n) is a
    constant multiple of T_n((z - alpha)/beta) plus a constant, so its
    roots share one level. The spread is relative to max(1, |level|).
    """
    if beta == 0:
        raise DomainError("normalization needs beta != 0")
    values = np.asarray(cheb_t(n, (as_complex_array(points) - alpha) / beta))
    level = complex(values.mean())
    spread = float(np.abs(values - level).max()) / max(1.0, abs(level))
    return level, spread


def _report(
    p: ComplexPolynomial,
    status: VerificationStatus,
    diagnostics: List[str],
    scale: float,
    roots: PointMultiset,
    crit: Optional[PointMultiset],
    **stages,
) -> VerificationReport:
    report = VerificationReport(
        degree=p.degree,
        status=status,
        scale=scale,
        roots=tuple(roots),
        critical_points=tuple(crit) if crit is not None else (),
        diagnostics=tuple(diagnostics),
        **{"critical_form": None, "regularity": None, "ellipse": None, **stages},
    )
    log = logger.info if status is VerificationStatus.PASS else logger.warning
    log(f"Verification degree={p.degree}: {status.value}" + (f" ({report.diagnostic})" if diagnostics else ""))
    return report


def verify_bocher_grace(p: ComplexPolynomial, tol: Optional[Tolerances] = None) -> VerificationReport:
    """Check every clause of the midpoint-inellipse theorem on p.

    Stages: critical points fitted to alpha + beta cos(k pi/n); roots
    ordered into a convex polygon and tested for affine regularity; the
    inscribed midpoint ellipse; tangency of every side at its midpoint;
    the ellipse's foci against alpha ± beta cos(pi/n).

    A rejected critical form, repeated roots or a non-convex root layout
    give HYPOTHESIS_NOT_SATISFIED. Any later stage out of tolerance gives
    FAIL. Stages never raise for degenerate input.

    Raises:
        DegreeError: If deg p < 3
    """
    tol = resolve_tolerances(tol)
    n = p.degree
    if n < 3:
        raise DegreeError(f"need a polygon: degree {n} < 3")
    root_options = dict(
        tol_root=tol.tol_root,
        tol_cluster=tol.tol_cluster,
        tol_coincident=tol.tol_coincident,
        max_iterations=tol.max_iterations,
    )
    roots = find_roots(p, **root_options)
    crit = critical_points(p, **root_options)
    scale = _diameter(roots.array) or 1.0
    diagnostics: List[str] = []

    form = fit_critical_form(crit, n, tol.tol_critical, tol_coincident=tol.tol_coincident, scale=scale)
    try:
        polygon = polygon_from_roots(roots)
    except DegenerateError as exc:
        diagnostics.append(f"hypothesis not satisfied: {exc}")
        return _report(p, VerificationStatus.HYPOTHESIS_NOT_SATISFIED, diagnostics, scale, roots, crit, critical_form=form)

    regularity = None
    if polygon.is_convex():
        regularity = detect_affinely_regular(polygon, tol.tol_regular)
    if not form.accepted:
        diagnostics.append(f"hypothesis not satisfied: {form.reason}")
        return _report(
            p, VerificationStatus.HYPOTHESIS_NOT_SATISFIED, diagnostics, scale, roots, crit,
            critical_form=form, regularity=regularity,
        )
    if regularity is None:
        diagnostics.append("hypothesis not satisfied: roots are not in convex position")
        return _report(p, VerificationStatus.HYPOTHESIS_NOT_SATISFIED, diagnostics, scale, roots, crit, critical_form=form)

    _, level_spread = chebyshev_level_on_vertices(roots, n, form.alpha, form.beta)
    if not regularity.accepted:
        diagnostics.append(f"roots not affinely regular: {regularity.reason}")
        return _report(
            p, VerificationStatus.FAIL, diagnostics, scale, roots, crit,
            critical_form=form, regularity=regularity, level_spread=level_spread,
        )

    ellipse = inscribed_midpoint_ellipse(regularity)
    to_unit = map_to_unit_circle(ellipse)
    mids = midpoints(polygon).array
    midpoint_residual = float(np.max(np.abs(np.abs(to_unit(mids)) - 1.0))) * ellipse.semi_major
    if midpoint_residual > tol.tol_midpoint * scale:
        diagnostics.append(f"midpoints off the ellipse by {midpoint_residual:.3g}")

    tangencies = [segment_tangency(ellipse, a, b, tol.tol_tangency) for a, b in polygon.edges()]
    tangency_residuals = tuple(t.residual for t in tangencies)
    for k, t in enumerate(tangencies):
        if not (t.is_tangent and t.within_segment):
            diagnostics.append(f"side {k} is {t.kind.value}, discriminant {t.discriminant:.3g}")

    ellipse_foci = foci(ellipse)
    focus_error = PointMultiset(ellipse_foci).distance_to(form.extreme_points)
    if focus_error > tol.tol_focus * scale:
        diagnostics.append(f"foci miss the extreme critical points by {focus_error:.3g}")

    status = VerificationStatus.FAIL if diagnostics else VerificationStatus.PASS
    return _report(
        p, status, diagnostics, scale, roots, crit,
        critical_form=form,
        regularity=regularity,
        ellipse=ellipse,
        midpoint_residual=midpoint_residual,
        tangency_residuals=tangency_residuals,
        focus_error=focus_error,
        level_spread=level_spread,
        foci=ellipse_foci,
    )


def synthesize_roots(
    n: int,
    scale: Number,
    offset: Number,
    similarity: Optional[ConformalSimilarity] = None,
    tol: Optional[float] = None,
) -> np.ndarray:
    """Roots of (scale/n) T_n(z) + offset, mapped through ``similarity``.

    The roots solve T_n(z) = L with L = -n offset/scale; the derivative is
    a multiple of U_{n-1}, so the critical points are S(cos(k pi/n)).

    Raises:
        DegenerateError: If n < 3, or L lies within ``tol`` of [-1, 1]
        DomainError: If scale == 0
    """
    tol = resolve_tolerances().tol_degenerate_level if tol is None else tol
    if n < 3:
        raise DegenerateError(f"need a polygon: n={n}")
    scale, offset = as_complex(scale), as_complex(offset)
    if scale == 0:
        raise DomainError("scale must be nonzero")
    level = -n * offset / scale
    if abs(level.imag) <= tol and -1 - tol <= level.real <= 1 + tol:
        raise DegenerateError(
            f"degenerate level set (roots collinear or collapsing): T_{n} level {level:.6g}"
        )
    roots = chebyshev_level_roots(n, level)
    if similarity is not None:
        roots = np.asarray(similarity(roots))
    return roots


def synthesize(
    n: int,
    scale: Number,
    offset: Number,
    similarity: Optional[ConformalSimilarity] = None,
    tol: Optional[float] = None,
) -> ComplexPolynomial:
    """Monic polynomial whose roots are ``synthesize_roots(...)``."""
    return poly_from_roots(synthesize_roots(n, scale, offset, similarity, tol))


def verify_characterization(polygon: Polygon, tol: Optional[Tolerances] = None) -> CharacterizationResult:
    """Evaluate both sides of: midpoint inellipse exists iff critical points have Chebyshev form.

    Side A is Fourier regularity excluding similarity images of regular
    polygons (beta = 0); side B fits the critical points of the polynomial
    with the polygon's vertices as roots.

    Raises:
        ConvexityError: If the polygon is not convex and counterclockwise
    """
    tol = resolve_tolerances(tol)
    fit = detect_affinely_regular(polygon, tol.tol_regular)
    crit = critical_points(
        poly_from_roots(polygon.vertices),
        tol_root=tol.tol_root,
        tol_cluster=tol.tol_cluster,
        tol_coincident=tol.tol_coincident,
        max_iterations=tol.max_iterations,
    )
    form = fit_critical_form(
        crit, polygon.n, tol.tol_critical, tol_coincident=tol.tol_coincident, scale=polygon.scale
    )
    result = CharacterizationResult(
        inellipse_side=fit.accepted and not fit.similarity_image,
        critical_side=form.accepted,
        regularity=fit,
        critical_form=form,
    )
    logger.info(
        f"Characterization n={polygon.n}: inellipse={result.inellipse_side} "
        f"critical={result.critical_side} agree={result.agree}"
    )
    return result


def is_parallelogram(polygon: Polygon, tol: float = 1e-6) -> bool:
    """Opposite sides equal: |(v1 - v0) - (v2 - v3)| <= tol * diameter.

    Raises:
        DomainError: If the polygon is not a quadrilateral
    """
    if polygon.n != 4:
        raise DomainError(f"parallelogram test needs 4 vertices, got {polygon.n}")
    v = polygon.vertices
    return abs((v[1] - v[0]) - (v[2] - v[3])) <= tol * polygon.scale


def affinely_regular_polygon(
    alpha: Number, beta: Number, gamma: Number, n: int, theta: float = 0.0
) -> Polygon:
    """Vertices alpha w_k + beta conj(w_k) + gamma with w_k = e^{i(theta + 2k pi/n)}.

    Returned counterclockwise: when |beta| > |alpha| the map reverses
    orientation and the vertex order is flipped.

    Raises:
        DegenerateError: If n < 3 or |alpha| == |beta|
    """
    if n < 3:
        raise DegenerateError(f"need a polygon: n={n}")
    phi = AffineMap(alpha, beta, gamma)
    if math.isclose(abs(phi.alpha), abs(phi.beta), rel_tol=1e-12):
        raise DegenerateError(DEGENERATE_IMAGE)
    w = np.exp(1j * (theta + 2 * np.pi * np.arange(n) / n))
    vertices = phi(w)
    if abs(phi.beta) > abs(phi.alpha):
        vertices = vertices[::-1]
    return Polygon(vertices)


def steiner_inellipse_foci(z1: Number, z2: Number, z3: Number) -> Tuple[complex, complex]:
    """(z1+z2+z3)/3 ± sqrt(z1^2+z2^2+z3^2 - z1z2 - z2z3 - z3z1)/3."""
    z1, z2, z3 = as_complex(z1), as_complex(z2), as_complex(z3)
    center = (z1 + z2 + z3) / 3
    offset = cmath.sqrt(z1 * z1 + z2 * z2 + z3 * z3 - z1 * z2 - z2 * z3 - z3 * z1) / 3
    return (center + offset, center - offset)


__all__ = [
    "BETA_ZERO",
    "DEGENERATE_IMAGE",
    "midpoints",
    "polygon_from_roots",
    "detect_affinely_regular",
    "inscribed_midpoint_ellipse",
    "circumscribed_ellipse",
    "inscribed_foci_closed_form",
    "fit_critical_form",
    "chebyshev_level_on_vertices",
    "verify_bocher_grace",
    "synthesize_roots",
    "synthesize",
    "verify_characterization",
    "is_parallelogram",
    "affinely_regular_polygon",
    "steiner_inellipse_foci",
]
