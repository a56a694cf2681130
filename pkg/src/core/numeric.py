"""Polynomial arithmetic and simultaneous root finding.

Roots are found with the Aberth-Ehrlich iteration started on a perturbed
circle whose radius is the Cauchy bound, followed by Newton polishing and
clustering of numerically coincident roots.
"""

from __future__ import annotations

import logging
from typing import Iterable, Optional

import numpy as np
from numpy.polynomial import polynomial as P
from scipy.cluster.hierarchy import fclusterdata

from src.core.config import get_settings
from src.errors import DegreeError
from src.models.polynomial import ComplexPolynomial, Number, PointMultiset, as_complex, as_complex_array

logger = logging.getLogger(__name__)

_EPS = np.finfo(np.float64).eps
# Angular offset of the starting circle; any value away from multiples of
# pi/n works, it only has to break the symmetry of real polynomials.
_START_PHASE = 0.4
_POLISH_STEPS = 3
# Largest spread, relative to the Cauchy radius, of a split multiple root
_CANDIDATE_SPREAD = 1e-3


def poly_from_roots(roots: Iterable[Number]) -> ComplexPolynomial:
    """Monic polynomial with the given roots (empty input gives 1)."""
    arr = as_complex_array(roots)
    if arr.size == 0:
        return ComplexPolynomial([1])
    return ComplexPolynomial(P.polyfromroots(arr))


def derivative(p: ComplexPolynomial) -> ComplexPolynomial:
    """Coefficientwise derivative; a constant maps to the zero polynomial."""
    if p.degree == 0:
        return ComplexPolynomial([0])
    return ComplexPolynomial(P.polyder(p.array))


def evaluate(p: ComplexPolynomial, z: Number) -> complex:
    """Horner value of p at z."""
    return complex(P.polyval(as_complex(z), p.array))


def cauchy_radius(p: ComplexPolynomial) -> float:
    """Cauchy bound: the positive root of |a_n| x^n - sum_{k<n} |a_k| x^k.

    Every root of p lies in the closed disk of this radius. Newton's
    method started at the Fujiwara bound descends monotonically onto it.
    """
    mags = np.abs(p.array / p.leading)
    n = p.degree
    lower = mags[:-1]
    if not np.any(lower):
        return 0.0
    # Fujiwara: 2 max(|a_{n-1}|, |a_{n-2}|^(1/2), ..., |a_0 / 2|^(1/n))
    terms = [lower[n - j] ** (1.0 / j) for j in range(1, n)]
    terms.append((lower[0] / 2.0) ** (1.0 / n))
    x = 2.0 * float(max(terms))

    cauchy_poly = np.concatenate([-lower, [1.0]])
    d_cauchy = P.polyder(cauchy_poly)
    for _ in range(100):
        x_next = x - P.polyval(x, cauchy_poly) / P.polyval(x, d_cauchy)
        # stay on the upper side of the root so the disk still contains p's roots
        if not x_next > 0 or P.polyval(x_next, cauchy_poly) < 0:
            break
        done = x - x_next <= 1e-3 * x
        x = float(x_next)
        if done:
            break
    return float(x)


def _aberth(monic: np.ndarray, radius: float, max_iterations: int) -> tuple[np.ndarray, int, bool]:
    """Aberth-Ehrlich iteration on a monic coefficient vector without zero roots."""
    n = monic.size - 1
    d_monic = P.polyder(monic)
    abs_coeffs = np.abs(monic)
    angles = 2 * np.pi * np.arange(n) / n + _START_PHASE
    z = radius * np.exp(1j * angles)
    active = np.ones(n, dtype=bool)

    for iteration in range(1, max_iterations + 1):
        pz = P.polyval(z, monic)
        dpz = P.polyval(z, d_monic)
        with np.errstate(divide="ignore", invalid="ignore"):
            newton = pz / dpz
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, np.inf)
            repulsion = (1.0 / diff).sum(axis=1)
            correction = newton / (1.0 - newton * repulsion)
        bad = ~np.isfinite(correction)
        if np.any(bad):
            # Stationary point of p or colliding iterates: nudge and retry.
            correction[bad] = radius * 1e-3 * np.exp(1j * (iteration + np.flatnonzero(bad)))
        correction[~active] = 0.0
        z = z - correction

        backward = np.abs(P.polyval(z, monic)) <= 4 * n * _EPS * P.polyval(np.abs(z), abs_coeffs)
        stalled = np.abs(correction) <= 4 * _EPS * np.abs(z)
        active &= ~(backward | stalled)
        if not np.any(active):
            return z, iteration, True
    return z, max_iterations, False


def _polish(p: np.ndarray, z: np.ndarray) -> np.ndarray:
    """A few Newton steps on the original polynomial, kept only if |p| drops."""
    dp = P.polyder(p)
    z = z.copy()
    for _ in range(_POLISH_STEPS):
        pz = P.polyval(z, p)
        dpz = P.polyval(z, dp)
        with np.errstate(divide="ignore", invalid="ignore"):
            candidate = z - pz / dpz
        improved = np.isfinite(candidate) & (np.abs(P.polyval(candidate, p)) < np.abs(pz))
        if not np.any(improved):
            break
        z[improved] = candidate[improved]
    return z


def is_coincident(points: Iterable[Number], reference: float, tol: float) -> bool:
    """All points equal up to rounding, judged on symmetric functions.

    A k-fold point splits by about eps^(1/k) under rounding, but the
    elementary symmetric functions of the points about their mean stay
    near eps * reference^k. The test is |e_k| <= tol * reference^k for
    k = 2..m.
    """
    z = as_complex_array(points)
    m = z.size
    if m < 2:
        return True
    elementary = P.polyfromroots(z - z.mean())
    return all(abs(elementary[m - k]) <= tol * reference ** k for k in range(2, m + 1))


def _merge(merged: np.ndarray, z: np.ndarray, members: np.ndarray) -> None:
    merged[members] = z[members].mean()
    logger.debug(f"Merged {int(members.sum())} roots near {complex(z[members].mean()):.6g}")


def _cluster(z: np.ndarray, radius: float, tol_cluster: float, tol_coincident: float) -> np.ndarray:
    """Replace numerically coincident roots by their mean.

    Groups within ``_CANDIDATE_SPREAD * radius`` of each other are merged
    whole when they pass ``is_coincident``; otherwise only roots closer
    than ``tol_cluster * radius`` are merged.
    """
    if z.size < 2 or radius <= 0:
        return z
    points = np.column_stack([z.real, z.imag])
    fine = fclusterdata(points, t=tol_cluster * radius, criterion="distance", method="single")
    coarse = fclusterdata(points, t=max(_CANDIDATE_SPREAD, tol_cluster) * radius, criterion="distance", method="single")
    merged = z.copy()
    for label in np.unique(coarse):
        members = coarse == label
        if members.sum() < 2:
            continue
        if is_coincident(z[members], radius, tol_coincident):
            _merge(merged, z, members)
            continue
        # single-linkage clusters at the finer distance nest inside this one
        for sub in np.unique(fine[members]):
            group = members & (fine == sub)
            if group.sum() > 1:
                _merge(merged, z, group)
    return merged


def root_backward_error(p: ComplexPolynomial, r: complex) -> float:
    """|p(r)| relative to sum |c_k| max(|r|, 1)^k, the scale of p near r."""
    coeffs = p.array
    scale = float(P.polyval(max(abs(r), 1.0), np.abs(coeffs)))
    return abs(evaluate(p, r)) / scale


def find_roots(
    p: ComplexPolynomial,
    *,
    tol_root: Optional[float] = None,
    tol_cluster: Optional[float] = None,
    tol_coincident: Optional[float] = None,
    max_iterations: Optional[int] = None,
) -> PointMultiset:
    """All roots of p, counted with multiplicity.

    Args:
        p: Polynomial of degree >= 1
        tol_root: Backward-error bound checked after convergence
        tol_cluster: Merge distance relative to the Cauchy radius
        tol_coincident: Symmetric-function bound for merging a split multiple root
        max_iterations: Aberth-Ehrlich iteration cap

    Returns:
        PointMultiset of size ``p.degree``

    Raises:
        DegreeError: For the zero polynomial or a nonzero constant
    """
    defaults = get_settings().tolerances
    tol_root = defaults.tol_root if tol_root is None else tol_root
    tol_cluster = defaults.tol_cluster if tol_cluster is None else tol_cluster
    tol_coincident = defaults.tol_coincident if tol_coincident is None else tol_coincident
    max_iterations = defaults.max_iterations if max_iterations is None else max_iterations

    if p.is_zero:
        raise DegreeError("identically zero polynomial has no isolated roots")
    if p.degree == 0:
        raise DegreeError("no roots of a nonzero constant")

    coeffs = p.array
    zero_count = int(np.flatnonzero(coeffs)[0])
    reduced = coeffs[zero_count:]
    roots = np.zeros(zero_count, dtype=np.complex128)

    if reduced.size == 2:
        roots = np.concatenate([roots, [-reduced[0] / reduced[1]]])
    elif reduced.size > 2:
        monic = reduced / reduced[-1]
        radius = cauchy_radius(ComplexPolynomial(monic))
        found, iterations, converged = _aberth(monic, radius, max_iterations)
        if converged:
            logger.debug(f"Aberth-Ehrlich converged in {iterations} iterations (degree {monic.size - 1})")
        else:
            logger.warning(
                f"Aberth-Ehrlich hit max_iterations={max_iterations} for degree {monic.size - 1}"
            )
        found = _polish(reduced, found)
        found = _cluster(found, radius, tol_cluster, tol_coincident)
        roots = np.concatenate([roots, found])

    result = PointMultiset(roots)
    worst = max(root_backward_error(p, r) for r in result)
    if worst > tol_root:
        logger.warning(f"Root backward error {worst:.3g} exceeds tol_root={tol_root:g}")
    return result


def critical_points(p: ComplexPolynomial, **root_options) -> PointMultiset:
    """Roots of p', degree - 1 of them with multiplicity.

    Raises:
        DegreeError: If degree < 2 ("no critical points")
    """
    if p.degree < 2:
        raise DegreeError(f"no critical points: degree {p.degree} < 2")
    return find_roots(derivative(p), **root_options)


__all__ = [
    "poly_from_roots",
    "derivative",
    "evaluate",
    "cauchy_radius",
    "root_backward_error",
    "is_coincident",
    "find_roots",
    "critical_points",
]
