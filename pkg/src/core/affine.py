"""Conformal similarities and affine maps of the plane.

An affine map Phi(z) = alpha z + beta conj(z) + gamma with
|alpha| != |beta| factors as Phi = S ∘ A ∘ R: a rotation R, a purely
affine A sending the unit circle onto a normalized ellipse with foci ±1,
and a conformal similarity S.
"""

from __future__ import annotations

import cmath
import logging
import math
from typing import List, Tuple

import numpy as np

from src.errors import DegenerateError, DomainError
from src.models.geometry import (
    AffineDecomposition,
    AffineMap,
    ConformalSimilarity,
    Ellipse,
    wrap_angle,
    wrap_axis_angle,
)

logger = logging.getLogger(__name__)

# relative tolerance for |alpha| == |beta|
_RANK_TOL = 1e-12


def apply_similarity(s: ConformalSimilarity, z):
    """alpha + beta * z."""
    return s(z)


def apply_affine(phi: AffineMap, z):
    """alpha * z + beta * conj(z) + gamma."""
    return phi(z)


def _is_rank_deficient(alpha: complex, beta: complex) -> bool:
    return abs(abs(alpha) - abs(beta)) <= _RANK_TOL * max(abs(alpha), abs(beta))


def decompose(phi: AffineMap) -> AffineDecomposition:
    """Split Phi into rotation, normalized affine part and similarity.

    Returns parameters with alpha = (a+b)/2 e^{i(phi+theta)} and
    beta = (a-b)/2 e^{i(phi-theta)}. The pair (phi, theta) is fixed up to a
    simultaneous shift by pi; phi is taken in (-pi/2, pi/2].

    Raises:
        DomainError: If alpha or beta is zero
        DegenerateError: If |alpha| == |beta|

    Example:
        >>> decompose(AffineMap(2, 1, 0))
        AffineDecomposition(a=3.0, b=1.0, theta=0.0, phi=0.0, gamma=0j, c=2.828...)
    """
    alpha, beta = phi.alpha, phi.beta
    if alpha == 0 or beta == 0:
        raise DomainError("not an affine map: alpha and beta must be nonzero")
    if _is_rank_deficient(alpha, beta):
        raise DegenerateError("degenerate (rank-1) affine map, not decomposable")

    arg_alpha, arg_beta = cmath.phase(alpha), cmath.phase(beta)
    rot = (arg_alpha + arg_beta) / 2
    theta = (arg_alpha - arg_beta) / 2
    canonical = wrap_axis_angle(rot)
    if not math.isclose(canonical, rot, abs_tol=1e-15):
        theta += canonical - rot
    logger.debug(f"Decomposed affine map: a={abs(alpha) + abs(beta):.6g} b={abs(alpha) - abs(beta):.6g}")
    return AffineDecomposition(
        a=abs(alpha) + abs(beta),
        b=abs(alpha) - abs(beta),
        theta=wrap_angle(theta),
        phi=canonical,
        gamma=phi.gamma,
    )


def factors(d: AffineDecomposition) -> Tuple[AffineMap, AffineMap, ConformalSimilarity]:
    """The maps (R, A, S) of the decomposition, applied in that order."""
    rotation = AffineMap(cmath.rect(1.0, d.theta), 0j, 0j)
    normalized = AffineMap((d.a + d.b) / (2 * d.c), (d.a - d.b) / (2 * d.c), 0j)
    similarity = ConformalSimilarity(d.gamma, d.c * cmath.rect(1.0, d.phi))
    return rotation, normalized, similarity


def recompose(d: AffineDecomposition) -> AffineMap:
    """Collapse S ∘ A ∘ R into a single AffineMap."""
    rotation, normalized, similarity = factors(d)
    return AffineMap.from_similarity(similarity).compose(normalized).compose(rotation)


def invert(phi: AffineMap) -> AffineMap:
    """Inverse map w -> (conj(alpha)(w-gamma) - beta conj(w-gamma)) / (|alpha|^2 - |beta|^2).

    Raises:
        DegenerateError: If |alpha| == |beta| ("not invertible")
    """
    alpha, beta, gamma = phi.alpha, phi.beta, phi.gamma
    if alpha == beta == 0 or _is_rank_deficient(alpha, beta):
        raise DegenerateError("not invertible: |alpha| == |beta|")
    det = phi.jacobian
    return AffineMap(
        alpha.conjugate() / det,
        -beta / det,
        (-alpha.conjugate() * gamma + beta * gamma.conjugate()) / det,
    )


def unit_circle_image(phi: AffineMap) -> Ellipse:
    """Ellipse traced by Phi(e^{it}).

    Center gamma, semi-axes |alpha| + |beta| and ||alpha| - |beta||,
    major axis at (arg alpha + arg beta)/2.

    Raises:
        DomainError: If alpha or beta is zero
        DegenerateError: If |alpha| == |beta| (the image is a segment)
    """
    alpha, beta = phi.alpha, phi.beta
    if alpha == 0 or beta == 0:
        raise DomainError("not an affine map: alpha and beta must be nonzero")
    if _is_rank_deficient(alpha, beta):
        raise DegenerateError("image is a segment, not an ellipse")
    return Ellipse(
        center=phi.gamma,
        semi_major=abs(alpha) + abs(beta),
        semi_minor=abs(abs(alpha) - abs(beta)),
        rotation=(cmath.phase(alpha) + cmath.phase(beta)) / 2,
    )


def unit_circle_foci(phi: AffineMap) -> Tuple[complex, complex]:
    """gamma ± 2 sqrt(alpha beta): foci of the unit circle's image, unordered."""
    offset = 2 * cmath.sqrt(phi.alpha * phi.beta)
    return (phi.gamma + offset, phi.gamma - offset)


def rotated_root_images(n: int, theta: float, a_over_c: float, b_over_c: float) -> List[complex]:
    """a/c cos(theta + 2k pi/n) + i b/c sin(theta + 2k pi/n), k = 1..n.

    These are the images under A of the n-th roots of unity rotated by
    theta.

    Raises:
        DegenerateError: If n < 3 ("need a polygon")
        DomainError: If (a/c)^2 - (b/c)^2 != 1
    """
    if n < 3:
        raise DegenerateError(f"need a polygon: n={n}")
    if abs(a_over_c ** 2 - b_over_c ** 2 - 1) > 1e-12 * max(1.0, a_over_c ** 2):
        raise DomainError("not on normalized confocal ellipse: (a/c)^2 - (b/c)^2 != 1")
    angles = theta + 2 * np.pi * np.arange(1, n + 1) / n
    points = a_over_c * np.cos(angles) + 1j * b_over_c * np.sin(angles)
    return [complex(z) for z in points]


def similarity_image(s: ConformalSimilarity, ellipse: Ellipse) -> Ellipse:
    """Image of an ellipse under z -> alpha + beta z."""
    scale = s.scale
    return Ellipse(
        center=s(ellipse.center),
        semi_major=ellipse.semi_major * scale,
        semi_minor=ellipse.semi_minor * scale,
        rotation=ellipse.rotation + s.rotation,
    )


def random_affine_map(rng: np.random.Generator, spread: float = 2.0) -> AffineMap:
    """Proper affine map with coefficients drawn from a complex normal."""
    while True:
        alpha, beta, gamma = (complex(*rng.normal(scale=spread, size=2)) for _ in range(3))
        if alpha != 0 and beta != 0 and abs(abs(alpha) - abs(beta)) > 1e-3 * spread:
            return AffineMap(alpha, beta, gamma)


def random_similarity(
    rng: np.random.Generator, spread: float = 2.0, shift: float = 2.0
) -> ConformalSimilarity:
    """Similarity z -> alpha + beta z with |beta| uniform in [1/spread, spread]
    and |alpha| <= shift |beta|, both with uniform direction.

    Use a small ``shift`` for root sets that are verified from their
    monomial coefficients.
    """
    beta = rng.uniform(1 / spread, spread) * cmath.exp(1j * rng.uniform(-math.pi, math.pi))
    alpha = beta * shift * math.sqrt(rng.uniform()) * cmath.exp(1j * rng.uniform(-math.pi, math.pi))
    return ConformalSimilarity(complex(alpha), complex(beta))


__all__ = [
    "apply_similarity",
    "apply_affine",
    "decompose",
    "factors",
    "recompose",
    "invert",
    "unit_circle_image",
    "unit_circle_foci",
    "rotated_root_images",
    "similarity_image",
    "random_affine_map",
    "random_similarity",
]
