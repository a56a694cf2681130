"""Result records of the theorem layer.

Plain frozen dataclasses; the pydantic documents in
``src.models.schemas.report`` serialize them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Iterable, List, Optional, Tuple

import numpy as np

from src.errors import DegenerateError
from src.models.geometry import Ellipse
from src.models.polynomial import Number, as_complex_array


@dataclass(frozen=True)
class Polygon:
    """Ordered vertex list, expected counterclockwise.

    Raises:
        DegenerateError: Fewer than 3 vertices ("need a polygon") or repeated vertices
    """

    vertices: Tuple[complex, ...]

    def __init__(self, vertices: Iterable[Number]):
        arr = as_complex_array(vertices)
        if arr.size < 3:
            raise DegenerateError(f"need a polygon: got {arr.size} vertices")
        for i, j in combinations(range(arr.size), 2):
            if arr[i] == arr[j]:
                raise DegenerateError(f"repeated vertex {complex(arr[i])!r}")
        object.__setattr__(self, "vertices", tuple(complex(z) for z in arr))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def array(self) -> np.ndarray:
        return np.array(self.vertices, dtype=np.complex128)

    @property
    def scale(self) -> float:
        """Diameter: the largest pairwise vertex distance."""
        v = self.array
        return float(np.abs(v[:, None] - v[None, :]).max())

    def edges(self) -> List[Tuple[complex, complex]]:
        return [(self.vertices[k], self.vertices[(k + 1) % self.n]) for k in range(self.n)]

    def turn_crosses(self) -> np.ndarray:
        """Cross product of consecutive edge vectors at every vertex."""
        v = self.array
        e_in = v - np.roll(v, 1)
        e_out = np.roll(v, -1) - v
        return (np.conj(e_in) * e_out).imag

    def is_convex(self, tol: float = 1e-12) -> bool:
        """Strictly convex and counterclockwise, crosses > tol * scale^2."""
        return bool(np.all(self.turn_crosses() > tol * self.scale ** 2))

    def rolled(self, shift: int) -> "Polygon":
        return Polygon(np.roll(self.array, -shift))


@dataclass(frozen=True)
class RegularityFit:
    """Fourier witness v_k ≈ alpha w^k + beta w^-k + gamma, w = e^{2 pi i/n}.

    Attributes:
        residual: RMS vertex deviation from the model (Parseval: the energy
            in the Fourier modes other than 0, 1, n-1)
        scale: Polygon diameter the tolerance was applied against
        accepted: Residual within tolerance and |alpha| != |beta|
        reason: Rejection diagnostic
    """

    alpha: complex
    beta: complex
    gamma: complex
    n: int
    residual: float
    scale: float
    accepted: bool
    reason: Optional[str] = None
    similarity_image: bool = False

    @property
    def relative_residual(self) -> float:
        return self.residual / self.scale if self.scale > 0 else math.inf


@dataclass(frozen=True)
class CriticalForm:
    """Fit of critical points to alpha + beta cos(k pi/n), k = 1..n-1."""

    alpha: complex
    beta: complex
    n: int
    residual: float
    spread: float
    accepted: bool
    reason: Optional[str] = None

    @property
    def extreme_points(self) -> Tuple[complex, complex]:
        """alpha ± beta cos(pi/n): the predicted foci."""
        offset = self.beta * math.cos(math.pi / self.n)
        return (self.alpha + offset, self.alpha - offset)

    @property
    def relative_residual(self) -> float:
        return self.residual / self.spread if self.spread > 0 else math.inf


class VerificationStatus(str, Enum):
    """Verdict classes of a verification run."""

    PASS = "pass"
    FAIL = "fail"
    HYPOTHESIS_NOT_SATISFIED = "hypothesis-not-satisfied"


@dataclass(frozen=True)
class VerificationReport:
    """Stage-by-stage record of a theorem check.

    Stages that could not run (because an earlier stage rejected) hold
    ``None``; ``diagnostics`` says why.
    """

    degree: int
    status: VerificationStatus
    critical_form: Optional[CriticalForm]
    regularity: Optional[RegularityFit]
    ellipse: Optional[Ellipse]
    scale: float
    midpoint_residual: Optional[float] = None
    tangency_residuals: Tuple[float, ...] = ()
    focus_error: Optional[float] = None
    level_spread: Optional[float] = None
    roots: Tuple[complex, ...] = ()
    critical_points: Tuple[complex, ...] = ()
    foci: Optional[Tuple[complex, complex]] = None
    diagnostics: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def verdict(self) -> bool:
        return self.status is VerificationStatus.PASS

    @property
    def regular(self) -> bool:
        return self.regularity is not None and self.regularity.accepted

    @property
    def diagnostic(self) -> str:
        return "; ".join(self.diagnostics)


@dataclass(frozen=True)
class CharacterizationResult:
    """Both sides of the characterization equivalence for one polygon.

    ``inellipse_side`` excludes similarity images of regular polygons
    (beta = 0), for which the critical-point side is excluded by beta != 0.
    """

    inellipse_side: bool
    critical_side: bool
    regularity: RegularityFit
    critical_form: CriticalForm

    @property
    def agree(self) -> bool:
        return self.inellipse_side == self.critical_side


__all__ = [
    "Polygon",
    "RegularityFit",
    "CriticalForm",
    "VerificationStatus",
    "VerificationReport",
    "CharacterizationResult",
]
