"""Plane geometry value types: similarities, affine maps, ellipses.

The plane is the complex line; a point x + iy is a Python ``complex``.
Maps are stored by their coefficients, never as closures, so they can be
compared, pickled and serialized.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from src.errors import DegenerateError, DomainError
from src.models.polynomial import as_complex

HALF_PI = math.pi / 2


def wrap_angle(angle: float) -> float:
    """Reduce an angle to (-pi, pi], sending -pi to pi."""
    wrapped = math.remainder(angle, 2 * math.pi)
    return math.pi if wrapped <= -math.pi else wrapped


def wrap_axis_angle(angle: float) -> float:
    """Reduce an axis direction to (-pi/2, pi/2] (axes are undirected)."""
    wrapped = math.remainder(angle, math.pi)
    return HALF_PI if wrapped <= -HALF_PI else wrapped


@dataclass(frozen=True)
class ConformalSimilarity:
    """S(z) = alpha + beta * z with beta != 0.

    Attributes:
        alpha: Translation
        beta: Rotation-scale factor
    """

    alpha: complex = 0j
    beta: complex = 1 + 0j

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", as_complex(self.alpha))
        object.__setattr__(self, "beta", as_complex(self.beta))
        if self.beta == 0:
            raise DegenerateError("conformal similarity requires beta != 0")

    def __call__(self, z):
        return self.alpha + self.beta * z

    @classmethod
    def identity(cls) -> "ConformalSimilarity":
        return cls(0j, 1 + 0j)

    @property
    def scale(self) -> float:
        return abs(self.beta)

    @property
    def rotation(self) -> float:
        return cmath.phase(self.beta)

    def compose(self, inner: "ConformalSimilarity") -> "ConformalSimilarity":
        """Return ``self ∘ inner``."""
        return ConformalSimilarity(self.alpha + self.beta * inner.alpha, self.beta * inner.beta)

    def inverse(self) -> "ConformalSimilarity":
        return ConformalSimilarity(-self.alpha / self.beta, 1 / self.beta)


@dataclass(frozen=True)
class AffineMap:
    """Phi(z) = alpha*z + beta*conj(z) + gamma.

    Any finite coefficients are representable so that the identity and
    compositions stay closed; operations that need a proper affine map
    (alpha != 0, beta != 0, |alpha| != |beta|) check it themselves.
    """

    alpha: complex = 1 + 0j
    beta: complex = 0j
    gamma: complex = 0j

    def __post_init__(self) -> None:
        for name in ("alpha", "beta", "gamma"):
            object.__setattr__(self, name, as_complex(getattr(self, name)))

    def __call__(self, z):
        return self.alpha * z + self.beta * np.conj(z) + self.gamma

    @classmethod
    def identity(cls) -> "AffineMap":
        return cls(1 + 0j, 0j, 0j)

    @classmethod
    def from_similarity(cls, s: ConformalSimilarity) -> "AffineMap":
        return cls(s.beta, 0j, s.alpha)

    @property
    def is_proper(self) -> bool:
        """alpha and beta both nonzero."""
        return self.alpha != 0 and self.beta != 0

    @property
    def jacobian(self) -> float:
        """|alpha|^2 - |beta|^2; negative for orientation-reversing maps."""
        return abs(self.alpha) ** 2 - abs(self.beta) ** 2

    def linear(self, v):
        """Apply the linear part (no translation)."""
        return self.alpha * v + self.beta * np.conj(v)

    def compose(self, inner: "AffineMap") -> "AffineMap":
        """Return ``self ∘ inner`` as a single map."""
        a1, b1, g1 = self.alpha, self.beta, self.gamma
        a2, b2, g2 = inner.alpha, inner.beta, inner.gamma
        return AffineMap(
            a1 * a2 + b1 * b2.conjugate(),
            a1 * b2 + b1 * a2.conjugate(),
            a1 * g2 + b1 * g2.conjugate() + g1,
        )

    def isclose(self, other: "AffineMap", rel_tol: float = 1e-12) -> bool:
        scale = max(abs(self.alpha), abs(self.beta), abs(self.gamma), 1e-300)
        return all(
            abs(x - y) <= rel_tol * scale
            for x, y in (
                (self.alpha, other.alpha),
                (self.beta, other.beta),
                (self.gamma, other.gamma),
            )
        )


@dataclass(frozen=True)
class AffineDecomposition:
    """Parameters of Phi = S ∘ A ∘ R.

    R(z) = e^{i theta} z, A(z) = (a+b)/(2c) z + (a-b)/(2c) conj(z),
    S(z) = c e^{i phi} z + gamma, with c = sqrt(a^2 - b^2).
    """

    a: float
    b: float
    theta: float
    phi: float
    gamma: complex = 0j
    c: float = field(init=False)

    def __post_init__(self) -> None:
        a, b = float(self.a), float(self.b)
        if not (math.isfinite(a) and math.isfinite(b)):
            raise DomainError("non-finite decomposition parameters")
        if not a > abs(b) > 0:
            raise DegenerateError(f"decomposition requires a > |b| > 0, got a={a}, b={b}")
        for name in ("theta", "phi"):
            value = float(getattr(self, name))
            if not -math.pi < value <= math.pi:
                raise DomainError(f"{name}={value} outside (-pi, pi]")
            object.__setattr__(self, name, value)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "gamma", as_complex(self.gamma))
        object.__setattr__(self, "c", math.sqrt((a - b) * (a + b)))


@dataclass(frozen=True)
class Ellipse:
    """Ellipse center + e^{i rotation} (semi_major cos t + i semi_minor sin t).

    Canonical form is enforced on construction: axes are swapped if given
    in the wrong order, rotation is reduced to (-pi/2, pi/2] and circles get
    rotation 0. ``semi_minor == 0`` is a segment and is allowed.
    """

    center: complex
    semi_major: float
    semi_minor: float
    rotation: float = 0.0

    def __post_init__(self) -> None:
        major, minor = float(self.semi_major), float(self.semi_minor)
        rotation = float(self.rotation)
        if not all(math.isfinite(x) for x in (major, minor, rotation)):
            raise DomainError("non-finite ellipse parameters")
        if major < 0 or minor < 0:
            raise DomainError("ellipse semi-axes must be non-negative")
        if minor > major:
            major, minor = minor, major
            rotation += HALF_PI
        if major == 0:
            raise DegenerateError("ellipse with zero semi-major axis")
        if math.isclose(major, minor, rel_tol=1e-12):
            rotation = 0.0
        object.__setattr__(self, "center", as_complex(self.center))
        object.__setattr__(self, "semi_major", major)
        object.__setattr__(self, "semi_minor", minor)
        object.__setattr__(self, "rotation", wrap_axis_angle(rotation))

    @classmethod
    def circle(cls, center: complex, radius: float) -> "Ellipse":
        return cls(center, radius, radius, 0.0)

    @property
    def focal_distance(self) -> float:
        """Half-distance between the foci."""
        a, b = self.semi_major, self.semi_minor
        return math.sqrt(max((a - b) * (a + b), 0.0))

    @property
    def eccentricity(self) -> float:
        return self.focal_distance / self.semi_major

    @property
    def is_circle(self) -> bool:
        return self.semi_major == self.semi_minor

    @property
    def is_degenerate(self) -> bool:
        return self.semi_minor == 0

    @property
    def axis(self) -> complex:
        """Unit vector along the major axis."""
        return cmath.rect(1.0, self.rotation)

    def point(self, t):
        """Trace point at parameter t (scalar or array)."""
        local = self.semi_major * np.cos(t) + 1j * self.semi_minor * np.sin(t)
        value = self.center + self.axis * local
        return complex(value) if np.ndim(value) == 0 else value


@dataclass(frozen=True)
class ConfocalParameter:
    """Member index s > 0 of the ellipses cosh s cos t + i sinh s sin t."""

    s: float

    def __post_init__(self) -> None:
        s = float(self.s)
        if not math.isfinite(s):
            raise DomainError("non-finite confocal parameter")
        if s <= 0:
            raise DegenerateError("degenerate segment [-1, 1]: confocal parameter must be > 0")
        object.__setattr__(self, "s", s)


__all__ = [
    "wrap_angle",
    "wrap_axis_angle",
    "ConformalSimilarity",
    "AffineMap",
    "AffineDecomposition",
    "Ellipse",
    "ConfocalParameter",
]
