"""Chebyshev polynomials on real and complex arguments.

Values come from the three-term recurrence; the radical formula
``T_n(z) = ((z + sqrt(z^2-1))^n + (z - sqrt(z^2-1))^n) / 2`` is kept only as
a cross-check because it is branch-sensitive term by term.
"""

from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass
from typing import List

import numpy as np
from numpy.polynomial import polynomial as P

from src.errors import DegreeError, DomainError

logger = logging.getLogger(__name__)

# exp(-300) is far below double precision relative to the growing term
_LOG_FORM_THRESHOLD = 300.0
_NORMALIZATION_TOL = 1e-12


def _check_index(n: int) -> int:
    if int(n) != n or n < 0:
        raise DomainError(f"Chebyshev index must be a non-negative integer, got {n}")
    return int(n)


def _scalar_or_array(values):
    return complex(values) if np.ndim(values) == 0 else values


def cheb_t(n: int, z):
    """T_n(z) by the recurrence T_{k+1} = 2z T_k - T_{k-1}.

    Example:
        >>> cheb_t(3, 0.5)
        (-1+0j)
    """
    n = _check_index(n)
    z = np.asarray(z, dtype=np.complex128)
    prev, cur = np.ones_like(z), z
    if n == 0:
        return _scalar_or_array(prev)
    for _ in range(n - 1):
        prev, cur = cur, 2 * z * cur - prev
    return _scalar_or_array(cur)


def cheb_u(n: int, z):
    """U_n(z) by the recurrence with U_0 = 1, U_1 = 2z."""
    n = _check_index(n)
    z = np.asarray(z, dtype=np.complex128)
    prev, cur = np.ones_like(z), 2 * z
    if n == 0:
        return _scalar_or_array(prev)
    for _ in range(n - 1):
        prev, cur = cur, 2 * z * cur - prev
    return _scalar_or_array(cur)


def cheb_t_closed_form(n: int, z) -> complex:
    """T_n(z) from the radical formula, principal square root.

    (z + w)(z - w) = 1 for w = sqrt(z^2 - 1), so the sum is symmetric in
    the branch even though each summand is not.
    """
    n = _check_index(n)
    z = complex(z)
    root = z + cmath.sqrt(z * z - 1)
    return 0.5 * (root ** n + root ** (-n))


def u_roots(n: int) -> List[float]:
    """The n-1 roots cos(k pi/n) of U_{n-1}, decreasing.

    Raises:
        DegreeError: If n < 2 ("empty root set")
    """
    if n < 2:
        raise DegreeError(f"empty root set: U_{n - 1} has no roots")
    return [math.cos(k * math.pi / n) for k in range(1, n)]


def t_coefficients(n: int) -> np.ndarray:
    """Integer power-basis coefficients of T_n, ascending."""
    n = _check_index(n)
    prev = np.array([1], dtype=np.int64)
    cur = np.array([0, 1], dtype=np.int64)
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, 2 * np.concatenate(([0], cur)) - np.pad(prev, (0, 2))
    return cur


def u_coefficients(n: int) -> np.ndarray:
    """Integer power-basis coefficients of U_n, ascending."""
    n = _check_index(n)
    prev = np.array([1], dtype=np.int64)
    cur = np.array([0, 2], dtype=np.int64)
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, 2 * np.concatenate(([0], cur)) - np.pad(prev, (0, 2))
    return cur


def derivative_identity_check(n: int, z) -> float:
    """|T_n'(z) - n U_{n-1}(z)| with T_n' from the coefficient form.

    Raises:
        DegreeError: If n < 1
    """
    if n < 1:
        raise DegreeError("derivative identity needs n >= 1")
    d_coeffs = P.polyder(t_coefficients(n).astype(np.float64))
    lhs = complex(P.polyval(complex(z), d_coeffs))
    return abs(lhs - n * complex(cheb_u(n - 1, z)))


@dataclass(frozen=True)
class EllipseTraceParams:
    """Normalized ellipse a/c cos t + i b/c sin t with (a/c)^2 - (b/c)^2 = 1.

    ``theta`` shifts the trace parameter, so the point at t is taken at
    angle t + theta.
    """

    a_over_c: float
    b_over_c: float
    theta: float = 0.0

    def __post_init__(self) -> None:
        a, b = float(self.a_over_c), float(self.b_over_c)
        if not (math.isfinite(a) and math.isfinite(b) and math.isfinite(self.theta)):
            raise DomainError("non-finite ellipse trace parameters")
        if not (a > 1 and b > 0):
            raise DomainError(f"need a/c > 1 and b/c > 0, got a/c={a}, b/c={b}")
        if abs(a * a - b * b - 1) > _NORMALIZATION_TOL * max(1.0, a * a):
            raise DomainError("not on normalized confocal ellipse: (a/c)^2 - (b/c)^2 != 1")
        object.__setattr__(self, "a_over_c", a)
        object.__setattr__(self, "b_over_c", b)
        object.__setattr__(self, "theta", float(self.theta))

    @classmethod
    def from_confocal(cls, s: float, theta: float = 0.0) -> "EllipseTraceParams":
        """Member s of the family cosh s cos t + i sinh s sin t."""
        return cls(math.cosh(s), math.sinh(s), theta)

    @property
    def log_growth(self) -> float:
        """log((a+b)/c); the modulus of T_n on the ellipse is about e^{n * log_growth}/2."""
        return math.log(self.a_over_c + self.b_over_c)


def ellipse_point(params: EllipseTraceParams, t):
    u = np.asarray(t, dtype=np.float64) + params.theta
    return _scalar_or_array(params.a_over_c * np.cos(u) + 1j * params.b_over_c * np.sin(u))


def cheb_on_ellipse(n: int, params: EllipseTraceParams, t):
    """T_n on the trace, from 1/2 ((a+b)/c)^n e^{int} + 1/2 ((a-b)/c)^n e^{-int}.

    Both terms are evaluated as exponentials of their logarithms so large
    n does not overflow the power before the phase is applied.
    """
    n = _check_index(n)
    u = np.asarray(t, dtype=np.float64) + params.theta
    growth = n * params.log_growth
    value = 0.5 * np.exp(growth + 1j * n * u)
    if growth <= _LOG_FORM_THRESHOLD:
        decay = n * math.log(params.a_over_c - params.b_over_c)
        value = value + 0.5 * np.exp(decay - 1j * n * u)
    return _scalar_or_array(value)


def connection_identity(a: float, b: float, t: float) -> float:
    """Residual of sqrt(z^2 - 1) = ±(b cos t + i a sin t) for z = a cos t + i b sin t.

    The sign is chosen to minimize the residual.

    Raises:
        DomainError: If not a > b > 0 with a^2 - b^2 = 1
    """
    if not (a > b > 0) or abs(a * a - b * b - 1) > _NORMALIZATION_TOL * max(1.0, a * a):
        raise DomainError(f"not on normalized confocal ellipse: a={a}, b={b}")
    z = complex(a * math.cos(t), b * math.sin(t))
    root = cmath.sqrt(z * z - 1)
    target = complex(b * math.cos(t), a * math.sin(t))
    return min(abs(root - target), abs(root + target))


def chebyshev_level_roots(n: int, level: complex) -> np.ndarray:
    """The n solutions of T_n(z) = level, cos((arccos(level) + 2 pi k)/n)."""
    n = _check_index(n)
    if n == 0:
        raise DegreeError("T_0 is constant")
    base = np.arccos(np.complex128(level))
    k = np.arange(n)
    return np.cos((base + 2 * np.pi * k) / n)


@dataclass(frozen=True)
class LemmaCheck:
    """Outcome of a periodicity sweep on one confocal ellipse."""

    n: int
    s: float
    grid: int
    periodicity: float
    closed_form_gap: float

    def passed(self, tol: float = 1e-9) -> bool:
        return self.periodicity <= tol and self.closed_form_gap <= tol


def periodicity_check(n: int, s: float, grid: int = 100) -> LemmaCheck:
    """Sweep f(t) = T_n(cosh s cos t + i sinh s sin t) over ``grid`` points.

    ``periodicity`` is max |f(t) - f(t + 2 pi/n)| / max(1, |f(t)|) and
    ``closed_form_gap`` compares the closed form with the recurrence at
    the same points, relative in the same way.
    """
    if n < 1:
        raise DegreeError("periodicity needs n >= 1")
    if grid < 1:
        raise DomainError("grid must contain at least one point")
    params = EllipseTraceParams.from_confocal(s)
    t = np.linspace(0.0, 2 * np.pi, grid, endpoint=False)
    values = np.asarray(cheb_on_ellipse(n, params, t))
    shifted = np.asarray(cheb_on_ellipse(n, params, t + 2 * np.pi / n))
    direct = np.asarray(cheb_t(n, ellipse_point(params, t)))
    weight = np.maximum(1.0, np.abs(values))
    periodicity = float(np.max(np.abs(values - shifted) / weight))
    gap = float(np.max(np.abs(values - direct) / weight))
    logger.debug(f"Lemma sweep n={n} s={s}: periodicity={periodicity:.3g} gap={gap:.3g}")
    return LemmaCheck(n=n, s=float(s), grid=grid, periodicity=periodicity, closed_form_gap=gap)


__all__ = [
    "cheb_t",
    "cheb_u",
    "cheb_t_closed_form",
    "u_roots",
    "t_coefficients",
    "u_coefficients",
    "derivative_identity_check",
    "EllipseTraceParams",
    "ellipse_point",
    "cheb_on_ellipse",
    "connection_identity",
    "chebyshev_level_roots",
    "LemmaCheck",
    "periodicity_check",
]
