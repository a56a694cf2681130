"""Polynomial and point-multiset value types.

Coefficients are stored in ascending degree order, the same order used by
``numpy.polynomial.polynomial`` and by the instance document format.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple, Union

import numpy as np
from numpy.polynomial import polynomial as P
from scipy.optimize import linear_sum_assignment

from src.errors import DomainError

Number = Union[complex, float, int]


def as_complex(value: Number) -> complex:
    """Coerce a scalar to ``complex`` and reject NaN / infinity.

    Raises:
        DomainError: If either component is not finite
    """
    z = complex(value)
    if not cmath.isfinite(z):
        raise DomainError(f"non-finite complex value: {z!r}")
    return z


def as_complex_array(values: Iterable[Number]) -> np.ndarray:
    """Coerce a sequence to a finite complex128 array."""
    arr = np.asarray(list(values), dtype=np.complex128).reshape(-1)
    if not np.all(np.isfinite(arr)):
        raise DomainError("non-finite complex value in input")
    return arr


@dataclass(frozen=True)
class ComplexPolynomial:
    """Polynomial p(z) = sum(coeffs[k] * z**k).

    Trailing zero coefficients are trimmed on construction, so the leading
    coefficient is nonzero unless the polynomial is identically zero, in
    which case ``coeffs == (0j,)``.

    Example:
        >>> p = ComplexPolynomial([25, 0, -6, 0, 1])   # z^4 - 6z^2 + 25
        >>> p.degree
        4
    """

    coeffs: Tuple[complex, ...]

    def __init__(self, coeffs: Iterable[Number]):
        arr = as_complex_array(coeffs)
        nonzero = np.flatnonzero(arr)
        if nonzero.size == 0:
            trimmed: Tuple[complex, ...] = (0j,)
        else:
            trimmed = tuple(complex(c) for c in arr[: nonzero[-1] + 1])
        object.__setattr__(self, "coeffs", trimmed)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (0j,)

    @property
    def leading(self) -> complex:
        return self.coeffs[-1]

    @property
    def array(self) -> np.ndarray:
        """Coefficients as a fresh complex128 array."""
        return np.array(self.coeffs, dtype=np.complex128)

    def __call__(self, z):
        values = P.polyval(z, self.array)
        return complex(values) if np.ndim(values) == 0 else values

    def __add__(self, other: "ComplexPolynomial") -> "ComplexPolynomial":
        return ComplexPolynomial(P.polyadd(self.array, other.array))

    def __sub__(self, other: "ComplexPolynomial") -> "ComplexPolynomial":
        return ComplexPolynomial(P.polysub(self.array, other.array))

    def __mul__(self, other: Union["ComplexPolynomial", Number]) -> "ComplexPolynomial":
        if isinstance(other, ComplexPolynomial):
            return ComplexPolynomial(P.polymul(self.array, other.array))
        return ComplexPolynomial(self.array * as_complex(other))

    __rmul__ = __mul__

    def monic(self) -> "ComplexPolynomial":
        if self.is_zero:
            raise DomainError("identically zero polynomial has no monic form")
        return ComplexPolynomial(self.array / self.leading)

    def allclose(self, other: "ComplexPolynomial", rtol: float = 1e-12, atol: float = 0.0) -> bool:
        if self.degree != other.degree:
            return False
        return bool(np.allclose(self.array, other.array, rtol=rtol, atol=atol))

    def __repr__(self) -> str:
        terms = ", ".join(f"{c:.6g}" for c in self.coeffs)
        return f"ComplexPolynomial([{terms}])"


@dataclass(frozen=True)
class PointMultiset:
    """Unordered collection of complex points, repeated once per multiplicity.

    Points are kept sorted by (real, imag) so equal multisets compare equal.
    """

    points: Tuple[complex, ...]

    def __init__(self, points: Iterable[Number] = ()):
        arr = as_complex_array(points)
        order = np.lexsort((arr.imag, arr.real))
        object.__setattr__(self, "points", tuple(complex(z) for z in arr[order]))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[complex]:
        return iter(self.points)

    @property
    def array(self) -> np.ndarray:
        return np.array(self.points, dtype=np.complex128)

    def distinct(self) -> List[Tuple[complex, int]]:
        """Distinct points with their multiplicities, in sorted order."""
        result: List[Tuple[complex, int]] = []
        for z in self.points:
            if result and result[-1][0] == z:
                result[-1] = (z, result[-1][1] + 1)
            else:
                result.append((z, 1))
        return result

    def multiplicity(self, z: Number) -> int:
        target = complex(z)
        return sum(1 for w in self.points if w == target)

    def distance_to(self, other: Union["PointMultiset", Sequence[Number]]) -> float:
        """Largest pairing distance under the optimal one-to-one pairing.

        The pairing minimizes the total distance (Hungarian assignment);
        the returned value is the worst matched pair of that pairing.

        Raises:
            DomainError: If the multisets have different sizes
        """
        theirs = other.array if isinstance(other, PointMultiset) else as_complex_array(other)
        mine = self.array
        if mine.size != theirs.size:
            raise DomainError(
                f"cannot pair multisets of sizes {mine.size} and {theirs.size}"
            )
        if mine.size == 0:
            return 0.0
        cost = np.abs(mine[:, None] - theirs[None, :])
        rows, cols = linear_sum_assignment(cost)
        return float(cost[rows, cols].max())

    def matches(self, other: Union["PointMultiset", Sequence[Number]], tol: float) -> bool:
        return self.distance_to(other) <= tol


__all__ = [
    "Number",
    "as_complex",
    "as_complex_array",
    "ComplexPolynomial",
    "PointMultiset",
]
