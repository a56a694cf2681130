"""Unit tests for polynomial arithmetic and root finding"""
import cmath
import math

import numpy as np
import pytest

from src.core.affine import random_similarity
from src.core.config import Tolerances
from src.core.numeric import (
    cauchy_radius,
    critical_points,
    derivative,
    evaluate,
    find_roots,
    is_coincident,
    poly_from_roots,
    root_backward_error,
)
from src.errors import DegreeError, DomainError
from src.models.polynomial import ComplexPolynomial, PointMultiset


class TestComplexPolynomial:
    """Tests for the polynomial value type"""

    def test_trailing_zeros_trimmed(self):
        p = ComplexPolynomial([1, 2, 0, 0])
        assert p.degree == 1
        assert p.coeffs == (1 + 0j, 2 + 0j)

    def test_zero_polynomial(self):
        p = ComplexPolynomial([0, 0])
        assert p.is_zero
        assert p.degree == 0

    def test_non_finite_rejected(self):
        with pytest.raises(DomainError):
            ComplexPolynomial([1, float("nan")])

    def test_arithmetic(self):
        p = ComplexPolynomial([1, 1])
        q = ComplexPolynomial([-1, 1])
        assert (p * q).allclose(ComplexPolynomial([-1, 0, 1]))
        assert (p + q).allclose(ComplexPolynomial([0, 2]))
        assert (p - q).allclose(ComplexPolynomial([2]))
        assert (2 * p).allclose(ComplexPolynomial([2, 2]))

    def test_monic(self):
        assert ComplexPolynomial([2, 4]).monic().allclose(ComplexPolynomial([0.5, 1]))
        with pytest.raises(DomainError):
            ComplexPolynomial([0]).monic()


class TestPointMultiset:
    """Tests for multiset comparison"""

    def test_order_independent_equality(self):
        assert PointMultiset([1, 1j, -1]) == PointMultiset([-1, 1, 1j])

    def test_multiplicity(self):
        points = PointMultiset([0, 0, 1])
        assert points.multiplicity(0) == 2
        assert points.distinct() == [(0j, 2), (1 + 0j, 1)]

    def test_distance_uses_optimal_pairing(self):
        assert PointMultiset([0, 10]).distance_to([10.5, 0.25]) == pytest.approx(0.5)

    def test_distance_size_mismatch(self):
        with pytest.raises(DomainError):
            PointMultiset([0, 1]).distance_to([0])


class TestPolyFromRoots:
    """Tests for building polynomials from roots"""

    def test_difference_of_squares(self):
        assert poly_from_roots([1, -1]).allclose(ComplexPolynomial([-1, 0, 1]))

    def test_complex_roots(self):
        expected = ComplexPolynomial([0, 1j, -(1 + 1j), 1])
        assert poly_from_roots([0, 1, 1j]).allclose(expected, atol=1e-15)

    def test_empty_product(self):
        assert poly_from_roots([]).coeffs == (1 + 0j,)

    def test_vanishes_at_roots(self, rng):
        for _ in range(20):
            n = int(rng.integers(1, 12))
            roots = rng.uniform(-1, 1, n) + 1j * rng.uniform(-1, 1, n)
            p = poly_from_roots(roots)
            bound = 1e-10 * max(1.0, float(np.abs(roots).max())) ** n
            assert all(abs(evaluate(p, r)) <= bound for r in roots)


class TestDerivativeAndEvaluate:
    """Tests for derivative and Horner evaluation"""

    def test_power_rule(self):
        assert derivative(ComplexPolynomial([-1, 0, 0, 1])).allclose(ComplexPolynomial([0, 0, 3]))
        assert derivative(ComplexPolynomial([25, 0, -6, 0, 1])).allclose(
            ComplexPolynomial([0, -12, 0, 4])
        )

    def test_constant_has_zero_derivative(self):
        assert derivative(ComplexPolynomial([7])).is_zero

    def test_linearity(self, rng):
        p = ComplexPolynomial(rng.normal(size=6) + 1j * rng.normal(size=6))
        q = ComplexPolynomial(rng.normal(size=4) + 1j * rng.normal(size=4))
        a, b = 2 - 1j, 0.5j
        lhs = derivative(a * p + b * q)
        rhs = a * derivative(p) + b * derivative(q)
        assert lhs.allclose(rhs, rtol=1e-14, atol=1e-14)

    def test_evaluate(self):
        assert evaluate(ComplexPolynomial([-1, 0, 1]), 2) == 3
        cubic = ComplexPolynomial([0, 1j, -(1 + 1j), 1])
        assert abs(evaluate(cubic, 1j)) < 1e-15
        assert evaluate(ComplexPolynomial([5 + 2j, 3, 1]), 0) == 5 + 2j


class TestFindRoots:
    """Tests for the Aberth-Ehrlich root finder"""

    def test_quadratic(self):
        assert find_roots(ComplexPolynomial([1, 0, 1])).matches([1j, -1j], 1e-12)

    def test_roots_of_unity(self):
        expected = [1, cmath.exp(2j * math.pi / 3), cmath.exp(-2j * math.pi / 3)]
        assert find_roots(ComplexPolynomial([-1, 0, 0, 1])).matches(expected, 1e-12)

    def test_zero_root_deflated(self):
        roots = find_roots(ComplexPolynomial([0, -12, 0, 4]))
        assert roots.matches([0, math.sqrt(3), -math.sqrt(3)], 1e-12)
        assert roots.multiplicity(0) == 1

    def test_linear(self):
        assert find_roots(ComplexPolynomial([2, 4])).points == (-0.5 + 0j,)

    def test_constant_rejected(self):
        with pytest.raises(DegreeError, match="no roots of a nonzero constant"):
            find_roots(ComplexPolynomial([7]))

    def test_zero_rejected(self):
        with pytest.raises(DegreeError, match="identically zero"):
            find_roots(ComplexPolynomial([0]))

    def test_triple_root_clustered(self):
        roots = find_roots(poly_from_roots([0.5, 0.5, 0.5, -1]))
        assert roots.matches([0.5, 0.5, 0.5, -1], 1e-4)

    def test_round_trip(self, rng):
        """Random separated root sets in the unit disk are recovered"""
        for _ in range(50):
            n = int(rng.integers(2, 11))
            while True:
                radius = np.sqrt(rng.uniform(0, 1, n))
                roots = radius * np.exp(2j * np.pi * rng.uniform(0, 1, n))
                gaps = np.abs(roots[:, None] - roots[None, :]) + np.eye(n)
                if gaps.min() >= 5e-2:
                    break
            found = find_roots(poly_from_roots(roots))
            assert len(found) == n
            assert found.distance_to(roots) <= 1e-8

    def test_backward_error_within_tolerance(self, rng):
        p = ComplexPolynomial(rng.normal(size=9) + 1j * rng.normal(size=9))
        tol = Tolerances().tol_root
        assert all(root_backward_error(p, r) <= tol for r in find_roots(p))

    def test_iteration_cap_is_respected(self):
        roots = find_roots(poly_from_roots([1, 2, 3, 4, 5]), max_iterations=1)
        assert len(roots) == 5

    def test_cauchy_radius_bounds_roots(self, rng):
        for _ in range(10):
            p = ComplexPolynomial(rng.normal(size=8) + 1j * rng.normal(size=8))
            radius = cauchy_radius(p.monic())
            assert all(abs(r) <= radius * (1 + 1e-9) for r in find_roots(p))


class TestCriticalPoints:
    """Tests for critical points"""

    def test_double_critical_point(self):
        crit = critical_points(ComplexPolynomial([-1, 0, 0, 1]))
        assert crit.points == (0j, 0j)

    def test_triangle(self):
        offset = (1 - 1j) / (3 * math.sqrt(2))
        expected = [(1 + 1j) / 3 + offset, (1 + 1j) / 3 - offset]
        assert critical_points(poly_from_roots([0, 1, 1j])).matches(expected, 1e-12)

    def test_rectangle(self, rectangle_polynomial):
        crit = critical_points(rectangle_polynomial)
        assert crit.matches([0, math.sqrt(3), -math.sqrt(3)], 1e-12)

    def test_linear_rejected(self):
        with pytest.raises(DegreeError, match="no critical points"):
            critical_points(ComplexPolynomial([1, 1]))

    def test_translated_square_triple_point(self):
        """A split triple critical point away from the origin is merged"""
        center = 2 + 1j
        crit = critical_points(poly_from_roots([center + w for w in (1, 1j, -1, -1j)]))
        assert crit.distinct() == [(crit.points[0], 3)]
        assert crit.matches([center] * 3, 1e-9)

    def test_close_distinct_points_kept(self):
        crit = critical_points(poly_from_roots([0, 1, 1 + 2e-3, 3j]))
        assert len(crit.distinct()) == 3

    def test_similarity_commutation(self, rng):
        """Critical points of the mapped roots are the mapped critical points"""
        for _ in range(20):
            n = int(rng.integers(3, 11))
            roots = rng.uniform(-1, 1, n) + 1j * rng.uniform(-1, 1, n)
            s = random_similarity(rng, shift=0.1)
            expected = np.asarray(s(critical_points(poly_from_roots(roots)).array))
            mapped = critical_points(poly_from_roots(s(roots)))
            scale = max(1.0, s.scale) * max(1.0, float(np.abs(roots).max()))
            assert mapped.distance_to(expected) <= 1e-7 * scale


class TestCoincidence:
    """Tests for the symmetric-function coincidence test"""

    def test_equal_points(self):
        assert is_coincident([1 + 1j] * 3, 1.0, 1e-9)

    def test_rounding_split(self):
        assert is_coincident([1, 1 + 1e-6], 1.0, 1e-9)
        assert is_coincident(1 + 1e-5 * np.exp(2j * np.pi * np.arange(3) / 3), 1.0, 1e-9)

    def test_separated_points(self):
        assert not is_coincident([1, 1.1], 1.0, 1e-9)
        assert not is_coincident([0, 1e-3, 2e-3], 1.0, 1e-9)

    def test_single_point(self):
        assert is_coincident([5j], 1.0, 1e-9)
