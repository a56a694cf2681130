"""Unit tests for Chebyshev polynomials and the confocal periodicity sweep"""
import math

import numpy as np
from numpy.polynomial import chebyshev as C
import pytest

from src.core.chebyshev import (
    EllipseTraceParams,
    cheb_on_ellipse,
    cheb_t,
    cheb_t_closed_form,
    cheb_u,
    chebyshev_level_roots,
    connection_identity,
    derivative_identity_check,
    ellipse_point,
    periodicity_check,
    t_coefficients,
    u_coefficients,
    u_roots,
)
from src.errors import DegreeError, DomainError


class TestChebyshevValues:
    """Tests for T_n and U_n"""

    def test_t_examples(self):
        assert cheb_t(3, 0.5) == pytest.approx(-1)
        assert cheb_t(5, math.cosh(1)) == pytest.approx(math.cosh(5), rel=1e-12)
        assert cheb_t(0, 3 + 4j) == 1

    def test_u_examples(self):
        assert abs(cheb_u(2, 0.5)) < 1e-15
        assert cheb_u(1, 2 - 1j) == pytest.approx(4 - 2j)
        assert cheb_u(2, 1) == pytest.approx(3)

    def test_cosine_identity(self, rng):
        theta = rng.uniform(0, math.pi, 20)
        for n in range(8):
            np.testing.assert_allclose(cheb_t(n, np.cos(theta)), np.cos(n * theta), atol=1e-12)

    def test_array_input(self):
        values = cheb_t(2, np.array([0.0, 1.0, 2.0]))
        np.testing.assert_allclose(values, [-1, 1, 7])

    def test_negative_index_rejected(self):
        with pytest.raises(DomainError):
            cheb_t(-1, 0.5)

    def test_closed_form_agrees_with_recurrence(self, rng):
        for _ in range(50):
            z = complex(*rng.uniform(-2.1, 2.1, 2))
            if abs(z) > 3:
                continue
            for n in range(13):
                recurrence = cheb_t(n, z)
                closed = cheb_t_closed_form(n, z)
                assert abs(recurrence - closed) <= 1e-9 * max(1.0, abs(recurrence))


class TestRootsAndCoefficients:
    """Tests for U_{n-1} roots and integer coefficients"""

    def test_u_roots(self):
        assert u_roots(3) == pytest.approx([0.5, -0.5])
        assert u_roots(4) == pytest.approx([math.sqrt(2) / 2, 0, -math.sqrt(2) / 2], abs=1e-15)
        assert u_roots(2) == pytest.approx([0], abs=1e-15)

    def test_u_roots_empty(self):
        with pytest.raises(DegreeError, match="empty root set"):
            u_roots(1)

    def test_t_coefficients(self):
        assert t_coefficients(4).tolist() == [1, 0, -8, 0, 8]
        assert u_coefficients(2).tolist() == [-1, 0, 4]

    def test_t_coefficients_match_numpy(self):
        for n in range(0, 21):
            expected = C.cheb2poly([0] * n + [1])
            assert t_coefficients(n).tolist() == np.rint(expected).astype(int).tolist()

    def test_derivative_identity_integer(self):
        """T_n' = n U_{n-1} coefficient by coefficient"""
        for n in range(1, 13):
            t = t_coefficients(n)
            derived = [k * int(t[k]) for k in range(1, n + 1)]
            assert derived == (n * u_coefficients(n - 1)).tolist()

    def test_derivative_identity_check(self):
        assert derivative_identity_check(3, 0.7) <= 1e-12
        assert derivative_identity_check(8, 1 + 2j) <= 1e-9 * abs(8 * cheb_u(7, 1 + 2j))
        assert derivative_identity_check(1, 5j) == 0

    def test_level_roots(self, rng):
        level = complex(*rng.normal(size=2))
        for z in chebyshev_level_roots(6, level):
            assert abs(cheb_t(6, z) - level) <= 1e-10 * max(1.0, abs(level))


class TestEllipseTrace:
    """Tests for T_n on confocal ellipses"""

    def test_params_validated(self):
        with pytest.raises(DomainError, match="not on normalized confocal ellipse"):
            EllipseTraceParams(2.0, 1.0)
        with pytest.raises(DomainError):
            EllipseTraceParams(0.5, 0.5)

    def test_value_at_vertex(self):
        params = EllipseTraceParams.from_confocal(1.0)
        assert cheb_on_ellipse(5, params, 0.0) == pytest.approx(math.cosh(5), rel=1e-12)

    def test_degree_one_is_trace(self):
        params = EllipseTraceParams.from_confocal(0.7)
        t = 1.1
        assert cheb_on_ellipse(1, params, t) == pytest.approx(ellipse_point(params, t), abs=1e-14)

    def test_periodicity(self, rng):
        for n in range(2, 13):
            params = EllipseTraceParams.from_confocal(rng.uniform(0.1, 2.0), rng.uniform(-1, 1))
            t = np.linspace(0, 2 * np.pi, 100, endpoint=False)
            f = cheb_on_ellipse(n, params, t)
            g = cheb_on_ellipse(n, params, t + 2 * np.pi / n)
            assert np.all(np.abs(f - g) <= 1e-9 * np.maximum(1.0, np.abs(f)))

    def test_value_taken_n_times(self, rng):
        params = EllipseTraceParams.from_confocal(1.0)
        n = 5
        theta = rng.uniform(0, 2 * np.pi)
        values = cheb_on_ellipse(n, params, theta + 2 * np.pi * np.arange(n) / n)
        assert np.ptp(np.abs(values - values[0])) <= 1e-9 * abs(values[0])
        other = cheb_on_ellipse(n, params, theta + np.pi / (3 * n))
        assert abs(other - values[0]) > 1e3 * 1e-9 * abs(values[0])

    def test_large_degree_log_form(self):
        params = EllipseTraceParams.from_confocal(2.0)
        value = cheb_on_ellipse(200, params, 0.0)
        assert math.isfinite(abs(value))
        assert math.log(abs(value)) == pytest.approx(400 - math.log(2), rel=1e-12)


class TestConnectionIdentity:
    """Tests for sqrt(z^2 - 1) on the ellipse"""

    def test_real_axis(self):
        assert connection_identity(math.cosh(1), math.sinh(1), 0.0) < 1e-14

    def test_imaginary_axis_sign_fix(self):
        assert connection_identity(math.cosh(1), math.sinh(1), math.pi / 2) < 1e-14

    def test_generic(self):
        assert connection_identity(math.cosh(2), math.sinh(2), 1.3) <= 1e-12

    def test_precondition(self):
        with pytest.raises(DomainError, match="not on normalized confocal ellipse"):
            connection_identity(2.0, 1.0, 0.0)


class TestPeriodicityCheck:
    """Tests for the periodicity sweep record"""

    @pytest.mark.parametrize("n", range(1, 13))
    @pytest.mark.parametrize("s", [0.1, 0.5, 1.0, 2.0])
    def test_sweep_passes(self, n, s):
        check = periodicity_check(n, s, 100)
        assert check.passed(1e-9), check

    def test_thin_ellipse_stress(self):
        assert periodicity_check(12, 0.1, 1000).passed(1e-9)

    def test_degree_one_trivial(self):
        check = periodicity_check(1, 0.3)
        assert check.periodicity <= 1e-13

    def test_invalid_arguments(self):
        with pytest.raises(DegreeError):
            periodicity_check(0, 1.0)
        with pytest.raises(DomainError):
            periodicity_check(3, 1.0, grid=0)
