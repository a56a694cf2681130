"""Tests for CLI display utilities."""

from unittest.mock import patch

import pytest

from src.cli.display import (
    display_characterization,
    display_ellipse,
    display_error,
    display_lemma,
    display_regularity,
    display_report,
    display_success,
    display_table,
    format_complex,
    format_residual,
)
from src.core.regularity import (
    detect_affinely_regular,
    verify_bocher_grace,
    verify_characterization,
)
from src.models.geometry import Ellipse
from src.models.polynomial import ComplexPolynomial
from src.models.schemas import (
    CharacterizationDocument,
    EllipseDocument,
    LemmaDocument,
    RegularityDocument,
    ReportDocument,
)


class TestFormatting:
    """Tests for number formatting helpers."""

    def test_format_complex(self):
        assert format_complex((1.5, -2.0)) == "1.5 - 2i"
        assert format_complex((0.0, 0.25)) == "0 + 0.25i"

    def test_format_residual(self):
        assert format_residual(None) == "—"
        assert format_residual(0.00123) == "1.230e-03"


class TestDisplayFunctions:
    """Tests for display functions."""

    @pytest.fixture
    def mock_console(self):
        """Mock the Rich console."""
        with patch("src.cli.display.console") as mock:
            yield mock

    @pytest.fixture
    def mock_err_console(self):
        with patch("src.cli.display.err_console") as mock:
            yield mock

    def test_display_error(self, mock_err_console, mock_console):
        """Errors go to stderr only."""
        display_error("Test error message")
        mock_err_console.print.assert_called_once()
        mock_console.print.assert_not_called()

    def test_display_success(self, mock_console):
        display_success("Operation completed")
        mock_console.print.assert_called_once()

    def test_display_table(self, mock_console):
        display_table("Test Table", ["k", "root"], [(0, "1 + 0i"), (1, "-1 + 0i")])
        mock_console.print.assert_called_once()

    def test_display_report_pass(self, mock_console, rectangle_polynomial, tolerances):
        doc = ReportDocument.from_report(verify_bocher_grace(rectangle_polynomial), tolerances, 0.0)
        display_report(doc)
        mock_console.print.assert_called_once()

    def test_display_report_with_diagnostics(self, mock_console, tolerances):
        report = verify_bocher_grace(ComplexPolynomial([-1, 0, 0, 1]))
        doc = ReportDocument.from_report(report, tolerances, 0.0)
        display_report(doc)
        # table plus one line per diagnostic
        assert mock_console.print.call_count == 1 + len(doc.diagnostics)

    def test_display_regularity(self, mock_console, rectangle_polygon):
        display_regularity(RegularityDocument.from_fit(detect_affinely_regular(rectangle_polygon)))
        mock_console.print.assert_called_once()

    def test_display_ellipse(self, mock_console):
        display_ellipse(EllipseDocument.from_ellipse(Ellipse(0, 2, 1)))
        mock_console.print.assert_called_once()

    def test_display_characterization(self, mock_console, rectangle_polygon):
        doc = CharacterizationDocument.from_result(verify_characterization(rectangle_polygon))
        display_characterization(doc)
        # table and the success panel
        assert mock_console.print.call_count == 2

    def test_display_lemma(self, mock_console):
        doc = LemmaDocument(
            n=5, s=1.0, grid=100, periodicity=1e-15, closed_form_gap=1e-15, tolerance=1e-9, passed=True
        )
        display_lemma(doc)
        mock_console.print.assert_called_once()
