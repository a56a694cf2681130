"""polyfoci command-line interface.

Exit codes: 0 pass, 1 theorem verdict failed, 2 hypothesis not satisfied,
3 input or usage error.
"""

import asyncio
import json
import logging
import time
from enum import Enum
from pathlib import Path
from typing import List, Optional, Union

import numpy as np
import typer
from pydantic import TypeAdapter, ValidationError
from rich.logging import RichHandler

from src.cli.display import (
    console,
    display_characterization,
    display_ellipse,
    display_error,
    display_lemma,
    display_regularity,
    display_report,
    display_table,
    err_console,
)
from src.cli.figures import family_figure, instance_figure, rotated_figure
from src.core.affine import random_similarity
from src.core.batch import BatchVerifier
from src.core.chebyshev import periodicity_check
from src.core.config import Tolerances, settings
from src.core.numeric import find_roots
from src.core.regularity import (
    circumscribed_ellipse,
    detect_affinely_regular,
    inscribed_midpoint_ellipse,
    polygon_from_roots,
    synthesize_roots,
    verify_bocher_grace,
    verify_characterization,
)
from src.errors import ConvexityError, PolyfociError
from src.models.geometry import ConformalSimilarity
from src.models.regularity import Polygon
from src.models.schemas import (
    EXIT_INPUT_ERROR,
    BatchDocument,
    CharacterizationDocument,
    EllipseDocument,
    InstanceDocument,
    InstanceKind,
    LemmaDocument,
    RegularityDocument,
    ReportDocument,
)

app = typer.Typer(
    name="polyfoci",
    help="polyfoci - critical points, affinely regular polygons and midpoint inellipses",
    add_completion=False,
)

logger = logging.getLogger(__name__)

INPUT_ERRORS = (PolyfociError, ValidationError, ValueError, OSError)


class OutputFormat(str, Enum):
    json = "json"
    text = "text"


def _fail_input(message: str) -> None:
    display_error(message)
    raise typer.Exit(EXIT_INPUT_ERROR)


def _describe(exc: Exception) -> str:
    if isinstance(exc, ValidationError):
        lines = [
            f"{'.'.join(str(part) for part in err['loc']) or 'document'}: {err['msg']}"
            for err in exc.errors()
        ]
        return "invalid document\n" + "\n".join(lines)
    return str(exc)


def _read_text(path: Path) -> str:
    if str(path) == "-":
        return typer.get_text_stream("stdin").read()
    return path.read_text(encoding="utf-8")


def _load(path: Path) -> Union[InstanceDocument, BatchDocument]:
    """Batch documents are recognized by a top-level ``instances`` key."""
    text = _read_text(path)
    try:
        data = json.loads(text)
    except ValueError:
        data = None
    if isinstance(data, dict) and "instances" in data:
        return BatchDocument.parse(text)
    return InstanceDocument.parse(text)


def _load_instance(path: Path) -> InstanceDocument:
    doc = _load(path)
    if isinstance(doc, BatchDocument):
        raise ValueError("expected a single instance document, got a batch")
    return doc


def _polygon(doc: InstanceDocument) -> Polygon:
    """Polygon kinds keep their order; roots and coefficients are ordered about the centroid."""
    if doc.kind is InstanceKind.POLYGON:
        return doc.to_polygon()
    if doc.kind is InstanceKind.ROOTS:
        return polygon_from_roots(doc.complex_data())
    return polygon_from_roots(find_roots(doc.to_polynomial()))


def _parse_complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", "").replace("i", "j"))
    except ValueError as exc:
        raise ValueError(f"not a complex number: {text!r}") from exc


def _tolerances(**overrides: Optional[float]) -> Tolerances:
    updates = {name: value for name, value in overrides.items() if value is not None}
    return Tolerances.model_validate({**settings.tolerances.model_dump(), **updates})


def _emit(text: str, output: Optional[Path]) -> None:
    if output is None:
        typer.echo(text, nl=False)
    else:
        output.write_text(text, encoding="utf-8")


@app.callback()
def main(
    log_level: str = typer.Option(settings.log_level, "--log-level", help="Logging level"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Shortcut for --log-level DEBUG"),
):
    """Configure logging for every subcommand."""
    logging.basicConfig(
        level="DEBUG" if verbose else log_level.upper(),
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=err_console, show_path=False, rich_tracebacks=True)],
        force=True,
    )


TOL_REGULAR = typer.Option(None, "--tol-regular", help="Fourier residual / polygon diameter")
TOL_FOCUS = typer.Option(None, "--tol-focus", help="Focus error / polygon diameter")
TOL_TANGENCY = typer.Option(None, "--tol-tangency", help="Normalized tangency discriminant")
TOL_CRITICAL = typer.Option(None, "--tol-critical", help="Critical-form residual / spread")
FORMAT = typer.Option(OutputFormat.text, "--format", "-f", help="Output format")
OUTPUT = typer.Option(None, "--output", "-o", help="Write to this file instead of stdout")


@app.command()
def verify(
    path: Path = typer.Argument(..., help="Instance or batch document ('-' for stdin)"),
    tol_regular: Optional[float] = TOL_REGULAR,
    tol_focus: Optional[float] = TOL_FOCUS,
    tol_tangency: Optional[float] = TOL_TANGENCY,
    tol_critical: Optional[float] = TOL_CRITICAL,
    jobs: int = typer.Option(1, "--jobs", "-j", min=1, help="Worker processes for batch documents"),
    fmt: OutputFormat = FORMAT,
    output: Optional[Path] = OUTPUT,
):
    """
    Verify the midpoint-inellipse theorem for a polynomial, root set or polygon.
    """
    try:
        tol = _tolerances(
            tol_regular=tol_regular, tol_focus=tol_focus, tol_tangency=tol_tangency, tol_critical=tol_critical
        )
        doc = _load(path)
        if isinstance(doc, BatchDocument):
            polynomials = [inst.to_polynomial() for inst in doc.instances]
        else:
            polynomial = doc.to_polynomial()
    except INPUT_ERRORS as exc:
        _fail_input(_describe(exc))

    if isinstance(doc, BatchDocument):
        raise typer.Exit(_verify_batch(doc, polynomials, tol, jobs, fmt, output))

    started = time.perf_counter()
    try:
        report = verify_bocher_grace(polynomial, tol)
    except PolyfociError as exc:
        _fail_input(str(exc))
    result = ReportDocument.from_report(
        report, tol, time.perf_counter() - started, label=doc.meta.get("name")
    )
    try:
        if fmt is OutputFormat.json:
            _emit(result.to_json(), output)
        else:
            display_report(result)
            if output is not None:
                output.write_text(result.to_json(), encoding="utf-8")
    except OSError as exc:
        _fail_input(str(exc))
    raise typer.Exit(result.exit_code)


def _verify_batch(doc, polynomials, tol: Tolerances, jobs: int, fmt: OutputFormat, output) -> int:
    labels = [inst.meta.get("name", f"#{i}") for i, inst in enumerate(doc.instances)]

    async def run():
        async with BatchVerifier(max_workers=jobs, tolerances=tol) as verifier:
            return await verifier.verify_many(polynomials, labels)

    outcomes = asyncio.run(run())
    reports: List[ReportDocument] = []
    code = 0
    for outcome in outcomes:
        if not outcome.ok:
            display_error(f"{outcome.label}: {outcome.error}")
            code = EXIT_INPUT_ERROR
            continue
        reports.append(ReportDocument.from_report(outcome.report, tol, outcome.duration, outcome.label))
    if reports and code != EXIT_INPUT_ERROR:
        code = max(r.exit_code for r in reports)

    if fmt is OutputFormat.json:
        payload = TypeAdapter(List[ReportDocument]).dump_json(reports, indent=2).decode() + "\n"
        _emit(payload, output)
    else:
        display_table(
            "Batch verification",
            ["Instance", "Status", "Focus error", "Duration"],
            [
                (r.label, r.status.value, f"{r.focus_error:.3e}" if r.focus_error is not None else "—",
                 f"{r.duration_seconds:.3f}s")
                for r in reports
            ],
        )
    return code


@app.command()
def synthesize(
    n: int = typer.Argument(..., help="Degree, at least 3"),
    scale: Optional[str] = typer.Option(None, "--scale", help="Complex factor of T_n (default n)"),
    offset: Optional[str] = typer.Option(None, "--offset", help="Complex constant term (default 2)"),
    alpha: Optional[str] = typer.Option(None, "--alpha", help="Similarity translation (default 0)"),
    beta: Optional[str] = typer.Option(None, "--beta", help="Similarity rotation-scale (default 1)"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Draw unset parameters from this seed"),
    polygon: bool = typer.Option(False, "--polygon", help="Emit a counterclockwise polygon document"),
    fmt: OutputFormat = typer.Option(OutputFormat.json, "--format", "-f", help="Output format"),
    output: Optional[Path] = OUTPUT,
):
    """
    Emit the roots of (scale/n) T_n(z) + offset mapped through a similarity.
    """
    try:
        rng = np.random.default_rng(seed) if seed is not None else None
        scale_value = _parse_complex(scale) if scale is not None else complex(n)
        if offset is not None:
            offset_value = _parse_complex(offset)
        elif rng is not None:
            # a level on a confocal ellipse never meets [-1, 1]
            level = np.cos(rng.uniform(0, 2 * np.pi) - 1j * rng.uniform(0.5, 2.0))
            offset_value = complex(-level * scale_value / n)
        else:
            offset_value = 2 + 0j
        drawn = random_similarity(rng, shift=0.1) if rng is not None else ConformalSimilarity.identity()
        similarity = ConformalSimilarity(
            _parse_complex(alpha) if alpha is not None else drawn.alpha,
            _parse_complex(beta) if beta is not None else drawn.beta,
        )
        roots = synthesize_roots(n, scale_value, offset_value, similarity)
    except INPUT_ERRORS as exc:
        _fail_input(_describe(exc))

    meta = {
        "generator": "synthesize",
        "n": str(n),
        "scale": repr(scale_value),
        "offset": repr(offset_value),
        "similarity_alpha": repr(similarity.alpha),
        "similarity_beta": repr(similarity.beta),
    }
    if seed is not None:
        meta["seed"] = str(seed)
    if polygon:
        doc = InstanceDocument.from_complex(InstanceKind.POLYGON, polygon_from_roots(roots).vertices, n=n, meta=meta)
    else:
        doc = InstanceDocument.from_complex(InstanceKind.ROOTS, roots, n=n, meta=meta)

    try:
        if fmt is OutputFormat.json:
            _emit(doc.to_json(), output)
        else:
            display_table(f"Synthesized roots (n = {n})", ["k", "root"], enumerate(doc.complex_data()))
            if output is not None:
                output.write_text(doc.to_json(), encoding="utf-8")
    except OSError as exc:
        _fail_input(str(exc))


@app.command()
def detect(
    path: Path = typer.Argument(..., help="Polygon or roots document ('-' for stdin)"),
    tol_regular: Optional[float] = TOL_REGULAR,
    fmt: OutputFormat = FORMAT,
):
    """
    Fourier test for affine regularity of a convex polygon.
    """
    try:
        tol = _tolerances(tol_regular=tol_regular)
        polygon = _polygon(_load_instance(path))
    except INPUT_ERRORS as exc:
        _fail_input(_describe(exc))
    try:
        fit = detect_affinely_regular(polygon, tol.tol_regular)
    except ConvexityError as exc:
        display_error(str(exc))
        raise typer.Exit(2)
    doc = RegularityDocument.from_fit(fit)
    if fmt is OutputFormat.json:
        typer.echo(doc.model_dump_json(indent=2))
    else:
        display_regularity(doc)
    raise typer.Exit(0 if fit.accepted else 1)


@app.command()
def inellipse(
    path: Path = typer.Argument(..., help="Polygon or roots document ('-' for stdin)"),
    tol_regular: Optional[float] = TOL_REGULAR,
    fmt: OutputFormat = FORMAT,
):
    """
    Ellipse through the side midpoints of an affinely regular polygon.
    """
    try:
        tol = _tolerances(tol_regular=tol_regular)
        polygon = _polygon(_load_instance(path))
    except INPUT_ERRORS as exc:
        _fail_input(_describe(exc))
    try:
        fit = detect_affinely_regular(polygon, tol.tol_regular)
    except ConvexityError as exc:
        display_error(str(exc))
        raise typer.Exit(2)
    if not fit.accepted:
        display_error(f"no midpoint inellipse: {fit.reason}")
        raise typer.Exit(1)
    doc = EllipseDocument.from_ellipse(inscribed_midpoint_ellipse(fit))
    if fmt is OutputFormat.json:
        typer.echo(doc.model_dump_json(indent=2))
    else:
        display_ellipse(doc)


@app.command()
def characterize(
    path: Path = typer.Argument(..., help="Polygon or roots document ('-' for stdin)"),
    tol_regular: Optional[float] = TOL_REGULAR,
    tol_critical: Optional[float] = TOL_CRITICAL,
    fmt: OutputFormat = FORMAT,
):
    """
    Compare the inellipse side and the critical-point side of the characterization.
    """
    try:
        tol = _tolerances(tol_regular=tol_regular, tol_critical=tol_critical)
        polygon = _polygon(_load_instance(path))
    except INPUT_ERRORS as exc:
        _fail_input(_describe(exc))
    try:
        result = verify_characterization(polygon, tol)
    except ConvexityError as exc:
        display_error(str(exc))
        raise typer.Exit(2)
    doc = CharacterizationDocument.from_result(result)
    if fmt is OutputFormat.json:
        typer.echo(doc.model_dump_json(indent=2))
    else:
        display_characterization(doc)
    raise typer.Exit(0 if result.agree else 1)


@app.command("cheb-lemma")
def cheb_lemma(
    n: int = typer.Argument(..., min=1, help="Chebyshev degree"),
    s: float = typer.Argument(..., help="Confocal parameter s > 0"),
    grid: int = typer.Option(100, "--grid", min=1, help="Number of sample points"),
    tol: float = typer.Option(1e-9, "--tol", help="Relative tolerance"),
    fmt: OutputFormat = FORMAT,
):
    """
    Check that T_n on the confocal ellipse s has period 2π/n.
    """
    try:
        check = periodicity_check(n, s, grid)
    except INPUT_ERRORS as exc:
        _fail_input(_describe(exc))
    doc = LemmaDocument(
        n=check.n,
        s=check.s,
        grid=check.grid,
        periodicity=check.periodicity,
        closed_form_gap=check.closed_form_gap,
        tolerance=tol,
        passed=check.passed(tol),
    )
    if fmt is OutputFormat.json:
        typer.echo(doc.model_dump_json(indent=2))
    else:
        display_lemma(doc)
    raise typer.Exit(0 if doc.passed else 1)


@app.command()
def plot(
    output: Path = typer.Argument(..., help="SVG file to write"),
    path: Optional[Path] = typer.Option(None, "--input", "-i", help="Instance document to draw"),
    family: Optional[str] = typer.Option(None, "--family", help="Comma-separated confocal parameters s"),
    rotated: bool = typer.Option(False, "--rotated", help="Rotated roots of unity and their image"),
    n: int = typer.Option(5, "--n", min=3, help="Polygon size for --family/--rotated"),
    theta: float = typer.Option(0.3, "--theta", help="Rotation of the roots of unity"),
    s: float = typer.Option(1.0, "--s", help="Confocal parameter for --rotated"),
    polyline: bool = typer.Option(False, "--polyline", help="Draw ellipses as 64-segment polylines"),
):
    """
    Write an SVG figure of an instance, the confocal family or the rotated roots of unity.
    """
    try:
        if family is not None:
            s_values = [float(item) for item in family.split(",") if item.strip()]
            scene = family_figure(s_values, n=n, theta=theta, polyline=polyline)
        elif rotated:
            scene = rotated_figure(n=n, theta=theta, s=s, polyline=polyline)
        elif path is not None:
            report = verify_bocher_grace(_load_instance(path).to_polynomial())
            vertices = polygon_from_roots(report.roots).vertices
            outer = circumscribed_ellipse(report.regularity) if report.regular else None
            scene = instance_figure(
                vertices,
                report.ellipse,
                report.critical_points,
                report.foci or (),
                polyline=polyline,
                circumscribed=outer,
            )
        else:
            raise ValueError("nothing to draw: pass --input, --family or --rotated")
        output.write_text(scene.render(), encoding="utf-8")
    except INPUT_ERRORS as exc:
        _fail_input(_describe(exc))
    console.print(f"[green]Wrote[/green] {output}")


if __name__ == "__main__":
    app()
