"""
Display utilities for the polyfoci CLI (Rich-based)
"""
from typing import Iterable, Sequence

from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from src.models.schemas import (
    CharacterizationDocument,
    EllipseDocument,
    LemmaDocument,
    RegularityDocument,
    ReportDocument,
)

console = Console()
err_console = Console(stderr=True)

STATUS_STYLES = {
    "pass": "bold green",
    "fail": "bold red",
    "hypothesis-not-satisfied": "bold yellow",
}


def format_complex(pair: Sequence[float], digits: int = 10) -> str:
    re, im = pair
    sign = "-" if im < 0 else "+"
    return f"{re:.{digits}g} {sign} {abs(im):.{digits}g}i"


def format_residual(value) -> str:
    return "—" if value is None else f"{value:.3e}"


def display_error(message: str):
    err_console.print(Panel(Text(message, style="bold red"), title="[red]Error[/red]", style="red"))

def display_success(message: str):
    console.print(Panel(Text(message, style="bold green"), title="[green]Success[/green]", style="green"))

def display_table(title: str, columns: list, rows: Iterable):
    table = Table(title=title)
    for col in columns:
        table.add_column(col)
    for row in rows:
        table.add_row(*[str(cell) for cell in row])
    console.print(table)


def display_report(doc: ReportDocument):
    """Stage-by-stage summary of a verification report."""
    title = f"Verification{f' {doc.label}' if doc.label else ''} (degree {doc.degree})"
    table = Table(title=title)
    table.add_column("Stage", style="cyan")
    table.add_column("Value", style="green")
    status = Text(doc.status.value, style=STATUS_STYLES[doc.status.value])
    table.add_row("Status", status)
    if doc.critical_form:
        form = doc.critical_form
        table.add_row("Critical form α", format_complex(form.alpha))
        table.add_row("Critical form β", format_complex(form.beta))
        table.add_row("Critical form residual", format_residual(form.residual))
    if doc.regularity:
        table.add_row("Fourier residual", format_residual(doc.regularity.residual))
    if doc.ellipse:
        ellipse = doc.ellipse
        table.add_row("Ellipse axes", f"{ellipse.semi_major:.10g}, {ellipse.semi_minor:.10g}")
        table.add_row("Ellipse foci", ", ".join(format_complex(z) for z in ellipse.foci))
    table.add_row("Midpoint residual", format_residual(doc.midpoint_residual))
    if doc.tangency_residuals:
        table.add_row("Max tangency residual", format_residual(max(doc.tangency_residuals)))
    table.add_row("Focus error", format_residual(doc.focus_error))
    table.add_row("Level spread", format_residual(doc.level_spread))
    table.add_row("Duration", f"{doc.duration_seconds:.3f}s")
    console.print(table)
    for line in doc.diagnostics:
        console.print(Text.assemble(("  • ", "yellow"), line))


def display_regularity(doc: RegularityDocument):
    table = Table(title=f"Affine regularity (n = {doc.n})")
    table.add_column("Field", style="cyan")
    table.add_column("Value", style="green")
    table.add_row("Accepted", str(doc.accepted))
    table.add_row("α", format_complex(doc.alpha))
    table.add_row("β", format_complex(doc.beta))
    table.add_row("γ", format_complex(doc.gamma))
    table.add_row("Residual / scale", format_residual(doc.residual / doc.scale))
    if doc.similarity_image:
        table.add_row("Note", "similarity image of a regular polygon (β = 0)")
    if doc.reason:
        table.add_row("Reason", doc.reason)
    console.print(table)


def display_ellipse(doc: EllipseDocument, title: str = "Inscribed midpoint ellipse"):
    table = Table(title=title)
    table.add_column("Field", style="cyan")
    table.add_column("Value", style="green")
    table.add_row("Center", format_complex(doc.center))
    table.add_row("Semi-axes", f"{doc.semi_major:.10g}, {doc.semi_minor:.10g}")
    table.add_row("Rotation", f"{doc.rotation:.10g} rad")
    table.add_row("Foci", ", ".join(format_complex(z) for z in doc.foci))
    console.print(table)


def display_characterization(doc: CharacterizationDocument):
    display_table(
        "Characterization",
        ["Side", "Holds", "Residual"],
        [
            ("midpoint inellipse", doc.inellipse_side, format_residual(doc.regularity.residual)),
            ("Chebyshev critical form", doc.critical_side, format_residual(doc.critical_form.residual)),
        ],
    )
    if doc.agree:
        display_success("Both sides agree")
    else:
        display_error("Sides disagree")


def display_lemma(doc: LemmaDocument):
    display_table(
        f"Periodicity of T_{doc.n} on the confocal ellipse s = {doc.s:g}",
        ["Check", "Max relative residual"],
        [
            ("f(t) - f(t + 2π/n)", format_residual(doc.periodicity)),
            ("closed form - recurrence", format_residual(doc.closed_form_gap)),
        ],
    )
