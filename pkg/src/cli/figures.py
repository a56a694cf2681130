"""SVG figures rendered through a jinja2 template.

Plane points are drawn with y pointing up; the viewBox is fitted to all
layers with a 10% margin. Coordinates are printed with fixed precision so
identical input gives identical bytes.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from jinja2 import Environment, StrictUndefined

from src.core.affine import rotated_root_images
from src.core.chebyshev import EllipseTraceParams, u_roots
from src.core.ellipse import confocal_member, foci, trace_points
from src.models.geometry import Ellipse
from src.models.polynomial import Number

logger = logging.getLogger(__name__)

INSTANCE_LAYERS = ("polygon", "circumscribed-ellipse", "midpoints", "ellipse", "critical-points", "foci")
ELLIPSE_SEGMENTS = 64
MARGIN = 0.10
PRECISION = 6

_TEMPLATE = """\
<svg xmlns="http://www.w3.org/2000/svg" viewBox="{{ view_box }}" width="{{ width }}" height="{{ height }}">
{%- for layer in layers %}
  <g id="{{ layer.name }}" fill="{{ layer.fill }}" stroke="{{ layer.stroke }}" stroke-width="{{ stroke_width }}">
  {%- for shape in layer.shapes %}
    {%- if shape.kind == "polygon" %}
    <polygon points="{{ shape.points | points }}"/>
    {%- elif shape.kind == "polyline" %}
    <polyline points="{{ shape.points | points }}"/>
    {%- elif shape.kind == "marker" %}
    <circle cx="{{ shape.points[0][0] | num }}" cy="{{ shape.points[0][1] | num }}" r="{{ marker_radius }}"/>
    {%- elif shape.kind == "ellipse" %}
    <ellipse cx="{{ shape.points[0][0] | num }}" cy="{{ shape.points[0][1] | num }}" rx="{{ shape.rx | num }}" ry="{{ shape.ry | num }}" transform="rotate({{ shape.angle | num }} {{ shape.points[0][0] | num }} {{ shape.points[0][1] | num }})"/>
    {%- endif %}
  {%- endfor %}
  </g>
{%- endfor %}
</svg>
"""


def _num(value: float) -> str:
    text = f"{value:.{PRECISION}f}"
    return "0.000000" if text == "-0.000000" else text


def _points(points: Sequence[Tuple[float, float]]) -> str:
    return " ".join(f"{_num(x)},{_num(y)}" for x, y in points)


_ENV = Environment(undefined=StrictUndefined, autoescape=False, keep_trailing_newline=True)
_ENV.filters["num"] = _num
_ENV.filters["points"] = _points


def _flip(z: Number) -> Tuple[float, float]:
    """SVG coordinates of a plane point (y axis points down in SVG)."""
    z = complex(z)
    return (z.real, -z.imag)


@dataclass(frozen=True)
class Shape:
    """One drawable element, already in SVG coordinates."""

    kind: str
    points: Tuple[Tuple[float, float], ...]
    rx: float = 0.0
    ry: float = 0.0
    angle: float = 0.0
    extent: Tuple[Tuple[float, float], ...] = ()

    @property
    def bounds_points(self) -> Tuple[Tuple[float, float], ...]:
        return self.extent or self.points


@dataclass
class Layer:
    name: str
    stroke: str = "black"
    fill: str = "none"
    shapes: List[Shape] = field(default_factory=list)


class Scene:
    """Ordered layers of shapes rendered to one SVG document.

    Example:
        >>> scene = Scene()
        >>> scene.polygon("polygon", [1, 1j, -1])
        >>> svg = scene.render()
    """

    def __init__(self, width: int = 600, height: int = 600):
        self.width = width
        self.height = height
        self.layers: List[Layer] = []

    def layer(self, name: str, stroke: str = "black", fill: str = "none") -> Layer:
        for existing in self.layers:
            if existing.name == name:
                return existing
        created = Layer(name, stroke, fill)
        self.layers.append(created)
        return created

    def polygon(self, name: str, vertices: Iterable[Number], **style) -> None:
        self.layer(name, **style).shapes.append(Shape("polygon", tuple(_flip(z) for z in vertices)))

    def polyline(self, name: str, points: Iterable[Number], **style) -> None:
        self.layer(name, **style).shapes.append(Shape("polyline", tuple(_flip(z) for z in points)))

    def markers(self, name: str, points: Iterable[Number], **style) -> None:
        target = self.layer(name, **style)
        for z in points:
            target.shapes.append(Shape("marker", (_flip(z),)))

    def ellipse(self, name: str, ellipse: Ellipse, polyline: bool = False, **style) -> None:
        """Native rotated <ellipse>, or a closed polyline of 64 segments."""
        trace = trace_points(ellipse, ELLIPSE_SEGMENTS)
        if polyline:
            self.polyline(name, list(trace) + [trace[0]], **style)
            return
        self.layer(name, **style).shapes.append(
            Shape(
                "ellipse",
                (_flip(ellipse.center),),
                rx=ellipse.semi_major,
                ry=ellipse.semi_minor,
                angle=-math.degrees(ellipse.rotation),
                extent=tuple(_flip(z) for z in trace),
            )
        )

    def view_box(self) -> Tuple[float, float, float, float]:
        points = [p for layer in self.layers for shape in layer.shapes for p in shape.bounds_points]
        if not points:
            return (-1.0, -1.0, 2.0, 2.0)
        xs, ys = zip(*points)
        width, height = max(xs) - min(xs), max(ys) - min(ys)
        side = max(width, height, 1e-9)
        pad = MARGIN * side
        return (min(xs) - pad, min(ys) - pad, width + 2 * pad, height + 2 * pad)

    def render(self) -> str:
        box = self.view_box()
        extent = max(box[2], box[3])
        logger.debug(f"Rendering {len(self.layers)} layers, viewBox {box}")
        return _ENV.from_string(_TEMPLATE).render(
            view_box=" ".join(_num(v) for v in box),
            width=self.width,
            height=self.height,
            layers=self.layers,
            stroke_width=_num(extent / 300),
            marker_radius=_num(extent / 120),
        )


def instance_figure(
    vertices: Sequence[Number],
    ellipse: Optional[Ellipse],
    critical: Sequence[Number],
    focus_points: Sequence[Number] = (),
    polyline: bool = False,
    circumscribed: Optional[Ellipse] = None,
) -> Scene:
    """Polygon, its circumscribed ellipse, side midpoints, inscribed ellipse,
    critical points and foci."""
    scene = Scene()
    v = np.asarray(vertices, dtype=np.complex128)
    scene.polygon("polygon", v, stroke="black")
    outer = scene.layer("circumscribed-ellipse", stroke="lightsteelblue")
    if circumscribed is not None:
        scene.ellipse(outer.name, circumscribed, polyline=polyline)
    scene.markers("midpoints", (v + np.roll(v, -1)) / 2, stroke="none", fill="seagreen")
    target = scene.layer("ellipse", stroke="royalblue")
    if ellipse is not None:
        scene.ellipse(target.name, ellipse, polyline=polyline)
    scene.markers("critical-points", critical, stroke="none", fill="crimson")
    scene.markers("foci", focus_points, stroke="darkorange", fill="none")
    return scene


def family_figure(s_values: Sequence[float], n: int = 5, theta: float = 0.0, polyline: bool = False) -> Scene:
    """Confocal ellipses with foci ±1, the images of rotated n-th roots of
    unity on each, and the roots of U_{n-1} on the real axis."""
    scene = Scene()
    for s in sorted(s_values):
        member = confocal_member(s)
        scene.ellipse("ellipse", member, polyline=polyline, stroke="royalblue")
        params = EllipseTraceParams.from_confocal(s)
        scene.polygon(
            "polygon", rotated_root_images(n, theta, params.a_over_c, params.b_over_c), stroke="black"
        )
    scene.markers("critical-points", u_roots(n), stroke="none", fill="crimson")
    scene.markers("foci", (1, -1), stroke="darkorange", fill="none")
    return scene


def rotated_figure(n: int = 5, theta: float = 0.3, s: float = 1.0, polyline: bool = False) -> Scene:
    """Rotated roots of unity with their circumscribing and inscribing
    circles, beside their image under A with the corresponding ellipses."""
    scene = Scene()
    rho = math.cos(math.pi / n)
    roots = np.exp(1j * (theta + 2 * np.pi * np.arange(1, n + 1) / n))
    params = EllipseTraceParams.from_confocal(s)
    # the source figure sits to the left of the image
    shift = -(params.a_over_c + 1.5)
    scene.polygon("source", roots + shift, stroke="gray")
    scene.ellipse("source", Ellipse.circle(shift, 1.0), polyline=polyline, stroke="gray")
    scene.ellipse("source", Ellipse.circle(shift, rho), polyline=polyline, stroke="gray")
    scene.polygon(
        "polygon", rotated_root_images(n, theta, params.a_over_c, params.b_over_c), stroke="black"
    )
    outer = confocal_member(s)
    inner = Ellipse(0j, rho * outer.semi_major, rho * outer.semi_minor, 0.0)
    scene.ellipse("ellipse", outer, polyline=polyline, stroke="royalblue")
    scene.ellipse("ellipse", inner, polyline=polyline, stroke="royalblue")
    scene.markers("foci", [*foci(outer), *foci(inner)], stroke="darkorange", fill="none")
    return scene


__all__ = [
    "INSTANCE_LAYERS",
    "Scene",
    "instance_figure",
    "family_figure",
    "rotated_figure",
]
