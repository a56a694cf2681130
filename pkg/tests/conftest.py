"""Pytest configuration and fixtures"""
import json
from pathlib import Path
from typing import Callable, List

import numpy as np
import pytest
from scipy.spatial import ConvexHull
from typer.testing import CliRunner

from src.core.config import Tolerances
from src.models.polynomial import ComplexPolynomial
from src.models.regularity import Polygon


# Numerics
@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator so random sweeps are reproducible"""
    return np.random.default_rng(12345)


@pytest.fixture
def tolerances() -> Tolerances:
    return Tolerances()


@pytest.fixture
def rectangle_polynomial() -> ComplexPolynomial:
    """z^4 - 6z^2 + 25, roots ±2±i"""
    return ComplexPolynomial([25, 0, -6, 0, 1])


@pytest.fixture
def rectangle_roots() -> List[complex]:
    return [2 + 1j, 2 - 1j, -2 + 1j, -2 - 1j]


@pytest.fixture
def rectangle_polygon() -> Polygon:
    """Rectangle ±2±i, counterclockwise"""
    return Polygon([2 + 1j, -2 + 1j, -2 - 1j, 2 - 1j])


@pytest.fixture
def random_convex_polygon() -> Callable[[np.random.Generator, int], Polygon]:
    """Factory: convex hull of random points in the unit square, at least ``min_vertices`` vertices"""

    def make(generator: np.random.Generator, min_vertices: int = 4) -> Polygon:
        while True:
            points = generator.uniform(-1, 1, size=(max(2 * min_vertices, 8), 2))
            hull = ConvexHull(points)
            if len(hull.vertices) < min_vertices:
                continue
            # 2-D hulls list vertices counterclockwise
            vertices = [complex(*points[i]) for i in hull.vertices]
            polygon = Polygon(vertices)
            if polygon.is_convex(1e-6):
                return polygon

    return make


# Documents
@pytest.fixture
def instance_file(tmp_path) -> Callable[..., Path]:
    """Write an instance document and return its path"""

    def write(kind: str, data, name: str = "instance.json", **extra) -> Path:
        doc = {
            "schema_version": 1,
            "kind": kind,
            "coefficient_order": "ascending",
            "data": [[complex(z).real, complex(z).imag] for z in data],
            "meta": {},
            **extra,
        }
        path = tmp_path / name
        path.write_text(json.dumps(doc), encoding="utf-8")
        return path

    return write


# CLI
@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()
