"""Pydantic schemas for instance documents read and written by the CLI."""

from __future__ import annotations

from enum import Enum
from pathlib import Path
from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.core.numeric import poly_from_roots
from src.models.polynomial import ComplexPolynomial, Number
from src.models.regularity import Polygon

ComplexPair = Tuple[float, float]


def to_pair(z: Number) -> ComplexPair:
    z = complex(z)
    return (z.real, z.imag)


class InstanceKind(str, Enum):
    """What the ``data`` array of an instance holds."""

    POLYNOMIAL_COEFFS = "polynomial-coeffs"
    ROOTS = "roots"
    POLYGON = "polygon"


class InstanceDocument(BaseModel):
    """One polynomial, root set or polygon; complex numbers as [re, im].

    Example:
        {"schema_version": 1, "kind": "roots", "coefficient_order": "ascending",
         "data": [[2, 1], [2, -1], [-2, 1], [-2, -1]], "n": 4, "meta": {}}
    """

    model_config = ConfigDict(extra="forbid", allow_inf_nan=False)

    schema_version: Literal[1] = Field(1, description="Document format version")
    kind: InstanceKind = Field(..., description="Interpretation of data")
    coefficient_order: Literal["ascending"] = Field(
        "ascending", description="Coefficient k multiplies z^k"
    )
    data: List[ComplexPair] = Field(..., min_length=1, description="Complex values as [re, im]")
    n: Optional[int] = Field(None, ge=1, description="Degree or vertex count")
    meta: Dict[str, str] = Field(default_factory=dict, description="Free-form annotations")

    @model_validator(mode="after")
    def check_cardinality(self) -> "InstanceDocument":
        count = len(self.data)
        if self.kind is InstanceKind.POLYNOMIAL_COEFFS:
            if self.n is not None and self.n != count - 1:
                raise ValueError(f"n={self.n} but {count} coefficients give degree {count - 1}")
        else:
            if self.n is not None and self.n != count:
                raise ValueError(f"n={self.n} but data holds {count} points")
            if self.kind is InstanceKind.POLYGON and count < 3:
                raise ValueError(f"need a polygon: {count} vertices")
        return self

    @classmethod
    def from_complex(
        cls,
        kind: InstanceKind,
        values,
        n: Optional[int] = None,
        meta: Optional[Dict[str, str]] = None,
    ) -> "InstanceDocument":
        return cls(kind=kind, data=[to_pair(z) for z in values], n=n, meta=meta or {})

    @classmethod
    def parse(cls, text: str) -> "InstanceDocument":
        return cls.model_validate_json(text)

    @classmethod
    def load(cls, path: Path) -> "InstanceDocument":
        return cls.parse(Path(path).read_text(encoding="utf-8"))

    def to_json(self) -> str:
        return self.model_dump_json(indent=2) + "\n"

    def complex_data(self) -> List[complex]:
        return [complex(re, im) for re, im in self.data]

    def to_polynomial(self) -> ComplexPolynomial:
        """Coefficients as given, or the monic polynomial with these roots/vertices."""
        if self.kind is InstanceKind.POLYNOMIAL_COEFFS:
            return ComplexPolynomial(self.complex_data())
        return poly_from_roots(self.complex_data())

    def to_polygon(self) -> Polygon:
        """Vertices in document order (polygon or roots kinds)."""
        if self.kind is InstanceKind.POLYNOMIAL_COEFFS:
            raise ValueError("a coefficient document has no vertex order")
        return Polygon(self.complex_data())


class BatchDocument(BaseModel):
    """Several instances verified independently."""

    model_config = ConfigDict(extra="forbid")

    schema_version: Literal[1] = 1
    instances: List[InstanceDocument] = Field(..., min_length=1)

    @classmethod
    def parse(cls, text: str) -> "BatchDocument":
        return cls.model_validate_json(text)

    def to_json(self) -> str:
        return self.model_dump_json(indent=2) + "\n"
