"""Pydantic schemas for verification and analysis reports."""

from __future__ import annotations

import math
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from src import __version__
from src.core.config import Tolerances
from src.core.ellipse import foci
from src.models.geometry import Ellipse
from src.models.regularity import (
    CharacterizationResult,
    CriticalForm,
    RegularityFit,
    VerificationReport,
    VerificationStatus,
)
from src.models.schemas.instance import ComplexPair, to_pair

EXIT_CODES = {
    VerificationStatus.PASS: 0,
    VerificationStatus.FAIL: 1,
    VerificationStatus.HYPOTHESIS_NOT_SATISFIED: 2,
}
EXIT_INPUT_ERROR = 3


def exit_code_for(status: VerificationStatus) -> int:
    return EXIT_CODES[status]


class CriticalFormDocument(BaseModel):
    """Fit of critical points to alpha + beta cos(k pi/n)."""

    alpha: ComplexPair
    beta: ComplexPair
    n: int
    residual: float
    spread: float
    accepted: bool
    reason: Optional[str] = None
    extreme_points: Optional[List[ComplexPair]] = None

    @classmethod
    def from_form(cls, form: CriticalForm) -> "CriticalFormDocument":
        return cls(
            alpha=to_pair(form.alpha),
            beta=to_pair(form.beta),
            n=form.n,
            residual=form.residual,
            spread=form.spread,
            accepted=form.accepted,
            reason=form.reason,
            extreme_points=[to_pair(z) for z in form.extreme_points] if form.accepted else None,
        )


class RegularityDocument(BaseModel):
    """Fourier witness v_k = alpha w^k + beta w^-k + gamma."""

    alpha: ComplexPair
    beta: ComplexPair
    gamma: ComplexPair
    n: int
    residual: float
    scale: float
    accepted: bool
    reason: Optional[str] = None
    similarity_image: bool = False

    @classmethod
    def from_fit(cls, fit: RegularityFit) -> "RegularityDocument":
        return cls(
            alpha=to_pair(fit.alpha),
            beta=to_pair(fit.beta),
            gamma=to_pair(fit.gamma),
            n=fit.n,
            residual=fit.residual,
            scale=fit.scale,
            accepted=fit.accepted,
            reason=fit.reason,
            similarity_image=fit.similarity_image,
        )


class EllipseDocument(BaseModel):
    center: ComplexPair
    semi_major: float = Field(..., gt=0)
    semi_minor: float = Field(..., ge=0)
    rotation: float
    foci: List[ComplexPair]

    @classmethod
    def from_ellipse(cls, ellipse: Ellipse) -> "EllipseDocument":
        return cls(
            center=to_pair(ellipse.center),
            semi_major=ellipse.semi_major,
            semi_minor=ellipse.semi_minor,
            rotation=ellipse.rotation,
            foci=[to_pair(z) for z in foci(ellipse)],
        )


class ReportDocument(BaseModel):
    """Serialized VerificationReport with run context."""

    model_config = ConfigDict(allow_inf_nan=False)

    tool_version: str = __version__
    label: Optional[str] = None
    status: VerificationStatus
    verdict: bool
    exit_code: int = Field(..., ge=0, le=2)
    degree: int
    scale: float
    tolerances: Tolerances
    duration_seconds: float = Field(..., ge=0)
    critical_form: Optional[CriticalFormDocument] = None
    regularity: Optional[RegularityDocument] = None
    ellipse: Optional[EllipseDocument] = None
    midpoint_residual: Optional[float] = None
    tangency_residuals: List[float] = Field(default_factory=list)
    focus_error: Optional[float] = None
    level_spread: Optional[float] = None
    roots: List[ComplexPair] = Field(default_factory=list)
    critical_points: List[ComplexPair] = Field(default_factory=list)
    diagnostics: List[str] = Field(default_factory=list)

    @field_validator("tangency_residuals")
    @classmethod
    def check_finite(cls, values: List[float]) -> List[float]:
        if not all(math.isfinite(v) for v in values):
            raise ValueError("residuals must be finite")
        return values

    @classmethod
    def from_report(
        cls,
        report: VerificationReport,
        tolerances: Tolerances,
        duration: float,
        label: Optional[str] = None,
    ) -> "ReportDocument":
        return cls(
            label=label,
            status=report.status,
            verdict=report.verdict,
            exit_code=exit_code_for(report.status),
            degree=report.degree,
            scale=report.scale,
            tolerances=tolerances,
            duration_seconds=duration,
            critical_form=CriticalFormDocument.from_form(report.critical_form)
            if report.critical_form
            else None,
            regularity=RegularityDocument.from_fit(report.regularity) if report.regularity else None,
            ellipse=EllipseDocument.from_ellipse(report.ellipse) if report.ellipse else None,
            midpoint_residual=report.midpoint_residual,
            tangency_residuals=list(report.tangency_residuals),
            focus_error=report.focus_error,
            level_spread=report.level_spread,
            roots=[to_pair(z) for z in report.roots],
            critical_points=[to_pair(z) for z in report.critical_points],
            diagnostics=list(report.diagnostics),
        )

    def to_json(self) -> str:
        return self.model_dump_json(indent=2) + "\n"


class CharacterizationDocument(BaseModel):
    inellipse_side: bool
    critical_side: bool
    agree: bool
    regularity: RegularityDocument
    critical_form: CriticalFormDocument

    @classmethod
    def from_result(cls, result: CharacterizationResult) -> "CharacterizationDocument":
        return cls(
            inellipse_side=result.inellipse_side,
            critical_side=result.critical_side,
            agree=result.agree,
            regularity=RegularityDocument.from_fit(result.regularity),
            critical_form=CriticalFormDocument.from_form(result.critical_form),
        )


class LemmaDocument(BaseModel):
    """Periodicity sweep of T_n on one confocal ellipse."""

    n: int
    s: float
    grid: int
    periodicity: float
    closed_form_gap: float
    tolerance: float
    passed: bool
