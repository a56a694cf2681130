"""Pydantic schemas for instance and report documents."""

from .instance import BatchDocument, ComplexPair, InstanceDocument, InstanceKind, to_pair
from .report import (
    EXIT_CODES,
    EXIT_INPUT_ERROR,
    CharacterizationDocument,
    CriticalFormDocument,
    EllipseDocument,
    LemmaDocument,
    RegularityDocument,
    ReportDocument,
    exit_code_for,
)

__all__ = [
    # Instances
    "ComplexPair",
    "to_pair",
    "InstanceKind",
    "InstanceDocument",
    "BatchDocument",
    # Reports
    "EXIT_CODES",
    "EXIT_INPUT_ERROR",
    "exit_code_for",
    "CriticalFormDocument",
    "RegularityDocument",
    "EllipseDocument",
    "ReportDocument",
    "CharacterizationDocument",
    "LemmaDocument",
]
