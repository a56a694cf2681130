"""Configuration management for polyfoci"""
from pydantic import BaseModel, ConfigDict, Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Tolerances(BaseModel):
    """Default numeric tolerances, one record for the whole engine.

    All values are relative to the scale named in the field description.
    Override per call with ``tol.model_copy(update={...})``.
    """

    model_config = ConfigDict(frozen=True)

    tol_root: float = Field(1e-10, gt=0, description="Backward error of accepted roots")
    tol_cluster: float = Field(1e-7, gt=0, description="Root merge distance / Cauchy radius")
    max_iterations: int = Field(200, ge=1, description="Aberth-Ehrlich iteration cap")
    tol_regular: float = Field(1e-6, gt=0, description="Fourier residual / polygon diameter")
    tol_critical: float = Field(1e-6, gt=0, description="Critical-form residual / spread")
    tol_coincident: float = Field(
        1e-9, gt=0, description="Shifted symmetric functions / scale^k for a single point"
    )
    tol_focus: float = Field(1e-7, gt=0, description="Focus pair error / polygon diameter")
    tol_tangency: float = Field(1e-7, gt=0, description="Normalized tangency discriminant")
    tol_midpoint: float = Field(1e-9, gt=0, description="Midpoint defect / polygon diameter")
    tol_degenerate_level: float = Field(
        1e-6, gt=0, description="Distance of a Chebyshev level from [-1, 1]"
    )


class Settings(BaseSettings):
    """Application settings loaded from environment variables"""

    # Application
    env: str = "development"
    log_level: str = "INFO"

    # Batch processing
    max_workers: int = 4

    # Numerics
    tolerances: Tolerances = Tolerances()

    model_config = SettingsConfigDict(
        env_prefix="POLYFOCI_",
        env_file=".env",
        env_nested_delimiter="__",
        case_sensitive=False,
    )


# Global settings instance
settings = Settings()


def get_settings() -> Settings:
    """Get application settings instance.

    Returns:
        Settings: The global settings instance.
    """
    return settings


def resolve_tolerances(tol: Tolerances | None = None) -> Tolerances:
    """Return ``tol`` or the configured defaults."""
    return tol if tol is not None else get_settings().tolerances
