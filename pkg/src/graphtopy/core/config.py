"""Settings and counting limits for graphtopy."""

from typing import Literal

try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class GraphtopySettings(BaseSettings):
    """Runtime settings. Only logging behaviour is environment-tunable."""

    model_config = SettingsConfigDict(
        env_file=[".env"],
        env_file_encoding="utf-8",
        env_prefix="GRAPHTOPY_",
        case_sensitive=True,
        extra="ignore",
    )

    PROJECT_NAME: str = "graphtopy"
    ENVIRONMENT: str = "development"

    DEBUG: bool = False
    LOG_JSON: bool = False

    @computed_field
    @property
    def log_level(self) -> str:
        """Log level derived from DEBUG and ENVIRONMENT."""
        if self.ENVIRONMENT == "production":
            return "WARNING"
        return "DEBUG" if self.DEBUG else "WARNING"


class CountingLimits(BaseModel):
    """Truncation bounds used by the counting decisions.

    These never come from the environment: results depend on command-line
    flags only.
    """

    model_config = ConfigDict(frozen=True)

    # P: series order and bounded-bijectivity bound
    TRUNCATION_ORDER: int = Field(default=8, description="Series / cycle bound P")
    # L: primitive-cycle truncation
    CYCLE_BOUND: int = Field(default=8, description="Cycle length bound L")
    FOREST_DEPTH: int = Field(default=1, description="R_X^p forest depth")
    OUTPUT_FORMAT: Literal["json", "text"] = "text"

    @model_validator(mode="after")
    def _validate_bounds(self) -> Self:
        for name in ("TRUNCATION_ORDER", "CYCLE_BOUND", "FOREST_DEPTH"):
            value = getattr(self, name)
            if value < 1:
                raise ValueError(f"{name} must be >= 1, got {value}")
        return self


settings = GraphtopySettings()
limits = CountingLimits()
