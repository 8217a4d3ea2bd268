from functools import lru_cache
from typing import Literal

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class BaseConfigSettings(BaseSettings):
    model_config = SettingsConfigDict(
        extra="ignore",
        frozen=True,
        env_nested_delimiter="__",
        case_sensitive=False,
    )


class GroupEngineSettings(BaseConfigSettings):
    """Limits and switches for group construction."""

    model_config = SettingsConfigDict(
        extra="ignore",
        frozen=True,
        case_sensitive=False,
        env_prefix="CCSGRAPH_",
    )

    order_cap: int = Field(default=20000, description="Largest group order a closure may reach")
    table_max_order: int = Field(
        default=512, description="Permutation groups up to this order get a Cayley table"
    )
    quotient_max_order: int = Field(
        default=2048, description="Largest quotient a coset table may be built for"
    )
    exhaustive_normality: bool = Field(
        default=False, description="Test normality against every element, not only generators"
    )

    @field_validator("order_cap", "table_max_order", "quotient_max_order")
    @classmethod
    def validate_positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError("Order limits must be positive")
        return v


class CatalogSettings(BaseConfigSettings):
    model_config = SettingsConfigDict(
        extra="ignore",
        frozen=True,
        case_sensitive=False,
        env_prefix="CCSGRAPH_CATALOG__",
    )

    max_symmetric_degree: int = 8
    max_affine_prime: int = 31
    include_large: bool = False  # adds S7 to the default catalog


class SweepSettings(BaseConfigSettings):
    model_config = SettingsConfigDict(
        extra="ignore",
        frozen=True,
        case_sensitive=False,
        env_prefix="CCSGRAPH_SWEEP__",
    )

    max_order: int = 384  # global cap for verify/search
    workers: int = 1  # 1 runs the sweep in-process
    show_progress: bool = False


class Settings(BaseConfigSettings):
    model_config = SettingsConfigDict(
        extra="ignore",
        frozen=True,
        env_nested_delimiter="__",
        case_sensitive=False,
        env_prefix="CCSGRAPH_",
    )

    app_version: str = "0.1.0"
    log_level: Literal["TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR"] = "WARNING"
    schema_version: int = 1

    engine: GroupEngineSettings = Field(default_factory=GroupEngineSettings)
    catalog: CatalogSettings = Field(default_factory=CatalogSettings)
    sweep: SweepSettings = Field(default_factory=SweepSettings)


@lru_cache
def get_settings() -> Settings:
    return Settings()
