"""Application settings and configuration."""

from functools import lru_cache
from pathlib import Path
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables.

    Ring descriptors come from CLI flags only.
    """

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        env_prefix="TDP_",
    )

    # Database (verification runs and Frobenius coefficient cache)
    duckdb_path: str = "./data/tdp.duckdb"
    use_coefficient_cache: bool = False

    # Logging
    log_level: str = "INFO"

    # Randomized suites
    default_seed: int = 20240601

    # Scan bound for the q-characteristic
    qchar_scan_bound: int = Field(default=64, ge=2)

    # Working precision defaults
    default_trunc: int = Field(default=8, ge=0)
    default_degree: int = Field(default=6, ge=0)

    # Iteration cap when testing quasi-nilpotence of q-difference modules
    nilpotency_limit: int = Field(default=256, ge=1)

    # Parallel suite cases (1 = run inline)
    max_workers: int = Field(default=1, ge=1)

    @property
    def duckdb_path_obj(self) -> Path:
        """Get DuckDB path as Path object."""
        path = Path(self.duckdb_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        return path


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
