"""Configuration management using Pydantic Settings."""

import os
from pathlib import Path
from typing import Optional
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from HERMITIA_* environment variables and .env file."""

    model_config = SettingsConfigDict(
        env_prefix="HERMITIA_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Parallelism (None = all cores)
    threads: Optional[int] = Field(None, ge=1, description="Worker process cap")

    # Search caps
    truant_cap: int = Field(1000, ge=1, description="Largest value searched when looking for a truant")
    top_truant_cap: int = Field(
        290,
        ge=1,
        description="Truant cap for the top rank of an escalation tree",
    )
    empirical_bound: int = Field(2000, ge=1, description="Bound for empirical universality sweeps")
    equivalence_theta_bound: int = Field(
        12,
        ge=1,
        description="Values up to this bound are counted to bucket forms before isometry search",
    )

    # Directories
    output_dir: Path = Field(Path("output"))
    cache_dir: Path = Field(Path(".cache"))
    use_tree_cache: bool = Field(True, description="Persist escalation trees in the SQLite cache")

    # Logging
    log_level: str = Field("INFO")
    log_format: str = Field("json", pattern="^(json|text)$")

    def worker_count(self) -> int:
        """Resolve the configured thread cap to a concrete number of workers."""
        if self.threads is not None:
            return self.threads
        return os.cpu_count() or 1


# Instantiate global settings
settings = Settings()
