"""
Runtime settings

Values come from RAINBOW_* environment variables and, when present, a `.env`
file in the working directory. CLI flags override them per run.
"""

from functools import lru_cache
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class RainbowSettings(BaseSettings):
    """Defaults and guards shared by the solver, campaigns and CLI"""

    model_config = SettingsConfigDict(
        env_prefix="RAINBOW_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Run defaults
    seed: int = Field(default=0, ge=0, description="Default seed when --seed is absent")
    threads: Optional[int] = Field(default=None, ge=1, description="Worker cap (None = all cores)")
    node_budget: Optional[int] = Field(default=None, ge=1, description="Default solver node budget")
    log_level: str = "INFO"

    # Solver guards
    brute_force_limit: int = Field(default=10**7, description="Max product of family sizes for the oracle")
    extremal_max_n: int = 8
    extremal_max_k: int = 3
    extremal_max_t: int = 3

    # Campaign guards
    campaign_max_n: int = 9
    campaign_max_k: int = 3
    campaign_max_t: int = 3
    corollary26_max_n: int = 4
    corollary26_max_k: int = 3

    # Inequality checkers
    lemma34_epsilon: float = Field(default=0.2, gt=0.0, lt=1.0)
    lemma34_min_n: int = 1000
    float_tolerance: float = 1e-9

    # Randomized sampler: max_trials defaults to this factor times t
    sampler_trial_factor: int = 64


@lru_cache
def get_settings() -> RainbowSettings:
    return RainbowSettings()
