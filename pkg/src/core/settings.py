"""Configuration settings for the application.

This module contains all configuration settings for hypercover, including
enumeration budgets, worker counts, logging and the sampled-width parameters.
Values come from the environment and an optional ``.env`` file.
"""
import os

from pydantic_settings import BaseSettings, SettingsConfigDict

BASE_DIR = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))


class BaseConfig(BaseSettings):
    """Base application configuration.

    Contains the artifact version, worker count and log level.
    """
    VERSION: str = "0.1.0"
    THREADS: int = 1
    LOG_LEVEL: str = "WARNING"

    model_config = SettingsConfigDict(
        env_prefix="HYPERCOVER_",
        env_file=os.path.join(BASE_DIR, ".env"),
        extra="ignore",
    )


class BudgetConfig(BaseSettings):
    """Enumeration budgets and size caps.

    ``HYPERCOVER_BUDGET`` overrides every default budget at once. The size caps
    are not budgets: they bound the point count of searches whose cost grows
    with the Stirling numbers of the second kind.
    """
    BUDGET: int | None = None

    PARTITION_BUDGET: int = 5_000_000
    SUBSET_BUDGET: int = 2_000_000
    SUPPORT_BUDGET: int = 1_000_000
    EDGE_SUBSET_BUDGET: int = 2_000_000
    BOX_BUDGET: int = 100_000
    PAIR_BUDGET: int = 500_000
    SEARCH_BUDGET: int = 20_000

    COVER_MAX_POINTS: int = 16
    COVER_MAX_POINTS_PAIR: int = 22
    CONVERSE_MAX_POINTS: int = 10

    model_config = SettingsConfigDict(
        env_prefix="HYPERCOVER_",
        env_file=os.path.join(BASE_DIR, ".env"),
        extra="ignore",
    )

    def resolve(self, default: int, explicit: int | None = None) -> int:
        """Pick the effective budget.

        Args:
            default (int): The configured default for this kind of enumeration
            explicit (int | None): A caller-supplied budget, e.g. from ``--budget``

        Returns:
            int: ``explicit`` if given, else ``HYPERCOVER_BUDGET`` if set, else ``default``
        """
        if explicit is not None:
            return explicit
        if self.BUDGET is not None:
            return self.BUDGET
        return default


class PlankConfig(BaseSettings):
    """Sampled width configuration.

    Only used for the non-certified width bound in dimension 4 and above.
    """
    WIDTH_SAMPLES: int = 2000
    SAMPLE_SEED: int = 0
    SAMPLE_RANGE: int = 3

    model_config = SettingsConfigDict(
        env_prefix="HYPERCOVER_",
        env_file=os.path.join(BASE_DIR, ".env"),
        extra="ignore",
    )


class Settings(BaseSettings):
    """Main settings container.

    Aggregates all configuration settings into a single container.
    """
    base_config: BaseConfig = BaseConfig()
    budget_config: BudgetConfig = BudgetConfig()
    plank_config: PlankConfig = PlankConfig()


settings = Settings()
