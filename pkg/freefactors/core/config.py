import logging

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

_LOG_FORMATS = ("text", "structured", "json")


class Settings(BaseSettings):
    """Toolkit settings loaded from environment variables.

    All settings can be configured via FREEFACTORS_* environment variables or .env file.
    """

    # Loop-search bound for potential-stick searches (CLI --bound)
    loop_search_bound: int = 40
    # Candidate loops examined per search before the search counts as truncated
    loop_search_max_candidates: int = 200_000

    # Guard on Whitehead descent steps; descent strictly decreases core size
    whitehead_max_steps: int = 10_000

    # Default seed for randomized suites (CLI --seed)
    seed: int = 20240229

    # Acceptance suite sample sizes
    suite_fold_samples: int = 500
    suite_membership_samples: int = 200
    suite_intersection_samples: int = 100
    suite_antipodal_samples: int = 300

    # Logging settings
    log_level: str = "WARNING"
    log_format: str = "text"  # text | structured | json

    @field_validator(
        "loop_search_bound",
        "loop_search_max_candidates",
        "whitehead_max_steps",
    )
    @classmethod
    def validate_bounds_positive(cls, v: int) -> int:
        """Validate search bounds are positive."""
        if v < 1:
            raise ValueError("search bounds must be at least 1")
        return v

    @field_validator(
        "suite_fold_samples",
        "suite_membership_samples",
        "suite_intersection_samples",
        "suite_antipodal_samples",
    )
    @classmethod
    def validate_samples_positive(cls, v: int) -> int:
        """Validate suite sample sizes are positive."""
        if v < 1:
            raise ValueError("suite sample sizes must be at least 1")
        return v

    @field_validator("log_format")
    @classmethod
    def validate_log_format(cls, v: str) -> str:
        """Normalize the log format name.

        Args:
            v: Format name, case-insensitive.

        Returns:
            The lower-cased name, one of text, structured or json.
        """
        v = v.lower()
        if v not in _LOG_FORMATS:
            raise ValueError(f"log_format must be one of {', '.join(_LOG_FORMATS)}")
        return v

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Upper-case the level and reject names the logging module does not know."""
        v = v.upper()
        if not isinstance(logging.getLevelName(v), int):
            raise ValueError(f"unknown log level {v!r}")
        return v

    model_config = SettingsConfigDict(
        env_prefix="FREEFACTORS_", env_file=".env", extra="ignore"
    )


# Global settings instance
settings = Settings()
