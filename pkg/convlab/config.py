"""
Configuration management for convlab.

This module loads and validates CONVLAB_* environment variables with
sensible defaults for desk-scale runs. A JSON config file may supply the
same settings under the flag names; environment variables override the
file, and command-line flags (applied by the CLI) override both.
"""

import os
from fractions import Fraction
from typing import Any, Dict, List, Optional


class ConfigurationError(Exception):
    """Raised when configuration is missing or invalid."""
    pass


VALID_FORMATS = ("json", "csv", "svg")
VALID_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

# flag name -> (environment variable, default text)
SETTINGS = {
    "seed": ("CONVLAB_SEED", None),
    "replicates": ("CONVLAB_REPLICATES", "10000"),
    "epsilon": ("CONVLAB_EPSILON", "0.1"),
    "delta": ("CONVLAB_DELTA", "0.05"),
    "threshold": ("CONVLAB_THRESHOLD", "0.99"),
    "drop_threshold": ("CONVLAB_DROP_THRESHOLD", "0.02"),
    "coverage_margin": ("CONVLAB_COVERAGE_MARGIN", "0.01"),
    "horizon": ("CONVLAB_HORIZON", "12"),
    "prior_truncation": ("CONVLAB_PRIOR_TRUNCATION", "64"),
    "out": ("CONVLAB_OUT", "reports"),
    "format": ("CONVLAB_FORMAT", "json,csv"),
    "log_level": ("CONVLAB_LOG_LEVEL", "WARNING"),
    "oracle_max_worlds": ("CONVLAB_ORACLE_MAX_WORLDS", "250000"),
}


class Config:
    """
    Toolkit configuration.

    Attributes mirror the CLI flags. Numeric thresholds are exact
    Fractions so that reports never depend on float parsing.
    """

    SEED: Optional[int]
    REPLICATES: int
    EPSILON: Fraction
    DELTA: Fraction
    THRESHOLD: Fraction
    DROP_THRESHOLD: Fraction
    COVERAGE_MARGIN: Fraction
    HORIZON: int
    PRIOR_TRUNCATION: int
    OUT: str
    FORMATS: List[str]
    LOG_LEVEL: str
    ORACLE_MAX_WORLDS: int

    def __init__(
        self,
        file_values: Optional[Dict[str, Any]] = None,
        flag_values: Optional[Dict[str, Any]] = None,
    ):
        """
        Initialize configuration.

        Args:
            file_values: Optional mapping loaded from a JSON config file,
                keyed by flag name (e.g. "seed", "epsilon")
            flag_values: Optional command-line values, same keys; None
                entries are ignored
        """
        self._file_values = dict(file_values or {})
        self._flag_values = {
            key: value for key, value in (flag_values or {}).items() if value is not None
        }
        for source, values in (("config file", self._file_values), ("flag", self._flag_values)):
            unknown = sorted(set(values) - set(SETTINGS))
            if unknown:
                raise ConfigurationError(f"Unknown {source} keys: {unknown}")
        self._load_config()
        self._validate_config()

    @staticmethod
    def _text(value: Any) -> str:
        if isinstance(value, (list, tuple)):
            return ",".join(str(v) for v in value)
        return str(value)

    def _raw(self, key: str) -> Optional[str]:
        env_name, default = SETTINGS[key]
        if key in self._flag_values:
            return self._text(self._flag_values[key])
        env_value = os.getenv(env_name)
        if env_value is not None and env_value != "":
            return env_value
        if self._file_values.get(key) is not None:
            return self._text(self._file_values[key])
        return default

    def _int(self, key: str) -> Optional[int]:
        raw = self._raw(key)
        if raw is None:
            return None
        try:
            return int(raw)
        except ValueError:
            raise ConfigurationError(
                f"{SETTINGS[key][0]} must be an integer, got: {raw}"
            )

    def _fraction(self, key: str) -> Fraction:
        raw = self._raw(key)
        try:
            return Fraction(raw)
        except (ValueError, ZeroDivisionError, TypeError):
            raise ConfigurationError(
                f"{SETTINGS[key][0]} must be a number, got: {raw}"
            )

    def _load_config(self):
        """Load configuration values with defaults."""
        self.SEED = self._int("seed")
        self.REPLICATES = self._int("replicates")
        self.EPSILON = self._fraction("epsilon")
        self.DELTA = self._fraction("delta")
        self.THRESHOLD = self._fraction("threshold")
        self.DROP_THRESHOLD = self._fraction("drop_threshold")
        self.COVERAGE_MARGIN = self._fraction("coverage_margin")
        self.HORIZON = self._int("horizon")
        self.PRIOR_TRUNCATION = self._int("prior_truncation")
        self.OUT = self._raw("out")
        self.FORMATS = [
            fmt.strip().lower()
            for fmt in self._raw("format").split(",")
            if fmt.strip()
        ]
        self.LOG_LEVEL = self._raw("log_level").upper()
        self.ORACLE_MAX_WORLDS = self._int("oracle_max_worlds")

    def _validate_config(self):
        """
        Validate configuration values.

        Raises:
            ConfigurationError: If any value is outside its domain
        """
        errors = []

        if self.SEED is not None and self.SEED < 0:
            errors.append(f"CONVLAB_SEED must be non-negative, got: {self.SEED}")

        if self.REPLICATES < 1:
            errors.append(
                f"CONVLAB_REPLICATES must be at least 1, got: {self.REPLICATES}"
            )

        if self.EPSILON <= 0:
            errors.append(f"CONVLAB_EPSILON must be positive, got: {self.EPSILON}")

        if not (0 < self.DELTA < 1):
            errors.append(
                f"CONVLAB_DELTA must be strictly between 0 and 1, got: {self.DELTA}"
            )

        if not (0 < self.THRESHOLD < 1):
            errors.append(
                f"CONVLAB_THRESHOLD must be strictly between 0 and 1, got: {self.THRESHOLD}"
            )

        if not (0 <= self.DROP_THRESHOLD < 1):
            errors.append(
                f"CONVLAB_DROP_THRESHOLD must be in [0, 1), got: {self.DROP_THRESHOLD}"
            )

        if not (0 <= self.COVERAGE_MARGIN < 1):
            errors.append(
                f"CONVLAB_COVERAGE_MARGIN must be in [0, 1), got: {self.COVERAGE_MARGIN}"
            )

        if self.HORIZON < 1:
            errors.append(f"CONVLAB_HORIZON must be at least 1, got: {self.HORIZON}")

        if self.PRIOR_TRUNCATION < 1:
            errors.append(
                f"CONVLAB_PRIOR_TRUNCATION must be at least 1, got: {self.PRIOR_TRUNCATION}"
            )

        if not self.OUT:
            errors.append("CONVLAB_OUT cannot be empty.")

        bad_formats = [fmt for fmt in self.FORMATS if fmt not in VALID_FORMATS]
        if bad_formats or not self.FORMATS:
            errors.append(
                f"CONVLAB_FORMAT must list formats from {list(VALID_FORMATS)}, "
                f"got: {self.FORMATS}"
            )

        if self.LOG_LEVEL not in VALID_LOG_LEVELS:
            errors.append(
                f"CONVLAB_LOG_LEVEL must be one of {list(VALID_LOG_LEVELS)}, "
                f"got: {self.LOG_LEVEL}"
            )

        if self.ORACLE_MAX_WORLDS < 1:
            errors.append(
                f"CONVLAB_ORACLE_MAX_WORLDS must be positive, got: {self.ORACLE_MAX_WORLDS}"
            )

        if errors:
            error_message = "Configuration validation failed:\n" + "\n".join(
                f"  - {error}" for error in errors
            )
            raise ConfigurationError(error_message)

    def with_overrides(self, **flags: Any) -> "Config":
        """
        Return a new Config with command-line flags applied on top.

        Flags set to None are ignored. Validation runs again on the result.
        """
        merged = dict(self._flag_values)
        merged.update({key: value for key, value in flags.items() if value is not None})
        return Config(self._file_values, merged)

    def as_dict(self) -> Dict[str, Any]:
        """Canonical, JSON-friendly view used for config hashing."""
        return {
            "seed": self.SEED,
            "replicates": self.REPLICATES,
            "epsilon": str(self.EPSILON),
            "delta": str(self.DELTA),
            "threshold": str(self.THRESHOLD),
            "drop_threshold": str(self.DROP_THRESHOLD),
            "coverage_margin": str(self.COVERAGE_MARGIN),
            "horizon": self.HORIZON,
            "prior_truncation": self.PRIOR_TRUNCATION,
            "oracle_max_worlds": self.ORACLE_MAX_WORLDS,
        }

    def __repr__(self) -> str:
        return (
            f"Config(\n"
            f"  SEED={self.SEED}\n"
            f"  REPLICATES={self.REPLICATES}\n"
            f"  EPSILON={self.EPSILON}\n"
            f"  DELTA={self.DELTA}\n"
            f"  THRESHOLD={self.THRESHOLD}\n"
            f"  OUT={self.OUT}\n"
            f"  FORMATS={self.FORMATS}\n"
            f")"
        )


_config: Optional[Config] = None


def get_config() -> Config:
    """
    Get the global configuration instance.

    Raises:
        ConfigurationError: If configuration is invalid
    """
    global _config
    if _config is None:
        _config = Config()
    return _config


def reload_config(file_values: Optional[Dict[str, Any]] = None) -> Config:
    """
    Reload configuration from the environment (and an optional file mapping).

    Useful for testing or when environment variables change.
    """
    global _config
    _config = Config(file_values)
    return _config
