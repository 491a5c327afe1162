"""
utils.config: settings for the CLI and the verification runner

The YAML file at ``config/orthotl.yaml`` (or the path in ``ORTHOTL_CONFIG``)
is read with ``yaml.safe_load``; string values of the form ``${VAR}`` are
replaced by the environment variable of that name when it is set. The
resulting mapping is validated into ``Settings``. A missing file is not an
error: the built-in defaults are used.
"""

from __future__ import annotations

import os
from pathlib import Path
from typing import Any, Literal

import yaml
from pydantic import BaseModel, Field, ValidationError, field_validator

from orthotl.core.errors import ConfigError

PROJECT_ROOT = Path(__file__).resolve().parents[3]
CONFIG_PATH = PROJECT_ROOT / "config" / "orthotl.yaml"
CONFIG_ENV = "ORTHOTL_CONFIG"


class SuiteSettings(BaseModel):
    n_max: int = Field(ge=0)


DEFAULT_SUITES: dict[str, int] = {
    "qscalars": 12,
    "dimensions": 12,
    "shapes": 10,
    "tensor": 8,
    "schur": 4,
    "orthogonality": 8,
    "nu": 7,
    "pairing": 8,
    "recursion": 8,
    "inverse": 8,
    "pipp": 8,
    "orbit": 7,
    "tl-relations": 6,
    "commute": 6,
    "cellular": 6,
    "ei-omega": 8,
    "stability": 7,
    "schur-weyl": 5,
}


class Settings(BaseModel):
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "INFO"
    default_format: Literal["json", "csv"] = "json"
    seed: int = 20240101
    delta_sign: Literal["plus", "minus"] = "minus"
    rank_specialization: str = "2"
    suites: dict[str, SuiteSettings] = Field(
        default_factory=lambda: {name: SuiteSettings(n_max=n) for name, n in DEFAULT_SUITES.items()}
    )

    @field_validator("rank_specialization", mode="before")
    @classmethod
    def _stringify(cls, value: Any) -> str:
        return str(value)

    @field_validator("suites", mode="after")
    @classmethod
    def _fill_suites(cls, value: dict[str, SuiteSettings]) -> dict[str, SuiteSettings]:
        merged = {name: SuiteSettings(n_max=n) for name, n in DEFAULT_SUITES.items()}
        merged.update(value)
        return merged

    def n_max(self, suite: str) -> int:
        if suite not in self.suites:
            raise ConfigError(f"no n cap configured for suite {suite!r}")
        return self.suites[suite].n_max


def _expand_env(value: Any) -> Any:
    if isinstance(value, str) and value.startswith("${") and value.endswith("}"):
        return os.environ.get(value[2:-1], value)
    if isinstance(value, dict):
        return {k: _expand_env(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_expand_env(v) for v in value]
    return value


def load_cfg(path: str | Path | None = None) -> dict[str, Any]:
    """Load the raw configuration mapping, with env var expansion."""
    if path is None:
        path = os.environ.get(CONFIG_ENV) or CONFIG_PATH
        if not Path(path).exists():
            return {}
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"Missing config file {path}")
    try:
        with path.open("r", encoding="utf-8") as f:
            config = yaml.safe_load(f) or {}
    except yaml.YAMLError as e:
        raise ConfigError(f"Unreadable config file {path}: {e}") from e
    if not isinstance(config, dict):
        raise ConfigError(f"Config file {path} must hold a mapping, got {type(config).__name__}")
    return _expand_env(config)


def load_settings(path: str | Path | None = None) -> Settings:
    try:
        return Settings.model_validate(load_cfg(path))
    except ValidationError as e:
        raise ConfigError(f"Invalid configuration: {e}") from e
