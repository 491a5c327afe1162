"""
Tests for utils.config and utils.log
------------------------------------
YAML loading with env expansion, validation into Settings, and logger set-up.
"""

import logging

import pytest

from orthotl.core.errors import ConfigError
from orthotl.utils.config import CONFIG_ENV, DEFAULT_SUITES, Settings, load_cfg, load_settings
from orthotl.utils.log import LOG_FORMAT, get_logger, set_level

pytestmark = pytest.mark.unit


def test_defaults_without_a_file(monkeypatch, tmp_path):
    monkeypatch.setenv(CONFIG_ENV, str(tmp_path / "absent.yaml"))
    assert load_cfg() == {}
    settings = load_settings()
    assert settings.delta_sign == "minus"
    assert settings.seed == 20240101
    assert settings.n_max("cellular") == DEFAULT_SUITES["cellular"]


def test_repository_config_is_valid():
    settings = load_settings(None)
    assert set(DEFAULT_SUITES) <= set(settings.suites)


def test_env_expansion_and_suite_merge(monkeypatch, tmp_path):
    path = tmp_path / "cfg.yaml"
    path.write_text("log_level: ${ORTHOTL_TEST_LEVEL}\nrank_specialization: 3\nsuites:\n  pairing: {n_max: 5}\n")
    monkeypatch.setenv("ORTHOTL_TEST_LEVEL", "DEBUG")
    settings = load_settings(path)
    assert settings.log_level == "DEBUG"
    assert settings.rank_specialization == "3"
    assert settings.n_max("pairing") == 5
    assert settings.n_max("inverse") == DEFAULT_SUITES["inverse"]


def test_bad_configs(tmp_path):
    with pytest.raises(ConfigError):
        load_cfg(tmp_path / "missing.yaml")
    bad = tmp_path / "bad.yaml"
    bad.write_text("delta_sign: sideways\n")
    with pytest.raises(ConfigError):
        load_settings(bad)
    broken = tmp_path / "broken.yaml"
    broken.write_text("suites: [unclosed\n")
    with pytest.raises(ConfigError):
        load_cfg(broken)
    with pytest.raises(ConfigError):
        Settings().n_max("no-such-suite")


def test_logger_has_one_handler():
    logger = get_logger("orthotl.test")
    again = get_logger("orthotl.test")
    assert logger is again
    assert len(logger.handlers) == 1
    assert logger.handlers[0].formatter._fmt == LOG_FORMAT
    set_level("WARNING")
    assert logger.level == logging.WARNING
    set_level("INFO")
