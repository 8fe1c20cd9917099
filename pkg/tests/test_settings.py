import pytest
from pydantic import ValidationError

from freefactors.core.config import Settings


def test_defaults() -> None:
    settings = Settings(_env_file=None)

    assert settings.loop_search_bound == 40
    assert settings.seed == 20240229
    assert settings.log_format == "text"
    assert settings.log_level == "WARNING"


def test_environment_overrides(monkeypatch) -> None:
    monkeypatch.setenv("FREEFACTORS_LOOP_SEARCH_BOUND", "12")
    monkeypatch.setenv("FREEFACTORS_SUITE_FOLD_SAMPLES", "5")
    monkeypatch.setenv("FREEFACTORS_SEED", "7")

    settings = Settings(_env_file=None)
    assert settings.loop_search_bound == 12
    assert settings.suite_fold_samples == 5
    assert settings.seed == 7


def test_env_file(tmp_path) -> None:
    env = tmp_path / ".env"
    env.write_text("FREEFACTORS_WHITEHEAD_MAX_STEPS=99\n")

    settings = Settings(_env_file=env)
    assert settings.whitehead_max_steps == 99


@pytest.mark.parametrize(
    ("raw", "expected"),
    [("json", "json"), ("JSON", "json"), ("Structured", "structured")],
)
def test_log_format_normalized(monkeypatch, raw: str, expected: str) -> None:
    monkeypatch.setenv("FREEFACTORS_LOG_FORMAT", raw)

    assert Settings(_env_file=None).log_format == expected


def test_log_level_normalized(monkeypatch) -> None:
    monkeypatch.setenv("FREEFACTORS_LOG_LEVEL", "debug")

    assert Settings(_env_file=None).log_level == "DEBUG"


@pytest.mark.parametrize(
    ("name", "raw"),
    [
        ("FREEFACTORS_LOG_FORMAT", "xml"),
        ("FREEFACTORS_LOG_LEVEL", "chatty"),
        ("FREEFACTORS_LOOP_SEARCH_BOUND", "0"),
        ("FREEFACTORS_WHITEHEAD_MAX_STEPS", "-1"),
        ("FREEFACTORS_SUITE_ANTIPODAL_SAMPLES", "0"),
    ],
)
def test_invalid_values_rejected(monkeypatch, name: str, raw: str) -> None:
    monkeypatch.setenv(name, raw)

    with pytest.raises(ValidationError):
        Settings(_env_file=None)
