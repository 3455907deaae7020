import pytest
from pydantic import ValidationError

from shifted_balanced.config import Settings


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ("MAX", "MAX_SYT_SIZE", "MAX_BS_SIZE", "MAX_WORD_LENGTH", "VERIFY_WORKERS", "DEBUG"):
        monkeypatch.delenv(f"SHIFTED_BALANCED_{name}", raising=False)


def test_defaults():
    settings = Settings(_env_file=None)
    assert (settings.syt_cap, settings.bs_cap, settings.word_cap) == (12, 9, 16)
    assert settings.verify_workers == 4
    assert settings.debug is False


def test_single_max_overrides_every_cap(monkeypatch):
    monkeypatch.setenv("SHIFTED_BALANCED_MAX", "5")
    settings = Settings(_env_file=None)
    assert (settings.syt_cap, settings.bs_cap, settings.word_cap) == (5, 5, 5)


def test_individual_caps(monkeypatch):
    monkeypatch.setenv("SHIFTED_BALANCED_MAX_BS_SIZE", "7")
    monkeypatch.setenv("SHIFTED_BALANCED_DEBUG", "true")
    settings = Settings(_env_file=None)
    assert settings.bs_cap == 7
    assert settings.syt_cap == 12
    assert settings.debug is True


def test_invalid_values_are_rejected(monkeypatch):
    monkeypatch.setenv("SHIFTED_BALANCED_VERIFY_WORKERS", "0")
    with pytest.raises(ValidationError):
        Settings(_env_file=None)
