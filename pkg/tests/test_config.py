import pytest

from backend.algebra.errors import ConfigError
from backend.config import Settings, get_settings

ENV = ("MQSYM_DEFAULT_M", "MQSYM_DEFAULT_MONOID", "MQSYM_DEFAULT_TRUNC", "MQSYM_LOG_LEVEL", "PORT")


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ENV:
        monkeypatch.delenv(name, raising=False)


def test_defaults():
    assert get_settings() == Settings()
    assert Settings().default_trunc == 7


def test_overrides(monkeypatch):
    monkeypatch.setenv("MQSYM_DEFAULT_M", "3")
    monkeypatch.setenv("MQSYM_DEFAULT_MONOID", "Weak")
    monkeypatch.setenv("MQSYM_DEFAULT_TRUNC", "5")
    monkeypatch.setenv("MQSYM_LOG_LEVEL", "debug")
    monkeypatch.setenv("PORT", "8000")
    assert get_settings() == Settings(3, "weak", 5, "DEBUG", 8000)


def test_blank_values_fall_back_to_defaults(monkeypatch):
    monkeypatch.setenv("MQSYM_DEFAULT_M", " ")
    assert get_settings().default_m == 2


@pytest.mark.parametrize(
    "name, value",
    [
        ("MQSYM_DEFAULT_M", "two"),
        ("MQSYM_DEFAULT_M", "0"),
        ("MQSYM_DEFAULT_TRUNC", "-1"),
        ("MQSYM_DEFAULT_MONOID", "integers"),
        ("MQSYM_LOG_LEVEL", "LOUD"),
        ("PORT", "0"),
    ],
)
def test_bad_values(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    with pytest.raises(ConfigError):
        get_settings()
