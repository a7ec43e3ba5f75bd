import pytest

from affwreath.exceptions import BadParams
from affwreath.settings import Settings, get_settings, set_settings


@pytest.fixture(autouse=True)
def restore_settings():
    yield
    set_settings(None)


def test_defaults():
    settings = Settings.from_env({})
    assert settings.max_dim == 20000
    assert settings.theta_bound == 64
    assert settings.suite_instances == 200


def test_environment():
    settings = Settings.from_env({"AWPA_MAX_DIM": "500",
                                  "AWPA_SUITE_INSTANCES": "4"})
    assert settings.max_dim == 500
    assert settings.suite_instances == 4

    with pytest.raises(BadParams):
        Settings.from_env({"AWPA_THETA_BOUND": "many"})

    with pytest.raises(BadParams):
        Settings.from_env({"AWPA_MAX_DIM": "0"})


def test_override(monkeypatch):
    set_settings(Settings(max_dim=10))
    assert get_settings().max_dim == 10

    monkeypatch.setenv("AWPA_MAX_DIM", "77")
    set_settings(None)
    assert get_settings().max_dim == 77
