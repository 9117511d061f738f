import random

import pytest

from genuine_smalls.config import Settings
from genuine_smalls.ctx import use_settings

ENVIRONMENT = (
    "GENUINE_SMALLS_CACHE",
    "GENUINE_SMALLS_ORACLE_BOUND",
    "GENUINE_SMALLS_KTYPE_BOUND",
)


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for name in ENVIRONMENT:
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def settings():
    active = Settings()
    with use_settings(active):
        yield active
