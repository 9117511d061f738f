import json

import pytest

from genuine_smalls.config import DEFAULT_KTYPE_BOUND, DEFAULT_ORACLE_BOUND, Settings
from genuine_smalls.ctx import current_settings, use_settings
from genuine_smalls.exceptions import OracleBoundExceeded
from genuine_smalls.rootsys import build
from genuine_smalls.weylrep.oracle import WeylGroupOracle, oracle_group


def test_defaults():
    settings = Settings.from_env({})
    assert settings.cache_dir is None
    assert settings.oracle_bound == DEFAULT_ORACLE_BOUND
    assert settings.ktype_bound == DEFAULT_KTYPE_BOUND
    assert settings.deep is False


def test_from_env():
    settings = Settings.from_env(
        {
            "GENUINE_SMALLS_CACHE": "/tmp/tables",
            "GENUINE_SMALLS_ORACLE_BOUND": "5000",
            "GENUINE_SMALLS_KTYPE_BOUND": "4",
        }
    )
    assert settings == Settings("/tmp/tables", 5000, 4)
    assert Settings.from_env({"GENUINE_SMALLS_CACHE": ""}).cache_dir is None


def test_from_os_environ(monkeypatch):
    monkeypatch.setenv("GENUINE_SMALLS_KTYPE_BOUND", "3")
    assert Settings.from_env().ktype_bound == 3
    assert current_settings().ktype_bound == 3


def test_bad_integer():
    with pytest.raises(ValueError):
        Settings.from_env({"GENUINE_SMALLS_ORACLE_BOUND": "many"})


def test_update_copies():
    settings = Settings()
    deep = settings.update(deep=True)
    assert deep.deep and not settings.deep


def test_use_settings_nests():
    outer, inner = Settings(ktype_bound=2), Settings(ktype_bound=3)
    with use_settings(outer):
        with use_settings(inner):
            assert current_settings() is inner
        assert current_settings() is outer
    assert current_settings() == Settings.from_env()


def test_oracle_bound_is_enforced():
    with use_settings(Settings(oracle_bound=10)):
        with pytest.raises(OracleBoundExceeded) as info:
            oracle_group("B", 3)
    assert info.value.order == 48
    assert info.value.bound == 10


def test_character_table_cache(tmp_path):
    with use_settings(Settings(cache_dir=str(tmp_path))):
        group = oracle_group("B", 2)
    path = tmp_path / "B2.json"
    assert path.exists()
    data = json.loads(path.read_text(encoding="utf-8"))
    assert data["type"] == "B2"
    reloaded = WeylGroupOracle(build("B", 2), 100, str(tmp_path))
    assert [ch.values for ch in reloaded.characters] == [ch.values for ch in group.characters]


def test_stale_cache_is_ignored(tmp_path):
    (tmp_path / "A2.json").write_text(
        json.dumps({"type": "A2", "representatives": [], "values": []}), encoding="utf-8"
    )
    group = WeylGroupOracle(build("A", 2), 100, str(tmp_path))
    assert sorted(ch.degree for ch in group.characters) == [1, 1, 2]


@pytest.mark.parametrize(
    "content", ['{"type": "A2", "repres', "[]", '{"type": "A2", "values": [[1]]}']
)
def test_unreadable_cache_is_recomputed(tmp_path, caplog, content):
    (tmp_path / "A2.json").write_text(content, encoding="utf-8")
    group = WeylGroupOracle(build("A", 2), 100, str(tmp_path))
    assert sorted(ch.degree for ch in group.characters) == [1, 1, 2]
    assert "character table cache" in caplog.text
    assert [p.name for p in tmp_path.iterdir()] == ["A2.json"]
    data = json.loads((tmp_path / "A2.json").read_text(encoding="utf-8"))
    assert len(data["values"]) == 3
