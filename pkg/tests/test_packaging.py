import ast
from importlib import metadata
from pathlib import Path

import pytest

import genuine_smalls

ROOT = Path(__file__).resolve().parent.parent


def test_setup_py_declares_no_metadata():
    tree = ast.parse((ROOT / "setup.py").read_text(encoding="utf-8"))
    calls = [
        node for node in ast.walk(tree)
        if isinstance(node, ast.Call) and getattr(node.func, "id", None) == "setup"
    ]
    assert len(calls) == 1
    assert calls[0].args == [] and calls[0].keywords == []


def test_installed_metadata():
    try:
        dist = metadata.distribution("genuine-smalls")
    except metadata.PackageNotFoundError:
        pytest.skip("genuine-smalls is not installed")
    assert dist.version == genuine_smalls.__version__
    scripts = {ep.name: ep.value for ep in dist.entry_points if ep.group == "console_scripts"}
    assert scripts["genuine-smalls"] == "genuine_smalls.cli:main"
