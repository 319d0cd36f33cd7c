"""Preset catalog: file format, search path, validation failures."""

import os
import subprocess
import sys

import pytest

from affweyl.errors import EchelonnageError, UnknownPresetError
from affweyl.presets import list_presets, load_action, load_datum, load_group


def test_catalog_contains_shipped_presets():
    names = {row[0] for row in list_presets()}
    assert {"a1-sc", "a1-ad", "a2-sc", "c2-sc", "g2", "folded-a2",
            "folded-a3", "folded-d3", "t1", "t1-inv"} <= names


def test_search_path_env_var(tmp_path):
    custom = tmp_path / "z9.datum"
    custom.write_text(
        "name z9\nlattice custom\nrank 1\nsimples 0\n"
        "root 2 | coroot 1\nroot -2 | coroot -1\n")
    env = dict(os.environ, AFFWEYL_PRESET_PATH=str(tmp_path))
    out = subprocess.run(
        [sys.executable, "-m", "affweyl", "wgroup", "length",
         "--preset", "z9", "--element", "t[1]"],
        capture_output=True, text=True, env=env)
    assert out.returncode == 0 and "length: 2" in out.stdout


def test_missing_action():
    with pytest.raises(UnknownPresetError):
        load_action("a1-sc", "swap")


def test_wall_table_gap(tmp_path):
    bad = tmp_path / "bad.group"
    bad.write_text("name bad\nbase a3-sc\naction swap\nwall -1 1 | 1/2\n")
    os.environ["AFFWEYL_PRESET_PATH"] = str(tmp_path)
    try:
        with pytest.raises(EchelonnageError):
            load_group("bad")
    finally:
        del os.environ["AFFWEYL_PRESET_PATH"]


def test_twisted_group_requires_table(tmp_path):
    from affweyl.iwahori import IwahoriWeylGroup
    act = load_action("a3-sc", "swap")
    with pytest.raises(EchelonnageError):
        IwahoriWeylGroup(act)


def test_bad_stride_rejected(tmp_path):
    bad = tmp_path / "badstride.group"
    bad.write_text("name badstride\nbase a1-sc\naction trivial\nwall 2 | 1/3\n")
    os.environ["AFFWEYL_PRESET_PATH"] = str(tmp_path)
    try:
        with pytest.raises(EchelonnageError):
            load_group("badstride")
    finally:
        del os.environ["AFFWEYL_PRESET_PATH"]


def test_datum_preset_roundtrip():
    for name in ("a1-sc", "g2", "d3"):
        datum = load_datum(name)
        assert datum.name == name
