import json
from pathlib import Path

import pytest

from Utils.errors import SizeBoundError, StructureInvalid
from Utils.serialize import load_structure

TEST_DIR = Path(__file__).resolve().parents[1]
VALID = sorted((TEST_DIR / "valid_tests").glob("*.json"))
INVALID = sorted((TEST_DIR / "invalid_tests").glob("*.json"))


def test_fixture_directories_are_populated():
    assert len(VALID) >= 8
    assert len(INVALID) >= 8


@pytest.mark.parametrize("path", VALID, ids=lambda p: p.stem)
def test_valid_fixture_loads(path):
    S = load_structure(path)
    assert S.n == json.loads(path.read_text())["n"]


@pytest.mark.parametrize("path", INVALID, ids=lambda p: p.stem)
def test_invalid_fixture_is_rejected_with_its_kind(path):
    expected = json.loads(path.read_text())["description"]
    if expected == "SizeBound":
        with pytest.raises(SizeBoundError):
            load_structure(path)
        return
    with pytest.raises(StructureInvalid) as e:
        load_structure(path)
    assert e.value.errors[0].kind == expected


def test_unreadable_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{ not json")
    with pytest.raises(StructureInvalid) as e:
        load_structure(path)
    assert e.value.errors[0].kind == "MalformedTable"
