import io

import pytest

from src.catalog.families import petersen
from src.config import CFG
from src.errors import ParseError, UnknownName
from src.utils import (
    entry_to_group_file,
    load_group_file,
    named_elements,
    parse_names,
    resolve_cap,
    save_group_file,
    select,
    subgroup_of,
)


def test_group_file_round_trip(tmp_path):
    path = tmp_path / "petersen.json"
    save_group_file(entry_to_group_file(petersen("A5")), path)
    group_file = load_group_file(path)
    assert group_file.degree == 5
    elements = named_elements(group_file)
    assert subgroup_of(elements, None, 5).order == 60
    assert subgroup_of(elements, "h0,h1", 5).order == 6


def test_group_file_from_stdin(monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO('{"degree": 3, "generators": {"t": [1, 0, 2]}}'))
    assert load_group_file("-").generators == {"t": [1, 0, 2]}


def test_bad_group_files(tmp_path):
    with pytest.raises(ParseError):
        load_group_file(tmp_path / "missing.json")
    path = tmp_path / "short.json"
    path.write_text('{"degree": 3, "generators": {"t": [1, 0]}}')
    with pytest.raises(ParseError):
        named_elements(load_group_file(path))


def test_names():
    assert parse_names(" a, z ") == ["a", "z"]
    with pytest.raises(ParseError):
        parse_names("a", expected=2)
    with pytest.raises(UnknownName):
        select({}, ["a"])


def test_resolve_cap(monkeypatch):
    monkeypatch.delenv(CFG.cap_env_variable, raising=False)
    assert resolve_cap() == CFG.default_cap
    monkeypatch.setenv(CFG.cap_env_variable, "5000")
    assert resolve_cap() == 5000
    assert resolve_cap(10) == 10
    monkeypatch.setenv(CFG.cap_env_variable, "many")
    with pytest.raises(ParseError):
        resolve_cap()


def test_degree_zero_group_file(tmp_path):
    path = tmp_path / "trivial.json"
    path.write_text('{"degree": 0, "generators": {}}')
    group_file = load_group_file(path)
    assert group_file.degree == 0
    assert subgroup_of(named_elements(group_file), None, 0).order == 1
    path.write_text('{"degree": -1, "generators": {}}')
    with pytest.raises(ParseError):
        load_group_file(path)
