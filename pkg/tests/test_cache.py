import os

import pytest

from jldist.oracle import OracleError
from jldist.oracle.cache import CACHE_ENV, FORMAT_VERSION, cache_path, dumps, gl_table, loads, write_atomic


@pytest.mark.parametrize("m,q", [(1, 5), (2, 3), (2, 5), (2, 9)])
def test_round_trip_is_byte_exact(tables, m, q):
    text = dumps(tables(m, q))
    again = loads(text)
    assert dumps(again) == text
    assert again.rows == tables(m, q).rows


def test_build_then_hit(tmp_path):
    table, hit = gl_table(2, 3, directory=tmp_path)
    assert not hit
    path = cache_path(2, 3, tmp_path)
    assert path.exists() and path.read_text().startswith(f"jldist-character-table {FORMAT_VERSION}\n")
    cached, hit = gl_table(2, 3, directory=tmp_path)
    assert hit and dumps(cached) == path.read_text()
    assert [p.name for p in tmp_path.iterdir()] == [path.name]


def test_env_var_selects_directory(tmp_path, monkeypatch):
    monkeypatch.setenv(CACHE_ENV, str(tmp_path / "elsewhere"))
    gl_table(1, 3)
    assert (tmp_path / "elsewhere" / cache_path(1, 3).name).exists()


def test_no_cache_writes_nothing(tmp_path):
    _, hit = gl_table(1, 5, use_cache=False, directory=tmp_path)
    assert not hit and not list(tmp_path.iterdir())


def test_damaged_file_is_rebuilt(tmp_path):
    gl_table(2, 3, directory=tmp_path)
    path = cache_path(2, 3, tmp_path)
    good = path.read_text()
    lines = good.splitlines()
    lines[-1] = lines[-1].replace("1", "2", 1)
    path.write_text("\n".join(lines) + "\n")
    _, hit = gl_table(2, 3, directory=tmp_path)
    assert not hit and path.read_text() == good


def test_loads_rejects(tables):
    text = dumps(tables(2, 3))
    with pytest.raises(OracleError):
        loads(text.replace(f"jldist-character-table {FORMAT_VERSION}", "jldist-character-table 99"))
    with pytest.raises(OracleError):
        loads(text.replace("order 48", "order 47"))


def test_write_atomic_replaces(tmp_path):
    path = tmp_path / "sub" / "f.txt"
    write_atomic(path, "one\n")
    write_atomic(path, "two\n")
    assert path.read_text() == "two\n"
    assert os.listdir(path.parent) == ["f.txt"]
