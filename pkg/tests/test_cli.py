import json
from pathlib import Path

import pytest

from bkpuzzles.cli import main

DATA = Path(__file__).resolve().parent.parent / "src" / "bkpuzzles" / "data"


@pytest.fixture(autouse=True)
def isolated_cache(monkeypatch, tmp_path):
    monkeypatch.setenv("BKPUZZLES_CACHE", str(tmp_path / "cache.jsonl"))


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count(capsys):
    code, out, _ = run(capsys, "count", "12132", "23112", "32121")
    assert code == 0
    assert out.strip() == "1"
    code, out, _ = run(capsys, "count", "111", "111", "111")
    assert code == 0
    assert out.strip() == "1"


def test_count_parse_error(capsys):
    code, _, err = run(capsys, "count", "12x", "111", "111")
    assert code == 2
    assert "error" in err


def test_usage_error_exit_2(capsys):
    assert main(["bogus"]) == 2
    capsys.readouterr()


def test_list_json(capsys):
    code, out, _ = run(capsys, "list", "1212", "2112", "2121", "--format", "json")
    assert code == 0
    puzzles = json.loads(out)
    assert len(puzzles) == 1
    assert puzzles[0]["n"] == 4


def test_list_ascii_and_svg(capsys):
    code, out, _ = run(capsys, "list", "12", "12", "12", "--format", "ascii")
    assert code == 0 and "/" in out
    code, out, _ = run(capsys, "list", "12", "12", "12", "--format", "svg", "--arrows")
    assert code == 0 and out.startswith("<svg ")


def test_factor(capsys):
    code, out, _ = run(capsys, "factor", "12132", "23112", "32121")
    assert code == 0
    assert "D_21: 1" in out and "D_31: 1" in out and "D_32: 1" in out
    assert "product=1 count=1 OK" in out


def test_factor_violation_exits_1(capsys):
    code, out, _ = run(capsys, "factor", "213", "132", "321")
    assert code == 1
    assert "violation" in out


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "12132", "23112", "32121")
    assert code == 0
    assert "cup=1 bk=1 count=1 agree=yes" in out


def test_rigid(capsys):
    code, out, _ = run(capsys, "rigid", "12112", "12112", "21121")
    assert code == 0
    assert "count=1" in out and "rigid" in out
    code, out, _ = run(capsys, "rigid", "121212", "121212", "212121")
    assert code == 0
    assert "count=2" in out and "gentle loop" in out


def test_facets(capsys):
    code, out, _ = run(capsys, "facets", "2")
    assert code == 0
    assert len(out.strip().splitlines()) == 3
    code, out, _ = run(capsys, "facets", "2", "--format", "json")
    assert all(json.loads(line)["n"] == 2 for line in out.strip().splitlines())


def test_face(capsys):
    code, out, _ = run(capsys, "face", "--puzzle", str(DATA / "puzex1.json"))
    assert code == 0
    assert "boundary=(12132,23112,32121)" in out
    assert out.count("== 0") == 2


def test_face_missing_file(capsys):
    code, _, err = run(capsys, "face", "--puzzle", "/nonexistent.json")
    assert code == 2
    assert "cannot read" in err


def test_member(capsys):
    code, out, _ = run(
        capsys, "member", "--n", "2", "--lam", "1,0", "--mu", "1,0", "--nu=-1,-1"
    )
    assert code == 0 and out.strip() == "member"
    code, out, _ = run(
        capsys, "member", "--n", "2", "--lam", "1,0", "--mu", "0,0", "--nu", "0,0"
    )
    assert code == 0 and out.strip() == "not-member"


def test_selftest_small(capsys):
    code, out, _ = run(capsys, "selftest", "--max-n", "2", "--max-d", "2")
    assert code == 0
    lines = [line for line in out.splitlines() if line.startswith("[PASS]")]
    assert len(lines) == 11


def test_cache_round_trip(capsys, tmp_path):
    cache = tmp_path / "c.jsonl"
    code, out, _ = run(capsys, "count", "12", "12", "12", "--cache", str(cache))
    assert code == 0 and out.strip() == "1"
    assert cache.exists()
    code, out, _ = run(capsys, "count", "12", "12", "12", "--cache", str(cache))
    assert code == 0 and out.strip() == "1"
