import json

import pytest

from gencluster.cli import main, parse_word
from gencluster.mutation_walks import s_word


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_seed_json_n2(capsys):
    code, out = run(capsys, "seed", "--n", "2")
    doc = json.loads(out)
    assert code == 0 and len(doc["vertices"]) == 8 and doc["n"] == 2


def test_seed_dot_n4(capsys):
    code, out = run(capsys, "seed", "--n", "4", "--format", "dot")
    assert code == 0 and out.startswith("digraph")
    assert out.count("shape=") == 32
    assert out.count("shape=note") == 3


def test_seed_dual(capsys):
    code, out = run(capsys, "seed", "--n", "4", "--dual")
    doc = json.loads(out)
    assert code == 0 and doc["dual"] and len(doc["vertices"]) == 16 and doc["n_mutable"] == 9
    assert set(doc["functions"]) == {v["label"] for v in doc["vertices"]}


def test_seed_text(capsys):
    code, out = run(capsys, "seed", "--n", "3", "--format", "text")
    assert code == 0 and "mutable" in out and "->" in out


def test_seed_out_file(tmp_path, capsys):
    path = tmp_path / "q3.json"
    code, out = run(capsys, "seed", "--n", "3", "--out", str(path))
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["n"] == 3


@pytest.mark.parametrize("word", ["g22 g22", ""])
def test_mutate_unchanged(capsys, word):
    code, out = run(capsys, "mutate", "--n", "3", "--word", word)
    assert code == 0 and out.rstrip().endswith("unchanged")


def test_mutate_json(capsys):
    code, out = run(capsys, "mutate", "--n", "3", "--word", "S", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and len(doc["steps"]) == len(s_word(3)) and not doc["unchanged"]


def test_mutate_frozen_is_usage_error(capsys):
    with pytest.raises(SystemExit) as e:
        main(["mutate", "--n", "3", "--word", "g11"])
    assert e.value.code == 2


def test_bad_n(capsys):
    with pytest.raises(SystemExit) as e:
        main(["seed", "--n", "1"])
    assert e.value.code == 2


def test_unknown_suite(capsys):
    with pytest.raises(SystemExit) as e:
        main(["verify", "--n", "3", "--suite", "nope"])
    assert e.value.code == 2


def test_parse_word_stages():
    assert parse_word(3, "S") == s_word(3)
    assert len(parse_word(3, "S_2 S_3")) > 0
    with pytest.raises(Exception):
        parse_word(3, "S_4")


def test_verify_small_suites(capsys):
    code, out = run(capsys, "verify", "--n", "3", "--suite", "rank,toric,compatibility", "--points", "1")
    assert code == 0 and "FAIL" not in out and "checks passed" in out


def test_verify_json(capsys):
    code, out = run(capsys, "verify", "--n", "2", "--suite", "rank", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["passed"] and doc["checks"]


def test_verify_threads(capsys, monkeypatch):
    monkeypatch.setenv("GENCLUSTER_THREADS", "2")
    code, out = run(capsys, "verify", "--n", "2", "--suite", "rank,toric", "--points", "1")
    assert code == 0
