import json
import subprocess
import sys

import pytest

from mcgfac.cli import main
from mcgfac.tables import default_corpus_text, sample


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


@pytest.fixture
def corpus(tmp_path):
    def write(text):
        p = tmp_path / "corpus.txt"
        p.write_text(text)
        return str(p)
    return write


def test_expand_text(capsys):
    code, out, _ = run(capsys, "expand", "--d", "1")
    assert code == 0 and len(out.splitlines()) == 240


def test_expand_json(capsys):
    code, doc = run_json(capsys, "expand", "--d", "3")
    assert code == 0
    assert doc["schema"] == 1 and doc["status"] == "ok" and len(doc["records"]) == 27
    assert list(doc)[:5] == ["schema", "command", "status", "counters", "findings"]


def test_expand_bad_d(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["expand", "--d", "7"])
    assert exc.value.code == 2


def test_json_is_deterministic(capsys):
    outs = [run(capsys, "root", "--d", "1", "--word", str(sample(1, "1*").word), "--format", "json")[1]
            for _ in range(2)]
    assert outs[0] == outs[1]


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "--d", "1", "--checks", "all")
    assert code == 0 and "240 verified" in out


def test_verify_sl2(capsys):
    code, doc = run_json(capsys, "verify", "--d", "2", "--checks", "sl2")
    assert code == 0 and doc["counters"]["sl2_identity"] == 56


def test_verify_unknown_check(capsys):
    code, _, err = run(capsys, "verify", "--d", "1", "--checks", "sl2,bogus")
    assert code == 2 and "bogus" in err


def test_verify_corrupted_corpus(capsys, corpus):
    lines = default_corpus_text().splitlines()
    lines[5] = "1 1 a1 a2 a2 b1 a1 a2 a2 b1 a1 a2 a2 xx"
    code, out, _ = run(capsys, "verify", "--d", "1", "--corpus", corpus("\n".join(lines)))
    assert code == 1 and "1 1 a1 a2 a2 b1 a1 a2 a2 b1 a1 a2 a2 xx" in out and "line 6" in out


def test_verify_wrong_type_tag(capsys, corpus):
    lines = default_corpus_text().splitlines()
    lines[1] = lines[1].replace("1 1 ", "1 2 ", 1)
    code, out, _ = run(capsys, "verify", "--d", "1", "--checks", "counts", "--corpus", corpus("\n".join(lines)))
    assert code == 1 and "line 2" in out


def test_bijection_default(capsys):
    code, out, _ = run(capsys, "bijection")
    assert code == 0 and "240/240 roots covered; negation-closed" in out


def test_bijection_deleted_line(capsys, corpus):
    lines = default_corpus_text().splitlines()
    del lines[1]
    code, out, _ = run(capsys, "bijection", "--corpus", corpus("\n".join(lines)))
    assert code == 1 and "239/240" in out


def test_bijection_duplicated_line(capsys, corpus):
    lines = default_corpus_text().splitlines()
    lines.insert(2, lines[1])
    code, out, _ = run(capsys, "bijection", "--corpus", corpus("\n".join(lines)))
    assert code == 1 and "collision" in out


def test_corpus_env(capsys, corpus, monkeypatch):
    lines = default_corpus_text().splitlines()
    del lines[1]
    monkeypatch.setenv("MCGFAC_CORPUS", corpus("\n".join(lines)))
    code, out, _ = run(capsys, "bijection")
    assert code == 1 and "239/240" in out


def test_root_d1(capsys):
    code, doc = run_json(capsys, "root", "--d", "1", "--word", str(sample(1, "1*").word))
    assert code == 0
    assert doc["root"] == {"kind": "E8", "x": [0, 1, 2, 1, 1, 1, 0], "y": 1, "root": True}
    assert doc["delta_a"] == [1, 0, -1, 1, 0, -1, 1, 0, -1]


def test_root_d2(capsys):
    code, doc = run_json(capsys, "root", "--d", "2", "--word", str(sample(2, "1").word))
    assert code == 0 and doc["weight"] == {"kind": "E7", "x": [0, 0, 0, 1, 0, 1], "y": 1, "den": 2}


def test_root_errors(capsys):
    code, _, _ = run(capsys, "root", "--d", "1", "--word", "a1 " * 11 + "b1")
    assert code == 1
    code, _, err = run(capsys, "root", "--d", "1", "--word", "garbage")
    assert code == 2 and "garbage" in err


def test_delta(capsys):
    code, out, _ = run(capsys, "delta", "--d", "1", "--word", str(sample(1, "4").word))
    assert code == 0 and out.splitlines()[0] == "00-1000001 -1-12"


def test_hurwitz(capsys):
    code, doc = run_json(capsys, "hurwitz", "--d", "1", "--word", "a1 b1", "--index", "1", "--dir", "L")
    assert code == 0 and doc["factors"] == ["b1", "b1' a1 b1"] and doc["product"] == "a1 b1"
    code, _, _ = run(capsys, "hurwitz", "--d", "1", "--word", "a1 b1", "--index", "5", "--dir", "L")
    assert code == 2


def test_derive(capsys):
    code, doc = run_json(capsys, "derive", "d1_1_to_ab6")
    assert code == 0 and doc["final"] == "a2 b2 a1 b1 a2 b2 a1 b1 a2 b2 a1 b1"
    code, out, _ = run(capsys, "derive", "--list")
    assert code == 0 and "d3_8_to_9" in out.split()
    code, _, _ = run(capsys, "derive", "no_such_script")
    assert code == 2
    code, out, _ = run(capsys, "derive", "d1_1_to_2", "--start", str(sample(1, "2").word))
    assert code == 1 and "step" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "mcgfac", "expand", "--d", "9"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
