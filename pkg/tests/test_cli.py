import json
import subprocess
import sys

import pytest

from ramonoid import corpus
from ramonoid.cli import main


@pytest.fixture
def ring_file(tmp_path):
    def make(doc, name="ring.json"):
        p = tmp_path / name
        p.write_text(doc if isinstance(doc, str) else json.dumps(doc))
        return str(p)

    return make


def test_analyze_square_zero(ring_file, tmp_path, capsys):
    out_json = tmp_path / "out.json"
    out_dot = tmp_path / "out.dot"
    path = ring_file(corpus.CORPUS["F2[x]/(x^2)"])
    assert main(["analyze", path, "--json", str(out_json), "--dot", str(out_dot)]) == 0
    assert "K=7" in capsys.readouterr().out
    rep = json.loads(out_json.read_text())
    assert rep["monoid"]["K"] == 7
    assert rep["monoid"]["ideal_k"] == [3, 1, 3]
    assert rep["ideals"]["count"] == 3
    assert rep["relations"]["rar=rara"] is True
    assert rep["catalog"]["isomorphic"] == ["EX1-7"]
    assert out_dot.read_text().startswith("graph ")


def test_analyze_field(ring_file, capsys):
    assert main(["analyze", ring_file(corpus.cyclic(2))]) == 0
    out = capsys.readouterr().out
    assert "K=2" in out and "FIELD" in out


def test_analyze_json_is_deterministic(ring_file, tmp_path):
    path = ring_file(corpus.CORPUS["Z/12"])
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["analyze", path, "--json", str(a)]) == 0
    assert main(["analyze", path, "--json", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_analyze_other_generator_sets(ring_file, tmp_path, capsys):
    path = ring_file(corpus.CORPUS["Z/4"])
    assert main(["analyze", path, "--maps", "rad"]) == 0
    assert "K=13" in capsys.readouterr().out
    out = tmp_path / "rd.json"
    assert main(["analyze", path, "--maps", "rd", "--json", str(out)]) == 0
    rep = json.loads(out.read_text())
    assert rep["monoid"]["K"] == 3 and "rar=rdr" not in rep["relations"]
    assert any("d" in k for k in rep["relations"])


def test_analyze_parse_error(ring_file, capsys):
    assert main(["analyze", ring_file('{"type": "cyclic", "n": ')]) == 1
    err = capsys.readouterr().err
    assert "position" in err


def test_analyze_invalid_description(ring_file, capsys):
    assert main(["analyze", ring_file({"type": "poly_quotient", "p": 6, "vars": ["x"], "caps": {"x": "x^2 = 0"}})]) == 1
    assert "not prime" in capsys.readouterr().err


def test_analyze_missing_file(capsys):
    assert main(["analyze", "/nonexistent/ring.json"]) == 1


@pytest.mark.parametrize(
    "flag, value",
    [("--max-elements", "3"), ("--max-ideals", "2"), ("--max-monoid", "3")],
)
def test_analyze_budgets(ring_file, capsys, flag, value):
    assert main(["analyze", ring_file(corpus.CORPUS["F2[x]/(x^2)"]), flag, value]) == 2
    assert "budget" in capsys.readouterr().err


def test_nonpositive_budget_rejected(ring_file):
    with pytest.raises(SystemExit):
        main(["analyze", ring_file(corpus.cyclic(2)), "--max-monoid", "0"])


@pytest.mark.parametrize("names, size", [(["field", "ZD-b"], 11), (["field", "ZD-c"], 12), (["ZD-b", "ZD-c"], 13)])
def test_odot_catalog_names(capsys, names, size):
    assert main(["odot", *names]) == 0
    assert f": {size} elements" in capsys.readouterr().out


def test_odot_from_files(tmp_path, capsys):
    from ramonoid import catalog

    p = tmp_path / "m.json"
    p.write_text(json.dumps(catalog.get("ZD-b").to_dict()))
    out = tmp_path / "prod.json"
    assert main(["odot", "field", str(p), "--json", str(out)]) == 0
    assert len(json.loads(out.read_text())["elements"]) == 11


@pytest.mark.parametrize("content", ["not json", "[1, 2]", '{"symbols": ["r"]}'])
def test_odot_malformed(tmp_path, capsys, content):
    p = tmp_path / "bad.json"
    p.write_text(content)
    assert main(["odot", str(p)]) == 1
    assert capsys.readouterr().err


def test_odot_unknown_name(capsys):
    assert main(["odot", "NOPE"]) == 1


def test_catalog_listing(capsys):
    assert main(["catalog"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 9


def test_catalog_dump(capsys):
    assert main(["catalog", "KURA-14"]) == 0
    out = capsys.readouterr().out
    assert "14 elements" in out and "graph " in out


def test_catalog_unknown(capsys):
    assert main(["catalog", "NOPE"]) == 1
    assert "unknown" in capsys.readouterr().err


def test_verify_with_empty_corpus(tmp_path, capsys):
    assert main(["verify", "--corpus", str(tmp_path)]) == 0
    out = capsys.readouterr().out
    assert out.count("[PASS]") == 8 and "[FAIL]" not in out


def test_verify_with_extra_ring(tmp_path, capsys):
    (tmp_path / "z10.json").write_text(json.dumps(corpus.cyclic(10)))
    assert main(["verify", "--corpus", str(tmp_path)]) == 0
    assert "over 19 rings" in capsys.readouterr().out


def test_verify_bad_corpus_file(tmp_path, capsys):
    (tmp_path / "bad.json").write_text("{")
    assert main(["verify", "--corpus", str(tmp_path)]) == 1


def test_verify_reports_failure(monkeypatch, capsys):
    from ramonoid import verify

    crit = verify.Criterion("broken", "always fails", lambda: (False, "nope"), 1.0)
    monkeypatch.setattr(verify, "CRITERIA", [crit])
    assert main(["verify"]) == 3
    assert "[FAIL]" in capsys.readouterr().out


def test_console_script(tmp_path):
    out = subprocess.run([sys.executable, "-m", "ramonoid.cli", "catalog"], capture_output=True, text=True)
    assert out.returncode == 0
    assert "KURA-14" in out.stdout
