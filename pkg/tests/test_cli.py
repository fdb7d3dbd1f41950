import json

import pytest

from free_knot_check.cli import EXIT_CODES, main


def test_word(capsys):
    assert main(["word", "a^{p+1}b^{q+1}A^{p+1}B^{q+1}", "--p", "1", "--q", "1"]) == 0
    out = capsys.readouterr().out
    assert "aabbAABB" in out
    assert "length 8" in out
    assert "(0, 0)" in out


def test_empty_word(capsys):
    assert main(["word", ""]) == 0
    assert "length 0" in capsys.readouterr().out


def test_word_parse_error(capsys):
    assert main(["word", "a^^2"]) == EXIT_CODES["error"]
    assert "position 3" in capsys.readouterr().err


def test_word_from_template(capsys):
    assert main(["word", "--template", "fig3", "--p", "1", "--q", "1", "--n", "1"]) == 0
    assert "length 24" in capsys.readouterr().out


@pytest.mark.parametrize(
    "argv, code, text",
    [
        (["bns", "--template", "fig3"], 0, "EMPTY"),
        (["bns", "--word", "abAB"], 10, "NONEMPTY"),
        (["bns", "--word", "(abAB)^2"], 0, "EMPTY"),
        (["bns", "--word", "ab"], 2, ""),
        (["bns", "--word", "abA"], 2, ""),
    ],
)
def test_bns(capsys, argv, code, text):
    assert main(argv) == code
    assert text in capsys.readouterr().out


def test_bns_writes_svg_and_report(tmp_path, capsys):
    svg, report = tmp_path / "path.svg", tmp_path / "report.json"
    assert main(["bns", "--word", "abAB", "--svg", str(svg), "--json", str(report)]) == 10
    assert svg.read_text().startswith("<svg")
    data = json.loads(report.read_text())
    assert data["bns"]["empty"] is False
    assert data["bns"]["simple_vertex_count"] == 4
    assert data["word"] == "abAB"
    assert data["binding"] == {"p": 2, "q": 2, "n": 2}
    assert data["uniqueness"] is None


def test_unique(capsys):
    assert main(["unique", "--template", "fig3"]) == 0
    out = capsys.readouterr().out
    assert "2 factorization classes" in out
    assert "PASS" in out


def test_unique_odd_length(capsys):
    assert main(["unique", "--word", "aba"]) == EXIT_CODES["invalid_uniqueness_input"]


def test_unique_failure(capsys):
    assert main(["unique", "--word", "a^{p+1}b^{q+1}A^{p+1}B^{q+1}"]) == EXIT_CODES["uniqueness_fail"]
    out = capsys.readouterr().out
    assert "Counterexample" in out
    assert "FAIL" in out


@pytest.mark.parametrize(
    "argv, code",
    [
        (["lemma5", "--template", "fig3", "--p", "2", "--q", "2", "--v-max", "3"], 0),
        (["lemma5", "--template", "fig6c", "--p", "3", "--q", "2", "--v-max", "2"], 0),
        (["lemma5", "--template", "fig3", "--p", "1", "--q", "2"], 4),
        (["lemma5", "--gamma", "aaa"], 12),
    ],
)
def test_lemma5(capsys, argv, code):
    assert main(argv) == code


@pytest.mark.parametrize(
    "argv, code",
    [
        (["gamma-check", "--gamma", "baBA"], 0),
        (["gamma-check", "--gamma", "(baBA)"], 0),
        (["gamma-check", "--gamma", "b a B A"], 0),
        (["gamma-check", "--gamma", "(ba)^1 BA"], 0),
        (["gamma-check", "--template", "fig6a"], 0),
        (["gamma-check", "--gamma", "aabAAB"], EXIT_CODES["gamma_fail"]),
        (["gamma-check", "--gamma", "aabABA"], EXIT_CODES["gamma_fail"]),
    ],
)
def test_gamma_check(capsys, argv, code):
    assert main(argv) == code
    assert "overall" in capsys.readouterr().out


@pytest.mark.parametrize(
    "argv",
    [
        ["lemma5", "--gamma", "(ba)^1BA", "--v-max", "2"],
        ["lemma5", "--gamma", " b a B A ", "--v-max", "2"],
        ["lemma5", "--gamma", "(baBA)^n", "--n", "1", "--v-max", "2"],
    ],
)
def test_lemma5_gamma_expression(capsys, argv):
    assert main(argv) == 0
    assert "gamma baBA" in capsys.readouterr().out


@pytest.mark.parametrize("command", ["lemma5", "gamma-check"])
def test_gamma_syntax_error_exits_one(capsys, command):
    assert main([command, "--gamma", "(baBA"]) == EXIT_CODES["error"]
    err = capsys.readouterr().err
    assert "position 6" in err
    assert "domain" not in err


def test_stallings(capsys):
    assert main(["stallings", "b", "a^{p+1}", "b^{q+1}A"]) == 0
    out = capsys.readouterr().out
    assert "rank 2" in out
    assert "member: False" in out
    assert "conjugate into: False" in out


def test_sweep(tmp_path, capsys):
    catalog = tmp_path / "catalog.jsonl"
    argv = ["sweep", "--templates", "fig3", "--p-range", "2", "--q-range", "2", "--n-range", "1-2"]
    assert main(argv + ["--catalog", str(catalog)]) == 0
    assert len(catalog.read_text().splitlines()) == 2
    out = capsys.readouterr().out
    assert "Checking fig3 at p=2, q=2, n=1." in out
    assert "Checking fig3 at p=2, q=2, n=2." in out


def test_sweep_unwritable_catalog(tmp_path, capsys):
    catalog = tmp_path / "missing" / "catalog.jsonl"
    assert main(["sweep", "--catalog", str(catalog)]) == EXIT_CODES["error"]
    assert "Checking" not in capsys.readouterr().out
    assert not catalog.exists()


def test_sweep_without_templates(tmp_path):
    assert main(["sweep", "--templates", "", "--catalog", str(tmp_path / "c.jsonl")]) == EXIT_CODES["error"]


def test_usage_error_exits_one():
    with pytest.raises(SystemExit) as e:
        main(["bns", "--bogus"])
    assert e.value.code == 1
