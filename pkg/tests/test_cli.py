import json

import pytest

from crcodes.catalog import CatalogReport, CheckResult, EntryReport, build
from crcodes.cli import (
    analyze_code,
    load_code_file,
    main,
    parse_code_file,
    serialize_code,
)
from crcodes.errors import CodeFileError

HAM_TEXT = "3 4 2\n1 0 2 2\n0 1 2 1\n"

NONCR_TEXT = "2 6 3\n1 0 0 0 1 0\n0 1 0 0 0 0\n0 0 1 0 0 0\n"


@pytest.fixture
def ham_file(tmp_path):
    path = tmp_path / "ham.code"
    path.write_text(HAM_TEXT)
    return str(path)


def test_round_trip():
    code = build("ham4_3")
    again = parse_code_file(serialize_code(code))
    assert again.generator.row_lists() == code.generator.row_lists()
    assert serialize_code(again) == serialize_code(code)


def test_comments_and_blank_lines():
    text = "# hamming over GF(3)\n\n  # indented comment\n" + HAM_TEXT
    code = parse_code_file(text)
    assert (code.field.q, code.n, code.k) == (3, 4, 2)


@pytest.mark.parametrize(
    "text",
    [
        "",
        "# only a comment\n",
        "3 4\n1 0 2 2\n0 1 2 1\n",
        "3 4 2 9\n1 0 2 2\n0 1 2 1\n",
        "x 4 2\n1 0 2 2\n0 1 2 1\n",
        "6 4 2\n1 0 2 2\n0 1 2 1\n",
        "3 4 0\n",
        "3 4 5\n1 0 2 2\n",
        "3 4 2\n1 0 2 2\n",
        "3 4 2\n1 0 2\n0 1 2 1\n",
        "3 4 2\n1 0 2 z\n0 1 2 1\n",
        "3 4 2\n1 0 2 3\n0 1 2 1\n",
        "3 4 2\n1 0 2 2\n2 0 1 1\n",
    ],
)
def test_rejected_files(text):
    with pytest.raises(CodeFileError):
        parse_code_file(text)


def test_load_missing_file(tmp_path):
    with pytest.raises(CodeFileError):
        load_code_file(str(tmp_path / "nope.code"))


def test_analyze_text_output(ham_file, capsys):
    assert main(["--workers", "1", "analyze", ham_file]) == 0
    out = capsys.readouterr().out
    assert "parameters: q=3 n=4 k=2 d=3" in out
    assert "rho: 1" in out
    assert "completely_regular: True" in out
    assert "intersection_array: {8;1}" in out
    assert "timing:" in out


def test_analyze_json_output(ham_file, capsys):
    assert main(["--workers", "1", "analyze", ham_file, "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["parameters"] == {"q": 3, "n": 4, "k": 2, "d": 3}
    assert report["intersection_array"] == "{8;1}"
    assert report["upws"]["betas"] == ["1", "1"]
    assert report["designs"]["all_verified"] is True
    assert "timing" not in report


def test_json_identical_across_workers(ham_file, capsys):
    assert main(["--workers", "1", "analyze", ham_file, "--json"]) == 0
    first = capsys.readouterr().out
    assert main(["--workers", "3", "analyze", ham_file, "--json"]) == 0
    second = capsys.readouterr().out
    assert first == second


def test_analyze_non_cr_output(tmp_path, capsys):
    path = tmp_path / "noncr.code"
    path.write_text(NONCR_TEXT)
    assert main(["--workers", "1", "analyze", str(path)]) == 0
    out = capsys.readouterr().out
    assert "completely_regular: False" in out
    assert "witness_coset:" in out
    assert "upws: none (rho != s)" in out
    assert "designs: skipped (code is not completely regular)" in out


def test_analyze_report_keys(ham_file):
    report, timings = analyze_code(load_code_file(ham_file))
    assert list(report) == [
        "parameters",
        "self_dual",
        "antipodal",
        "weight_distribution",
        "dual_weights",
        "s",
        "rho",
        "is_CR",
        "intersection_array",
        "upws",
        "designs",
        "structural_checks",
    ]
    assert set(timings) == {"weights", "cosets", "packing", "designs"}


def test_scan_text(capsys):
    assert main(["scan", "rho3_d6"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out == ["q=3 k=6 value=4", "q=7 k=4 value=9"]


def test_scan_json(capsys):
    assert main(["scan", "rho3_d4_binary", "--json"]) == 0
    got = json.loads(capsys.readouterr().out)
    assert got["hits"] == [{"q": 2, "k": 5, "extra": 2, "value": "10"}]
    assert got["zero_denominators"] == [[2, 4, 3]]


def test_pless_output(capsys):
    assert main(["pless", "7", "4", "5", "6", "7"]) == 0
    assert capsys.readouterr().out.strip() == "168 -280 512"


def test_pless_bad_weights(capsys):
    assert main(["pless", "7", "4", "6", "5", "7"]) == 1
    assert "weights must satisfy" in capsys.readouterr().err


def test_catalog_list(capsys):
    assert main(["catalog", "list"]) == 0
    out = capsys.readouterr().out
    assert "sd2_5            [2,1,2]_5 rho=1" in out
    assert out.count("\n") == 12


def test_catalog_build_stdout(capsys):
    assert main(["catalog", "build", "ham4_3"]) == 0
    assert capsys.readouterr().out == HAM_TEXT


def test_catalog_build_out_round_trip(tmp_path):
    path = tmp_path / "mds.code"
    assert main(["catalog", "build", "mds4_4", "--out", str(path)]) == 0
    code = load_code_file(str(path))
    assert code.generator.row_lists() == build("mds4_4").generator.row_lists()


def test_catalog_build_unknown(capsys):
    assert main(["catalog", "build", "nope"]) == 1


def test_catalog_verify_single(capsys):
    assert main(["catalog", "verify", "ham4_3"]) == 0
    assert capsys.readouterr().out == "ham4_3: pass\n"


def test_catalog_verify_failure_exit(monkeypatch, capsys):
    stub = CatalogReport(
        (EntryReport("stub", (CheckResult("weights", False, "(2,)", "(3,)"),)),)
    )
    monkeypatch.setattr("crcodes.cli.verify_catalog", lambda names: stub)
    assert main(["catalog", "verify"]) == 4
    out = capsys.readouterr().out
    assert "stub: FAIL" in out
    assert "weights: expected (2,), got (3,)" in out


def test_exists_none(capsys):
    assert main(["exists", "6", "3", "4", "--q", "4", "--self-dual"]) == 0
    assert capsys.readouterr().out == "NONE\n"


def test_exists_witness_is_loadable(tmp_path, capsys):
    assert main(["exists", "4", "2", "3", "--q", "4", "--self-dual"]) == 0
    text = capsys.readouterr().out
    code = parse_code_file(text)
    assert code.min_distance() == 3
    assert code.is_self_dual()


def test_exists_budget_exit(capsys):
    assert main(["exists", "24", "12", "8", "--q", "2", "--self-dual"]) == 3
    assert "search space" in capsys.readouterr().err


def test_bad_file_exit(tmp_path, capsys):
    path = tmp_path / "bad.code"
    path.write_text("3 4\n")
    assert main(["analyze", str(path)]) == 2
    assert "error:" in capsys.readouterr().err


def test_unknown_command_exit():
    assert main(["frobnicate"]) == 1


def test_help_exit(capsys):
    assert main(["--help"]) == 0
    assert "analyze" in capsys.readouterr().out
