"""CLI subcommands, report schema, and exit codes."""

import json

import pytest

from mincodes import corpus
from mincodes.cli import (
    EXIT_BUDGET,
    EXIT_OK,
    EXIT_PROPERTY_FAILURE,
    EXIT_USAGE,
    analyze_code,
    main,
)


@pytest.fixture
def m6_file(tmp_path):
    path = tmp_path / "m6.txt"
    path.write_text(corpus.get("m6-15").matrix_text())
    return str(path)


class TestAnalyze:
    def test_json_report(self, m6_file, capsys):
        assert main(["analyze", m6_file, "--q", "2"]) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["n"] == 15 and report["k"] == 6 and report["q"] == 2
        assert report["min_distance"] == 6
        assert report["weight_enumerator"] == {"0": 1, "6": 30, "8": 15, "10": 18}
        assert report["divisibility"] == 2
        assert report["minimal"] is True
        assert report["ashikhmin_barg"] is True
        assert set(report["bounds"]) == {
            "length_lb", "wmin_lb", "wmax_ub", "griesmer_lb", "satisfied",
        }
        assert all(report["bounds"]["satisfied"].values())

    def test_pretty_matches_json(self, m6_file, capsys):
        main(["analyze", m6_file, "--q", "2"])
        report = json.loads(capsys.readouterr().out)
        main(["analyze", m6_file, "--q", "2", "--pretty"])
        pretty = capsys.readouterr().out
        assert "[15,6,6]_2" in pretty
        assert "1+30x^6+15x^8+18x^10" in pretty
        assert str(report["divisibility"]) in pretty

    def test_oracle_both(self, m6_file, capsys):
        assert main(["analyze", m6_file, "--oracle", "both"]) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["minimal"] is True

    def test_identity_code_not_minimal(self, tmp_path, capsys):
        f = tmp_path / "id.txt"
        f.write_text("100\n010\n001\n")
        assert main(["analyze", str(f)]) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["minimal"] is False

    def test_even_24_8_report(self, tmp_path, capsys):
        f = tmp_path / "c.txt"
        f.write_text(corpus.get("m8-24-even").matrix_text())
        main(["analyze", str(f)])
        report = json.loads(capsys.readouterr().out)
        assert report["divisibility"] == 2
        assert report["weight_enumerator"] == {
            "0": 1, "8": 28, "10": 60, "12": 72, "14": 68, "16": 27,
        }

    def test_parse_error_is_usage(self, tmp_path, capsys):
        f = tmp_path / "bad.txt"
        f.write_text("102\n010\n")
        assert main(["analyze", str(f), "--q", "2"]) == EXIT_USAGE
        assert "row 1" in capsys.readouterr().err

    def test_budget_exit(self, tmp_path, capsys):
        f = tmp_path / "c.txt"
        f.write_text(corpus.get("m6-15").matrix_text())
        assert main(["analyze", str(f), "--max-codewords", "8"]) == EXIT_BUDGET
        assert "budget" in capsys.readouterr().err

    def test_missing_file(self, capsys):
        assert main(["analyze", "/nonexistent/x.txt"]) == EXIT_USAGE


class TestConstruct:
    def test_su2(self, capsys):
        assert main(["construct", "su2", "--t", "2"]) == EXIT_OK
        rows = capsys.readouterr().out.strip().split("\n")
        assert len(rows) == 4 and all(len(r) == 9 for r in rows)

    def test_simplex(self, capsys):
        assert main(["construct", "simplex", "--k", "3", "--q", "2"]) == EXIT_OK
        rows = capsys.readouterr().out.strip().split("\n")
        assert len(rows) == 3 and all(len(r) == 7 for r in rows)

    def test_circulant_spec_file(self, tmp_path, capsys):
        from mincodes.construct import reference_circulant_spec_32_13

        spec_file = tmp_path / "spec.json"
        spec_file.write_text(reference_circulant_spec_32_13().to_json())
        assert main(["construct", "circulant", "--spec", str(spec_file)]) == EXIT_OK
        rows = capsys.readouterr().out.strip().split("\n")
        assert len(rows) == 13 and all(len(r) == 32 for r in rows)


class TestSearch:
    def test_small_search_json(self, capsys):
        assert main(["search", "--k", "3", "--q", "2"]) == EXIT_OK
        result = json.loads(capsys.readouterr().out)
        assert result["found_length"] == 6
        assert result["exhausted_up_to"] == 5
        assert not result["budget_exhausted"]
        assert len(result["witness"]) == 3

    def test_budget_exit_code(self, capsys):
        code = main(["search", "--k", "5", "--q", "2", "--budget-nodes", "500"])
        assert code == EXIT_BUDGET
        result = json.loads(capsys.readouterr().out)
        assert result["budget_exhausted"] is True


class TestAcute:
    def test_search_dimension(self, capsys):
        assert main(["acute", "--d", "3"]) == EXIT_OK
        result = json.loads(capsys.readouterr().out)
        assert result["size"] == 4 and result["proven_maximal"]

    def test_check_file_acute(self, tmp_path, capsys):
        f = tmp_path / "pts.txt"
        f.write_text("000\n110\n101\n011\n")
        assert main(["acute", "--check", str(f)]) == EXIT_OK
        result = json.loads(capsys.readouterr().out)
        assert result == {"points": 4, "right_angles": 0, "acute": True}

    def test_check_file_not_acute(self, tmp_path, capsys):
        f = tmp_path / "pts.txt"
        f.write_text("00\n01\n10\n")
        assert main(["acute", "--check", str(f)]) == EXIT_PROPERTY_FAILURE
        assert json.loads(capsys.readouterr().out)["right_angles"] == 1

    def test_requires_d_or_check(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["acute"])
        assert exc.value.code == EXIT_USAGE


class TestVerifyCorpus:
    def test_filtered_fast(self, capsys):
        assert main(["verify-corpus", "--filter", "m5-*", "--tier", "fast"]) == EXIT_OK
        captured = capsys.readouterr()
        summary = json.loads(captured.out)
        assert summary["checked"] == 3 and summary["failed"] == []
        assert "m5-13-a: ok" in captured.err

    def test_q3_entries(self, capsys):
        assert main(["verify-corpus", "--filter", "m*q3-*"]) == EXIT_OK
        summary = json.loads(capsys.readouterr().out)
        assert summary["checked"] == 4 and summary["passed"] == 4


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["bogus-command"])
    assert exc.value.code == EXIT_USAGE


def test_analyze_code_oracle_choice():
    report = analyze_code(corpus.load("m5-13-a"), oracle="support")
    assert report.minimal and report.minimal_oracle == "support"
