"""CLI surface: subcommands, output formats, exit codes, env budget."""

import json

import pytest

from simplicode import cli
from simplicode.analyze import DistributionMismatch, NotStronglyRegular


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", "--spec", "specs/example1.json", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert (doc["n"], doc["k"], doc["d"]) == (120, 7, 60)
    assert doc["css"] == [120, 106, 3]
    assert doc["flags"]["minimal_sufficient"] is True


def test_analyze_csv(capsys):
    code, out, _ = run(capsys, "analyze", "--spec", "specs/example2.json", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["weight,count", "0,1", "20,21", "21,32", "24,7", "28,3"]


def test_analyze_example3_includes_css(capsys):
    code, out, _ = run(capsys, "analyze", "--spec", "specs/example3.json")
    assert code == 0
    assert "[[448,430,3]]" in out


def test_analyze_bad_spec_file(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{ not json")
    code, _, err = run(capsys, "analyze", "--spec", str(bad))
    assert code == 1 and err


def test_analyze_missing_file(capsys):
    code, _, err = run(capsys, "analyze", "--spec", "specs/no_such.json")
    assert code == 1 and err


def test_analyze_bad_engine_list(capsys):
    code, _, err = run(capsys, "analyze", "--spec", "specs/example1.json",
                       "--engines", "magic")
    assert code == 1 and "engine" in err


def test_analyze_stdin(capsys, monkeypatch, tmp_path):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO(open("specs/example1.json").read()))
    code, out, _ = run(capsys, "analyze", "--spec", "-", "--format", "csv")
    assert code == 0 and "60,112" in out


def test_env_budget_disables_bruteforce(capsys, monkeypatch):
    monkeypatch.setenv("SIMPLICODE_BUDGET", "10")
    code, out, _ = run(capsys, "analyze", "--spec", "specs/example1.json", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["engines"]["bruteforce"] == "skipped: budget"
    assert doc["engines"]["charsum"] == "ok"


def test_verify_family1_small(capsys):
    code, out, _ = run(capsys, "verify", "--family", "1", "--m", "2", "--quiet")
    assert code == 0
    assert "256 pass, 0 fail" in out


def test_verify_family3_reports_skips(capsys):
    code, out, _ = run(capsys, "verify", "--family", "3", "--m", "2", "--quiet")
    assert code == 0
    assert "skipped (hypotheses)" in out


def test_verify_m_out_of_range(capsys):
    code, _, err = run(capsys, "verify", "--family", "5", "--m", "4")
    assert code == 1 and "m up to" in err


def test_srg_published_example(capsys):
    code, out, _ = run(capsys, "srg", "--spec", "specs/example1.json", "--build-graph")
    assert code == 0
    assert "(128, 120, 112, 120)" in out and "verified=True" in out
    assert "(128, 7, 6, 0)" in out


def test_srg_rejects_four_weight_code(capsys):
    code, _, err = run(capsys, "srg", "--spec", "specs/example2.json")
    assert code == 3 and "two-weight" in err


def test_build_text_and_hex(capsys, tmp_path):
    code, out, _ = run(capsys, "build", "--spec", "specs/example2.json")
    rows = out.splitlines()
    assert code == 0 and len(rows) == 12 and len(rows[0]) == 42
    code, out, _ = run(capsys, "build", "--spec", "specs/example2.json",
                       "--format", "hex")
    assert code == 0 and len(out.split()) == 42
    outfile = tmp_path / "gen.txt"
    code, _, err = run(capsys, "build", "--spec", "specs/example2.json",
                       "--out", str(outfile))
    assert code == 0 and outfile.read_text().count("\n") == 12


def test_reproduce_golden_suite(capsys):
    code, out, _ = run(capsys, "reproduce")
    assert code == 0
    assert "12/12 golden checks passed" in out


def test_reproduce_bless_roundtrip(capsys, monkeypatch, tmp_path):
    target = tmp_path / "golden.json"
    monkeypatch.setattr(cli, "_golden_path", lambda: target)
    code, out, _ = run(capsys, "reproduce", "--bless")
    assert code == 0 and target.exists()
    code, out, _ = run(capsys, "reproduce")
    assert code == 0 and "12/12" in out


def test_reproduce_detects_drift(capsys, monkeypatch, tmp_path):
    golden = cli.load_golden()
    golden["examples"]["example1"]["d"] = 61
    target = tmp_path / "golden.json"
    target.write_text(json.dumps(golden))
    monkeypatch.setattr(cli, "_golden_path", lambda: target)
    code, out, err = run(capsys, "reproduce")
    assert code == 2
    assert "first diff" in err


def test_exit_code_engine_mismatch(capsys, monkeypatch):
    def boom(*a, **k):
        raise DistributionMismatch("forced")
    monkeypatch.setattr(cli, "full_report", boom)
    code, _, err = run(capsys, "analyze", "--spec", "specs/example1.json")
    assert code == 2 and "mismatch" in err


def test_exit_code_structural(capsys, monkeypatch):
    def boom(*a, **k):
        raise NotStronglyRegular("forced")
    monkeypatch.setattr(cli, "full_report", boom)
    code, _, err = run(capsys, "srg", "--spec", "specs/example1.json")
    assert code == 3 and "structural" in err


def test_json_output_is_stable(capsys):
    _, out1, _ = run(capsys, "analyze", "--spec", "specs/example1.json",
                     "--format", "json", "--workers", "1")
    _, out2, _ = run(capsys, "analyze", "--spec", "specs/example1.json",
                     "--format", "json", "--workers", "2")
    assert out1 == out2
