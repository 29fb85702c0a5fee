"""Exit codes, output formats and determinism of the command line tool."""

import json
import os

import pytest

from ffverify.cli import main


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_basic_csv(capsys):
    code, out, _ = run(capsys, ["count", "--p", "3", "--variety", "Ytilde",
                                "--n", "2", "--level", "2", "--format", "csv"])
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "variety,n,level,count"
    assert lines[1].startswith("Ytilde,2,2,")


def test_count_invalid_variety_exits_2(capsys):
    code, _, _ = run(capsys, ["count", "--p", "3", "--variety", "bogus"])
    assert code == 2


def test_missing_required_flag_exits_2(capsys):
    code, _, _ = run(capsys, ["count"])
    assert code == 2


def test_count_torsor(capsys):
    code, out, _ = run(capsys, ["count", "--p", "3", "--torsor", "--n", "2",
                                "--level", "2"])
    assert code == 0
    blob = json.loads(out)
    assert blob["ratio_equals_q_plus_1"] is True
    assert blob["ratio"] == 4


def test_count_budget_exceeded_exits_2(capsys):
    code, _, err = run(capsys, ["count", "--p", "3", "--variety", "Ytilde",
                                "--n", "3", "--level", "4", "--budget", "10"])
    assert code == 2
    assert "error" in err


def test_verify_pass(capsys):
    code, out, _ = run(capsys, ["verify", "--p", "2", "--n", "2", "--ell", "3"])
    assert code == 0
    blob = json.loads(out)
    assert blob["all_passed"] is True


def test_verify_ell_two_exits_2(capsys):
    code, _, err = run(capsys, ["verify", "--p", "3", "--n", "2", "--ell", "2"])
    assert code == 2
    assert "error" in err


def test_verify_ell_equal_p_exits_2(capsys):
    code, _, _ = run(capsys, ["verify", "--p", "3", "--n", "2", "--ell", "3"])
    assert code == 2


def test_howe_ordinary_json(capsys):
    code, out, _ = run(capsys, ["howe", "--p", "3", "--n", "2"])
    assert code == 0
    blob = json.loads(out)
    assert blob["params"]["mode"] == "ordinary"
    assert blob["entries"]


def test_howe_mod_ell_markdown(capsys):
    code, out, _ = run(capsys, ["howe", "--p", "2", "--n", "2", "--ell", "3",
                                "--format", "md"])
    assert code == 0
    assert out.startswith("# Theta table:")
    assert "nontrivial-extension" in out


def test_howe_bad_n_exits_2(capsys):
    code, _, _ = run(capsys, ["howe", "--p", "3", "--n", "1"])
    assert code == 2


def test_gauss(capsys):
    code, out, _ = run(capsys, ["gauss", "--p", "5"])
    assert code == 0
    blob = json.loads(out)
    assert blob["identity_holds"] is True
    assert len(blob["sums"]) == 4


def test_gauss_characteristic_two_exits_2(capsys):
    code, _, _ = run(capsys, ["gauss", "--p", "2"])
    assert code == 2


def test_fixed_points_csv(capsys):
    code, out, _ = run(capsys, ["fixed-points", "--p", "3", "--format", "csv"])
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "with_unipotent,eta,zeta,total,closed_form,match"
    # both unipotent modes, all (eta, zeta) pairs
    assert len(lines) == 1 + 2 * 3 * 4


def test_workers_must_be_positive(capsys):
    code, _, _ = run(capsys, ["count", "--p", "3", "--workers", "0"])
    assert code == 2


def test_output_is_deterministic(capsys):
    argv = ["howe", "--p", "2", "--n", "2", "--ell", "3"]
    _, first, _ = run(capsys, argv)
    _, second, _ = run(capsys, argv)
    assert first == second
    argv = ["fixed-points", "--p", "3", "--format", "json"]
    _, first, _ = run(capsys, argv)
    _, second, _ = run(capsys, argv)
    assert first == second


def test_output_file_and_outdir_env(tmp_path, capsys, monkeypatch):
    target = tmp_path / "table.json"
    code, out, _ = run(capsys, ["howe", "--p", "3", "--n", "2",
                                "--output", str(target)])
    assert code == 0 and out == ""
    blob = json.loads(target.read_text())
    assert blob["params"]["q"] == 3
    # relative paths resolve against FFVERIFY_OUTDIR
    monkeypatch.setenv("FFVERIFY_OUTDIR", str(tmp_path))
    code, out, _ = run(capsys, ["gauss", "--p", "3", "--output", "g.json"])
    assert code == 0 and out == ""
    blob = json.loads((tmp_path / "g.json").read_text())
    assert blob["identity_holds"] is True


def test_console_script_is_installed():
    import shutil
    exe = shutil.which("ffverify")
    if exe is None:
        pytest.skip("console script not on PATH")
    import subprocess
    proc = subprocess.run([exe, "count", "--p", "2", "--variety", "Ytilde",
                           "--n", "1", "--format", "csv"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "Ytilde,1,2," in proc.stdout
