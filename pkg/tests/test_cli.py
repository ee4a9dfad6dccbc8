import json
import subprocess
import sys

import pytest

from cubicdist import __version__, build_field
from cubicdist.cli import main
from cubicdist.config import ENV_VAR


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out)


def test_field_info(capsys):
    code, d = run_json(capsys, "field-info", "--p", "3", "--m", "2")
    assert code == 0
    assert d["q"] == 9 and d["alpha_order"] == 8 and d["modulus"] == [2, 2, 1]
    assert d["toolkit"] == "cubicdist" and d["version"] == __version__
    assert d["field"] == build_field(3, 2).describe()


def test_custom_modulus(capsys):
    code, d = run_json(capsys, "field-info", "--p", "3", "--m", "2", "--modulus", "2,1,1")
    assert code == 0 and d["modulus"] == [2, 1, 1]
    assert d["field"] == "3,2,2,1,1"


def test_verify_cubic_gf9(capsys):
    code, d = run_json(capsys, "verify-cubic", "--p", "3", "--m", "2")
    assert code == 0 and d["passed"]
    assert d["checks"]["multiplicity_rows"]["cases"] == 81


def test_nonhit_table_csv(capsys):
    code, out, _ = run(capsys, "nonhit-table", "--p", "3", "--m", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == f"# cubicdist {__version__}"
    assert lines[1].startswith("# field 3,2,")
    assert "6,28" in lines
    code, d = run_json(capsys, "nonhit-table", "--p", "2", "--m", "3", "--format", "json")
    assert d["matches_reference"]
    assert {"d": [3, 5], "v0": 21} in d["rows"]


def test_scan_gf8(capsys):
    code, d = run_json(capsys, "scan", "--p", "2", "--m", "3", "--confirm")
    assert code == 0
    assert [h["d"] for h in d["hits"]] == [3, 5]
    assert d["comparison"]["agreement"] is True
    assert all(h["oracle_match"] for h in d["hits"])


def test_scan_json_flag(capsys, tmp_path):
    path = tmp_path / "scan.json"
    code, out, _ = run(capsys, "scan", "--p", "7", "--json", str(path))
    assert code == 0 and out == ""
    assert [h["d"] for h in json.loads(path.read_text())["hits"]] == [3]


def test_muldist_and_intdist(capsys):
    code, d = run_json(capsys, "muldist", "--p", "7", "--poly", "monomial:3", "--b", "0")
    assert code == 0 and d["rows"] == [{"b": 0, "counts": {"0": 4, "1": 1, "3": 2}}]
    code, d = run_json(capsys, "muldist", "--p", "5", "--poly", "monomial:1", "--b", "0",
                       "--nonzero")
    assert d["rows"][0]["counts"] == {"0": 1, "1": 4}
    code, d = run_json(capsys, "muldist", "--p", "5", "--poly", "cubic:1")
    assert len(d["rows"]) == 5
    code, d = run_json(capsys, "intdist", "--p", "7", "--poly", "monomial:3")
    assert code == 0
    assert d["counts"] == {"0": 16, "1": 22, "2": 6, "3": 5}
    assert d["basic_equations"]["passed"] and d["same_as_cubic"]


def test_text_format(capsys):
    code, out, _ = run(capsys, "intdist", "--p", "5", "--poly", "monomial:2",
                       "--format", "text")
    assert code == 0 and "counts:" in out and "kind: \"intdist\"" in out


def test_csv_not_available_everywhere(capsys):
    code, _, err = run(capsys, "intdist", "--p", "5", "--poly", "monomial:2",
                       "--format", "csv")
    assert code == 2 and "csv" in err


def test_kakeya(capsys):
    code, d = run_json(capsys, "kakeya", "--p", "11")
    assert code == 0 and d["size"] == 81 and d["via_dual_count"] == 81
    code, out, _ = run(capsys, "kakeya", "--p", "17", "--table")
    row = out.splitlines()[-1].split(",")
    assert row[0] == "17" and row[1] == "193 199"
    code, d = run_json(capsys, "kakeya", "--p", "13", "--table", "--format", "json")
    assert 117 in d["sizes"]
    assert {"size": 117, "status": "new"} in d["table"]


def test_sts_build_check_iso(capsys, tmp_path):
    blocks = tmp_path / "b11.txt"
    code, _, _ = run(capsys, "sts", "build", "--p", "3", "--m", "3", "--poly", "monomial:11",
                     "--out", str(blocks))
    assert code == 0 and blocks.read_text().startswith("v=27\n")
    code, d = run_json(capsys, "sts", "check", "--blocks", str(blocks),
                       "--field", build_field(3, 3).describe())
    assert code == 0 and d["valid"]["passed"] and d["affine"] is False
    assert d["blocks"] == 117 and d["pasch_count"] == 0
    code, d = run_json(capsys, "sts", "iso", "--p", "3", "--m", "3", "--poly", "monomial:3",
                       "--blocks2", str(blocks))
    assert code == 0 and d["decision"] == "non-isomorphic"
    code, d = run_json(capsys, "sts", "iso", "--p", "3", "--m", "3", "--poly", "monomial:19",
                       "--blocks2", str(blocks))
    assert d["decision"] == "isomorphic" and sorted(d["witness"]) == list(range(27))


def test_sts_check_reports_defect(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("v=7\n0 1 3\n1 2 4\n")
    code, d = run_json(capsys, "sts", "check", "--blocks", str(path))
    assert code == 1 and d["valid"]["reason"] == "pair-uncovered"


def test_precondition_failure_exits_1(capsys):
    code, out, _ = run(capsys, "sts", "build", "--p", "3", "--m", "3", "--poly", "monomial:5")
    assert code == 1
    assert json.loads(out)["error"] == "PreconditionError"


@pytest.mark.parametrize("argv", [
    ["field-info", "--p", "4"],
    ["field-info", "--p", "2", "--m", "2", "--modulus", "1,0,1"],
    ["nonhit-table", "--p", "3", "--m", "3", "--max-q", "9"],
    ["kakeya", "--p", "5", "--figure", "x.png"],
    ["muldist", "--p", "5", "--poly", "monomial:2", "--b", "9"],
    ["intdist", "--p", "5", "--poly", "quartic:2"],
    ["sts", "iso", "--p", "3", "--m", "2", "--poly", "monomial:3"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err.startswith("cubicdist: error:")


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["scan"])
    assert exc.value.code == 2


def test_environment_budget(capsys, monkeypatch):
    monkeypatch.setenv(ENV_VAR, "8")
    code, _, err = run(capsys, "scan", "--p", "3", "--m", "2")
    assert code == 2 and "budget" in err.lower()
    code, _, _ = run(capsys, "scan", "--p", "3", "--m", "2", "--max-q", "9")
    assert code == 0


@pytest.mark.parametrize("argv", [
    ["nonhit-table", "--p", "13"],
    ["scan", "--p", "3", "--m", "3", "--confirm"],
    ["muldist", "--p", "2", "--m", "4", "--poly", "cubic:3"],
    ["intdist", "--p", "3", "--m", "3", "--poly", "monomial:11"],
])
def test_output_independent_of_jobs(capsys, argv):
    _, one, _ = run(capsys, *argv, "--jobs", "1")
    _, three, _ = run(capsys, *argv, "--jobs", "3")
    assert one == three


def test_figures_are_written(capsys, tmp_path):
    for argv, name in ((["nonhit-table", "--p", "11"], "nonhit.png"),
                       (["scan", "--p", "3", "--m", "3"], "scan.png"),
                       (["kakeya", "--p", "13", "--table"], "kakeya.svg")):
        path = tmp_path / name
        code, _, _ = run(capsys, *argv, "--figure", str(path))
        assert code == 0 and path.stat().st_size > 1000


def test_verify_all_small_cap(capsys):
    code, d = run_json(capsys, "verify-all", "--cap", "27")
    assert code == 0 and d["passed"]
    assert d["field"] is None and d["kind"] == "verify-all"
    steiner = d["sections"]["steiner"]["fields"]
    assert steiner[1]["x3_vs_x11"]["decision"] == "non-isomorphic"


def test_installed_entry_point():
    r = subprocess.run([sys.executable, "-m", "cubicdist.cli", "scan", "--p", "5"],
                       capture_output=True, text=True, check=False)
    assert r.returncode == 0
    assert [h["d"] for h in json.loads(r.stdout)["hits"]] == [3]
