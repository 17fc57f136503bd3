import json
import subprocess
import sys

from oddpart.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_zsigmondy(capsys):
    code, out = run(capsys, "zsigmondy", "--p", "2", "--n", "12")
    data = json.loads(out)
    assert code == 0 and [w["L"] for w in data["witnesses"]] == [13]
    code, out = run(capsys, "zsigmondy", "--p", "2", "--n", "6", "--threshold", "3")
    assert json.loads(out)["witnesses"] == []


def test_lemma31(capsys):
    code, out = run(capsys, "lemma31", "--family", "A", "--n", "2", "--p", "2", "--f", "2")
    data = json.loads(out)
    assert code == 10 and data["result"]["exception"] and data["result"]["valid"]
    code, out = run(capsys, "lemma31", "--family", "E8", "--n", "8", "--p", "2", "--f", "1")
    assert code == 0 and json.loads(out)["result"]["route"] == "zsigmondy"
    code, _ = run(capsys, "lemma31", "--family", "A", "--n", "1", "--p", "2", "--f", "1")
    assert code == 1


def test_construct_and_a_of(capsys, tmp_path):
    gens = tmp_path / "psl27.gens"
    code, _ = run(capsys, "construct", "--name", "PSL", "--params", "2,7",
                  "--action", "projective", "--output", str(gens))
    assert code == 0 and gens.read_text().startswith("degree: 8\n")
    code, out = run(capsys, "a-of", "--file", str(gens))
    data = json.loads(out)
    assert code == 0 and data["group_order"] == 168 and data["a_value"] == 1
    assert list(data) == sorted(data)


def test_a_of_cycle_file(capsys, tmp_path):
    f = tmp_path / "s4.gens"
    f.write_text("degree: 4\n(0 1)\nimg: 1 2 3 0\n")
    code, out = run(capsys, "a-of", "--file", str(f))
    assert code == 0 and json.loads(out)["a_value"] == 3


def test_verify_tables(capsys):
    code, out = run(capsys, "verify", "tables", "--table", "4")
    assert code == 0 and json.loads(out)["summary"]["verdicts"] == {"MATCH": 23}
    code, out = run(capsys, "verify", "tables", "--table", "1")
    assert code == 10 and json.loads(out)["schema_version"] == 1
    code, out = run(capsys, "verify", "tables", "--table", "2", "--format", "csv")
    assert code == 10 and out.splitlines()[0].startswith("table,spec,listed")
    code, out = run(capsys, "verify", "tables", "--table", "3")
    assert code == 10 and json.loads(out)["findings"]


def test_scans(capsys):
    code, out = run(capsys, "scan", "prop41", "--max-degree", "4")
    assert code == 0 and json.loads(out)["rows"][-1]["subgroups"] == 30
    code, out = run(capsys, "scan", "thm12", "--spaces", "2:2,3:2")
    assert code == 0 and len(json.loads(out)["rows"]) == 2
    code, out = run(capsys, "scan", "prop21", "--spaces", "2:2", "--no-alpha")
    assert code == 0 and "alpha_checks" not in json.loads(out)["rows"][0]
    code, out = run(capsys, "scan", "cor13", "--pairs", "2:2x1:3")
    assert code == 0 and json.loads(out)["rows"][0]["V"] == 12


def test_errors_exit_one(capsys, tmp_path):
    bad = tmp_path / "bad.gens"
    bad.write_text("(0 1)\n")
    assert main(["a-of", "--file", str(bad)]) == 1
    assert main(["scan", "prop41", "--max-degree", "9"]) == 1
    assert main(["scan", "cor13", "--pairs", "1:3x1:9"]) == 1
    assert "error" in capsys.readouterr().err


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "oddpart.cli", "zsigmondy", "--p", "2", "--n", "4"],
                         capture_output=True, text=True, check=True).stdout
    assert json.loads(out)["witnesses"][0]["L"] == 5
