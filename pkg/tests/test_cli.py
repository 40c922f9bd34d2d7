import csv
import io
import json
import subprocess
import sys

import pytest

from lieeinstein.cli import main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture(scope="module")
def full_report(tmp_path_factory):
    path = tmp_path_factory.mktemp("report") / "report.json"
    code = main(["reproduce", "--format", "json", "--out", str(path)])
    return code, path.read_text()


def test_spaces_e6(capsys):
    code, out, _ = run(["spaces", "--group", "E6", "--format", "csv"], capsys)
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    iib_rows = [r for r in rows if r["type"] == "IIb"]
    assert {(r["d1"], r["d2"], r["d3"], r["d4"]) for r in iib_rows} == {("24", "3", "40", "10")}
    assert any(r["type"] == "Ia" for r in rows)


def test_spaces_b5(capsys):
    code, out, _ = run(["spaces", "--family", "B", "--n", "5", "--format", "json"], capsys)
    spaces = json.loads(out)["spaces"]
    by_node = {s["node"]: s["type"] for s in spaces}
    assert by_node[2] == "IIa" and by_node[3] == by_node[4] == "IIb"


def test_spaces_g2_human(capsys):
    code, out, _ = run(["spaces", "--group", "G2"], capsys)
    lines = out.strip().splitlines()
    assert len(lines) == 2 and lines[1].split() == ["G2", "2", "Ia", "1", "0", "3", "8", "2"]


def test_solve_e7_ib(capsys):
    code, out, _ = run(["solve", "--group", "E7", "--type", "Ib", "--format", "json"], capsys)
    (result,) = json.loads(out)["results"]
    verdicts = [s["classification"] for s in result["solutions"]]
    assert code == 0
    assert verdicts.count("NotNaturallyReductive") == 2
    assert "BiInvariant" in verdicts and "NaturallyReductive_GxK" in verdicts
    nr = next(s for s in result["solutions"] if s["classification"] == "NaturallyReductive_GxK")
    assert nr["values"]["x2"]["exact"] == "2/7" and nr["values"]["e"]["exact"] == "3/7"


def test_solve_f4_ib_has_no_generic(capsys):
    code, out, _ = run(["solve", "--group", "F4", "--type", "Ib", "--format", "json"], capsys)
    (result,) = json.loads(out)["results"]
    assert all(s["classification"] != "NotNaturallyReductive" for s in result["solutions"])


def test_solve_c3(capsys):
    code, out, _ = run(["solve", "--family", "C", "--n", "3", "--p", "2", "--format", "csv"], capsys)
    rows = list(csv.DictReader(io.StringIO(out)))
    inside = [r for r in rows if r["classification"] == "NotNaturallyReductive" and 1 < float(r["x2"]) < 1.25]
    assert inside


def test_solve_precision_controls_digits(capsys):
    _, out, _ = run(["solve", "--group", "E7", "--type", "Ib", "--precision", "8", "--format", "json"], capsys)
    sols = json.loads(out)["results"][0]["solutions"]
    dec = next(s for s in sols if s["branch"] == "GenericBranch")["values"]["x2"]["decimal"]
    assert len(dec.replace("0.", "", 1).lstrip("0")) == 8


def test_sweep_csv(capsys):
    code, out, _ = run(["solve", "--family", "B", "--sweep", "5..6", "--p", "3", "--format", "csv"], capsys)
    rows = list(csv.DictReader(io.StringIO(out)))
    assert {r["group"] for r in rows} == {"B5", "B6"}


@pytest.mark.parametrize(
    "argv",
    [
        ["solve", "--group", "X9"],
        ["solve", "--family", "B"],
        ["spaces", "--family", "D", "--sweep", "2..5"],
        ["solve", "--group", "E6", "--precision", "3"],
        ["solve", "--group", "E6", "--type", "Ib"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    code, _, _ = run(argv, capsys)
    assert code == 2


def test_full_reproduction_passes(full_report):
    code, text = full_report
    assert code == 0
    report = json.loads(text)
    assert report["summary"]["failed"] == 0
    for rec in report["checks"]:
        assert set(rec) >= {"id", "paper_ref", "expected", "computed", "pass"}


def test_f4_record_is_documented_erratum(full_report):
    report = json.loads(full_report[1])
    (rec,) = [r for r in report["checks"] if r["id"] == "Ib/F4/nr-exact"]
    assert rec["pass"] is True
    assert "erratum" in rec["note"]
    assert rec["expected"] == ["7/23", "39/92"] and rec["computed"] == [["7/11", "15/44"]]


def test_exact_values_are_fraction_strings(full_report):
    text = full_report[1]
    assert '"2/7"' in text and '"39/92"' in text


def test_json_round_trip(full_report):
    text = full_report[1]
    assert json.dumps(json.loads(text), indent=2, sort_keys=True) + "\n" == text


def test_byte_identical_reruns(tmp_path):
    outs = []
    for k in range(2):
        path = tmp_path / f"r{k}.json"
        main(["reproduce", "--section", "Ib", "--section", "IIb-solutions", "--format", "json", "--out", str(path)])
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "lieeinstein", "spaces", "--group", "G2"], capture_output=True, text=True)
    assert proc.returncode == 0 and "Ia" in proc.stdout
