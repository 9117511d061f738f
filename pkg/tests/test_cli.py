import json

import pytest

from genuine_smalls.cli import main


def run_json(capsys, *argv):
    assert main(list(argv)) == 0
    return json.loads(capsys.readouterr().out)


def test_survivors_text(capsys):
    assert main(["survivors", "--type", "D", "--n", "4"]) == 0
    assert capsys.readouterr().out.strip() == "D n=4: 4 surviving schemes"


def test_survivors_json(capsys):
    doc = run_json(capsys, "survivors", "--type", "a", "--n", "4", "--format", "json")
    assert doc == {"type": "A", "n": 4, "survivors": 2}


def test_survivors_trace(capsys):
    assert main(["survivors", "--type", "D", "--n", "4", "--trace"]) == 0
    lines = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert lines[-1] == {"type": "D", "n": 4, "survivors": 4}
    assert {"reason", "members", "class"} <= set(lines[0])


def test_count_star_trace_lines(capsys):
    assert main(["count-star", "--type", "D", "--n", "6", "--trace"]) == 0
    lines = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    *classes, summary = lines
    assert summary == {"type": "D", "n": 6, "survivors": 4}
    assert {c["reason"] for c in classes} <= {"R", "C", "survivor"}
    assert sum(c["reason"] == "survivor" for c in classes) == 4


@pytest.mark.parametrize(
    "alias, name, argv",
    [
        ("table1", "integral-data", ["--type", "G", "--format", "json"]),
        ("table2", "real-orbits", ["--type", "D", "--max-n", "4", "--format", "json"]),
        ("table3", "diagram-sets", ["--type", "A3", "--format", "json"]),
        ("count-star", "survivors", ["--type", "A", "--n", "4", "--format", "json"]),
    ],
)
def test_command_aliases(alias, name, argv, capsys):
    assert run_json(capsys, alias, *argv) == run_json(capsys, name, *argv)


def test_dump_diagram_sets(capsys):
    doc = run_json(capsys, "dump", "rd", "--type", "D4")
    assert len(doc) == 4
    assert doc[0]["nodes"] == []


def test_dump_chartable(capsys):
    doc = run_json(capsys, "dump", "chartable", "--type", "G", "--rank", "2")
    assert doc["order"] == 12
    assert len(doc["characters"]) == 6


def test_dump_pairs(capsys):
    doc = run_json(capsys, "dump", "pairs", "--group", "spin(4,4)", "--bound", "4")
    assert len(doc["cells"]) == 16
    assert doc["counts"] == {"representations": 16, "pairs": 16, "bijective": True}


def test_ktypes_of_spin44(capsys):
    doc = run_json(capsys, "ktypes", "--group", "spin44", "--bound", "2", "--format", "json")
    assert len(doc) == 16
    assert doc["Sh1"][0] == [[["1", "2"], ["1", "2"]], [["0", "1"], ["0", "1"]]]


def test_ktypes_text(capsys):
    assert main(["ktypes", "--type", "A", "--n", "4", "--bound", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert [line.split(":")[0] for line in lines] == ["Sh1", "Sh2", "pi1", "pi2"]


def test_output_is_deterministic(capsys):
    first = run_json(capsys, "dump", "rootsys", "--type", "D4")
    second = run_json(capsys, "dump", "rootsys", "--type", "D", "--rank", "4")
    assert first == second
    assert first["P/(2P+R)"] == [2, 2]


def test_diagram_sets_text(capsys):
    assert main(["diagram-sets", "--type", "A3"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("A3: 2 sets")
    assert "●─○─●" in out


def test_integral_data(capsys):
    rows = run_json(capsys, "integral-data", "--type", "G", "--format", "json")
    assert len(rows) == 1
    assert rows[0]["type"] == "G2"
    assert rows[0]["integral"] == "A1xA1"
    assert rows[0]["j_source"] == "computed"


def test_real_orbits(capsys):
    rows = run_json(capsys, "real-orbits", "--type", "D", "--max-n", "4", "--format", "json")
    split = [r for r in rows if r["real_form"] == "so(4,4)"]
    assert split and split[0]["count"] == 4


def test_real_orbits_of_su(capsys):
    rows = run_json(capsys, "real-orbits", "--type", "A", "--max-n", "4", "--format", "json")
    su22 = next(r for r in rows if r["real_form"] == "su(2,2)")
    assert (su22["count"], su22["same_sign"], su22["printed"]) == (3, 1, 1)


def test_verify_recorded_scope(capsys):
    doc = run_json(capsys, "verify", "--scope", "rootsys.lattice-remark", "--format", "json")
    assert doc["summary"]["recorded-discrepancy"] == 1
    assert doc["results"][0]["status"] == "recorded-discrepancy"


def test_unknown_verify_scope(capsys):
    assert main(["verify", "--scope", "nothing"]) == 2
    assert "known scopes" in capsys.readouterr().err


def test_unknown_entity():
    with pytest.raises(SystemExit) as info:
        main(["dump", "nothing"])
    assert info.value.code == 2


@pytest.mark.parametrize("group", ["spin54", "so44", "sl(4,4)"])
def test_bad_group(group, capsys):
    assert main(["ktypes", "--group", group]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_bad_environment(monkeypatch, capsys):
    monkeypatch.setenv("GENUINE_SMALLS_KTYPE_BOUND", "lots")
    assert main(["survivors", "--type", "D", "--n", "4"]) == 2
    assert "bad environment setting" in capsys.readouterr().err
