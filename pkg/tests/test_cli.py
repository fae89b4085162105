import csv
import io
import json

import pytest

from argyle.cli import cli_main, flatten


def run(capsys, *argv):
    code = cli_main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_betti_text(capsys):
    code, out, _ = run(capsys, "betti", "3", "-1", "2", "--format", "text")
    assert code == 0
    assert out.splitlines()[0] == "betti: 1+x^2+3x^4+4x^6+3x^8"


def test_exit_codes(capsys):
    code, _, err = run(capsys, "betti", "4", "-1", "2")
    assert code == 2 and "(2,2)" in err
    assert run(capsys, "betti", "4", "2", "2")[0] == 2
    assert run(capsys, "betti", "3")[0] == 1
    assert run(capsys, "frobnicate")[0] == 1
    assert run(capsys, "sigma", "--ranks", "1,2", "--degrees", "0,x", "--twist", "1")[0] == 1
    code, _, err = run(capsys, "betti", "3", "-1", "7", "--strict")
    assert code == 3 and "UNVERIFIED" in err
    assert run(capsys, "betti", "3", "-1", "6", "--strict")[0] == 0
    assert run(capsys, "oracle", "--degrees", "6,6", "--q", "3", "--oracle-budget", "100")[0] == 2


@pytest.mark.parametrize("argv", [
    ["betti", "3", "-1", "6"],
    ["components", "3", "-1", "2"],
    ["sigma", "--ranks", "1,2,1", "--degrees", "0,-1,-2", "--twist", "5"],
    ["stratum", "--ranks", "1,2,1", "--degrees", "2,-1,-2", "--twist", "5", "--splitting", "0,-1"],
    ["dimension", "--ranks", "1,2,1", "--degrees", "2,-1,-2", "--twist", "5"],
    ["oracle", "--degrees", "1,2", "--q", "2,3"],
])
def test_formats_agree_and_json_round_trips(capsys, argv):
    code, js, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    data = json.loads(js)
    assert json.dumps(data, indent=2) + "\n" == js
    _, cs, _ = run(capsys, *argv, "--format", "csv")
    rows = list(csv.reader(io.StringIO(cs)))
    assert rows[0] == ["key", "value"]
    expected = list(flatten(data["results"]))
    assert [tuple(r) for r in rows[1:]] == expected
    _, tx, _ = run(capsys, *argv, "--format", "text")
    assert [line.strip() for line in tx.splitlines()[1:]] == [f"{k} = {v}".strip() for k, v in expected]


def test_json_schema(capsys):
    _, js, _ = run(capsys, "sigma", "--ranks", "1,2,1", "--degrees", "0,-1,-2", "--twist", "5", "--format", "json")
    res = json.loads(js)["results"]
    assert res["sigma"] == [{"num": "1", "den": "4"}, {"num": "1", "den": "4"}]
    assert res["determinant"] == res["determinant_closed_form"] == {"num": "2", "den": "1"}
    _, js, _ = run(capsys, "betti", "3", "-1", "2", "--format", "json")
    assert json.loads(js)["results"]["series"] == ["1", "0", "1", "0", "3", "0", "4", "0", "3"]


def test_stratum_reports_erratum(capsys):
    code, out, err = run(capsys, "stratum", "--ranks", "1,2,1", "--degrees", "2,0,-3", "--twist", "6",
                         "--splitting", "1,-1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["results"]["blocks"][0]["proj_dim"] == "7"
    assert data["results"]["dimension_check"] is True
    assert any("P^9" in w for w in data["warnings"]) and "P^9" in err


def test_errata_in_betti_report(capsys):
    _, js, _ = run(capsys, "betti", "3", "-1", "6", "--format", "json")
    warnings = json.loads(js)["warnings"]
    assert len(warnings) == 3


def test_out_file(tmp_path, capsys):
    target = tmp_path / "r.json"
    code, out, _ = run(capsys, "betti", "2", "-1", "4", "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["results"]["series"] == ["1", "0", "1", "0", "2", "0", "2"]


def test_positive_genus_dimension_needs_h0(capsys):
    assert run(capsys, "dimension", "--ranks", "1,1", "--degrees", "0,-1", "--twist", "2", "--genus", "2")[0] == 2
    code, out, _ = run(capsys, "dimension", "--ranks", "1,1", "--degrees", "0,-1", "--twist", "2", "--genus", "2",
                       "--h0-end", "1,1", "--format", "json")
    assert code == 0 and json.loads(out)["results"]["dimension"] == str(1 + 2 - 1 + 1)
