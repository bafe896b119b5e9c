from __future__ import annotations

import csv
import io
import json

import pytest

from tightmaps.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("ds,value", [("2,2,2", "1"), ("1,1,1,3", "2"), ("1,1,1", "0")])
def test_count(capsys, ds, value):
    code, out, _ = run(capsys, "count", "--boundaries", ds)
    assert code == 0
    assert json.loads(out) == {"boundaries": [int(x) for x in ds.split(",")], "value": value, "method": "unified"}


def test_count_forced_method_mismatch(capsys):
    code, _, err = run(capsys, "count", "--boundaries", "1,1,2,2", "--method", "bipartite")
    assert code == 2 and "bipartite" in err


@pytest.mark.parametrize("bad", ["2,2", "a,b", "0,0,0", "-1,2,2", ""])
def test_count_invalid(capsys, bad):
    code, _, _ = run(capsys, "count", f"--boundaries={bad}")
    assert code == 2


def test_bad_flags(capsys):
    assert run(capsys, "count")[0] == 2
    assert run(capsys, "count", "--boundaries", "-1,2,2")[0] == 2
    assert run(capsys, "table", "--n", "3")[0] == 2
    assert run(capsys, "verify", "--suite", "nope")[0] == 2


@pytest.mark.parametrize("ds,value", [("3,1,1,1", "2"), ("2,2,2", "1"), ("1,1,1", "0")])
def test_slicings(capsys, ds, value):
    code, out, _ = run(capsys, "slicings", "--boundaries", ds)
    assert code == 0 and json.loads(out)["value"] == value


@pytest.mark.parametrize(
    "args,value", [(["2,2"], "1/2"), (["2,2,2"], "1"), (["3,1,1,1", "--non-tight"], "2")]
)
def test_oracle(capsys, args, value):
    code, out, _ = run(capsys, "oracle", "--jobs", "1", "--boundaries", *args)
    data = json.loads(out)
    assert code == 0 and data["value"] == value
    assert data["darts"] == str(sum(int(x) for x in args[0].split(",")))


def test_oracle_cap(capsys, monkeypatch):
    monkeypatch.setenv("TIGHTMAPS_DART_CAP", "6")
    code, _, err = run(capsys, "oracle", "--jobs", "1", "--boundaries", "4,4")
    assert code == 3 and "cap" in err


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "codes", "--bound", "5")
    data = json.loads(out)
    assert code == 0 and data["ok"] and data["suites"][0]["suite"] == "codes"
    assert data["suites"][0]["cases"] > 0


def test_verify_failure_exit(capsys, monkeypatch):
    import tightmaps.verify as v

    def broken(name, bound=None):
        rep = v.Report(name)
        rep.check("always wrong", 1, 2)
        return rep.finish()

    monkeypatch.setattr(v, "run_suite", broken)
    code, out, _ = run(capsys, "verify", "--suite", "polys")
    assert code == 1
    assert json.loads(out)["suites"][0]["failures"][0]["expected"] == 1


def _rows(text):
    return list(csv.reader(io.StringIO(text)))


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--n", "3", "--max", "4")
    rows = _rows(out)
    assert code == 0 and rows[0] == ["d1", "d2", "d3", "value"]
    assert ["2", "2", "2", "1"] in rows
    body = [tuple(map(int, r[:3])) for r in rows[1:]]
    assert body == sorted(body) and len(body) == 5**3 - 1


def test_table_four(capsys):
    _, out, _ = run(capsys, "table", "--n", "4", "--max", "3")
    assert ["1", "1", "1", "3", "2"] in _rows(out)


def test_table_non_tight_json(capsys, tmp_path):
    target = tmp_path / "t.json"
    code, _, _ = run(capsys, "table", "--n", "3", "--max", "2", "--non-tight", "--format", "json", "--output", str(target))
    data = json.loads(target.read_text())
    assert code == 0
    assert {"boundaries": [2, 2, 2], "value": "1"} in data


def test_table_bad_n(capsys):
    code, _, _ = run(capsys, "table", "--n", "2", "--max", "2")
    assert code == 2
