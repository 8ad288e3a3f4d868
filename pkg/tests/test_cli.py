import io
import json
import subprocess
import sys

import pytest

from fracgft import __version__
from fracgft.cli import run
from fracgft.series import GapSeries

DELTA_ONE = ["--k", "1", "--tau", "1", "--mu", "1", "--delta", "1", "--gamma", "0", "--allow-delta-one"]
PLAIN = ["--k", "1", "--tau", "1", "--mu", "1", "--delta", "0", "--gamma", "0"]


def call(argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    out = io.StringIO()
    code = run(argv, out)
    return code, out.getvalue()


@pytest.fixture
def write(tmp_path):
    def _write(name, payload):
        path = tmp_path / name
        path.write_text(json.dumps(payload))
        return str(path)

    return _write


def test_extremal_check_and_radius_examples(write):
    code, text = call(["extremal", *DELTA_ONE])
    assert code == 0 and text == '{"k":1,"coefficients":[{"nu":2,"a":0.5}]}\n'
    series = write("f.json", json.loads(text))
    code, text = call(["check", "--series", series, *DELTA_ONE])
    assert json.loads(text) == {"member": True, "functional": 1.0, "margin": 0.0}
    code, text = call(["radius", "--kind", "starlike", *PLAIN, "--alpha", "0"])
    assert text == '{"r":0.5,"nu_star":2,"capped":false}\n'
    code, text = call(["radius", "--kind", "convex", *PLAIN])
    assert json.loads(text)["r"] == pytest.approx(0.25, abs=1e-15)


def test_params_file_and_stdin(write, monkeypatch):
    params = write("p.json", {"k": 2, "tau": 0.8, "mu": 0.5, "delta": 0.3, "gamma": 0.1})
    code, text = call(["extremal", "--params", params])
    assert code == 0
    f = json.loads(text)
    code, text = call(["check", "--series", "-", "--params", params], stdin=json.dumps(f), monkeypatch=monkeypatch)
    assert code == 0 and json.loads(text)["member"] is True
    # explicit flags override file values
    code, text = call(["extremal", "--params", params, "--gamma", "0.0"])
    assert json.loads(text)["coefficients"][0]["a"] > f["coefficients"][0]["a"]


def test_round_trip_and_determinism(write):
    f = GapSeries(2, {3: 0.1, 7: 1.0 / 3.0, 11: 2.0**-40})
    path = write("f.json", f.to_dict())
    code, text = call(["combine", "--series", path, "--weights", "1"])
    assert code == 0 and GapSeries.from_dict(json.loads(text)) == f
    argv = ["transform", "--series", path, "--tau", "0.9", "--mu", "0.4"]
    assert call(argv) == call(argv)


def test_transform_output(write):
    path = write("f.json", {"k": 1, "coefficients": [{"nu": 2, "a": 0.1}]})
    _, text = call(["transform", "--series", path, "--tau", "1", "--mu", "0.5"])
    data = json.loads(text)
    assert data["head"] == 2.0 and data["head_power"] == 1
    assert data["terms"][0]["power"] == 2 and data["terms"][0]["c"] == pytest.approx(0.1 * 8 / 3, rel=1e-14)
    _, text = call(["transform", "--series", path, "--tau", "1", "--mu", "0.5", "--derivative"])
    assert json.loads(text)["head_power"] == 0


def test_distortion_json_and_csv():
    code, text = call(["distortion", *PLAIN, "--r", "0.5"])
    assert json.loads(text) == {"lo": 0.25, "hi": 0.75}
    code, text = call(["distortion", *PLAIN, "--emit-csv", "--points", "5", "--r-max", "0.8"])
    rows = text.strip().splitlines()
    assert code == 0 and rows[0] == "r,lo,hi" and len(rows) == 6
    assert [float(x) for x in rows[-1].split(",")] == pytest.approx([0.8, 0.16, 1.44])
    code, text = call(["distortion", *PLAIN, "--r", "0.5", "--beta", "0.4", "--alpha-op", "0.4"])
    assert json.loads(text) == pytest.approx({"lo": 0.25, "hi": 0.75})


def test_hadamard_and_combine(write):
    params = write("p.json", {"k": 1, "tau": 0.5, "mu": 0.5, "delta": 0.0, "gamma": 0.5})
    f = write("f.json", {"k": 1, "coefficients": [{"nu": 2, "a": 0.5}]})
    code, text = call(["hadamard", "--series", f, "--series2", f, "--params", params])
    data = json.loads(text)
    assert code == 0 and data["xi"] == 0.75 and data["member_at_xi"] is True
    assert data["omega"] == {"k": 1, "coefficients": [{"nu": 2, "a": 0.25}]}
    g = write("g.json", {"k": 1, "coefficients": [{"nu": 3, "a": 0.2}]})
    _, text = call(["combine", "--series", f, "--series", g, "--eta", "0.5"])
    assert json.loads(text) == {"k": 1, "coefficients": [{"nu": 2, "a": 0.25}, {"nu": 3, "a": 0.1}]}
    _, text = call(["combine", "--series", f, "--series", g])
    assert json.loads(text)["coefficients"][1]["a"] == 0.1


def test_verify_writes_report(tmp_path, capsys):
    out = tmp_path / "report.json"
    code, text = call(["verify", "--suite", "fracops", "--seed", "4", "--out", str(out)])
    report = json.loads(out.read_text())
    assert code == 0 and text == ""
    assert set(report) == {"suite", "seed", "cases", "violations", "max_error"}
    assert report["suite"] == "fracops" and report["seed"] == 4 and report["violations"] == []
    assert "fracops" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv,field",
    [
        (["extremal", "--k", "0", "--tau", "1", "--mu", "1", "--delta", "0", "--gamma", "0"], "k"),
        (["extremal", "--k", "1", "--tau", "1", "--mu", "1", "--delta", "1", "--gamma", "0"], "delta"),
        (["radius", *PLAIN, "--alpha", "1.5"], "alpha"),
        (["check", "--series", "/nonexistent.json", *PLAIN], "series"),
        (["combine", "--series", "-", "--eta", "0.5"], "eta"),
    ],
)
def test_validation_errors_exit_one(argv, field, capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO('{"k":1,"coefficients":[]}'))
    code, text = call(argv)
    err = json.loads(capsys.readouterr().err)["error"]
    assert code == 1 and text == ""
    assert set(err) == {"code", "message", "field"} and err["field"] == field


def test_usage_and_malformed_input(capsys, monkeypatch):
    assert call(["nope"])[0] == 1
    assert json.loads(capsys.readouterr().err)["error"]["code"] == "usage"
    code, _ = call(["check", "--series", "-", *PLAIN], stdin="{not json", monkeypatch=monkeypatch)
    assert code == 1 and "malformed" in json.loads(capsys.readouterr().err)["error"]["message"]


def test_internal_error_exits_two(monkeypatch, capsys):
    import fracgft.cli as cli

    def boom(*_):
        raise RuntimeError("kaboom")

    monkeypatch.setattr(cli, "extremal", boom)
    code, _ = call(["extremal", *PLAIN])
    assert code == 2 and json.loads(capsys.readouterr().err)["error"]["code"] == "internal"


def test_entry_point_version_and_scan_limit():
    res = subprocess.run([sys.executable, "-m", "fracgft", "--version"], capture_output=True, text=True)
    assert res.returncode == 0 and __version__ in res.stdout
    argv = [sys.executable, "-m", "fracgft", "radius", "--k", "1", "--tau", "1", "--mu", "1", "--delta", "0", "--gamma", "0.999"]
    res = subprocess.run(argv, capture_output=True, text=True, env={"GFT_SCAN_LIMIT": "500", "PATH": ""})
    assert res.returncode == 0 and json.loads(res.stdout) == {"r": 1.0, "nu_star": 0, "capped": True}
