import csv
import io
import json
import subprocess
import sys

import numpy as np
import pytest

from hypdiff.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, RunConfig, load_config, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_bessel_anchor_json(capsys):
    code, out, _ = run(capsys, "eval", "--fn", "bessel_k_imag", "--nu", "0", "--x", "1")
    doc = json.loads(out)
    assert code == EXIT_OK and doc["schema"] == 1
    assert doc["rows"][0]["value"] == pytest.approx(0.4210244382, abs=1e-10)
    assert list(doc) == sorted(doc)
    assert {"config_echo", "wall_ms", "command"} <= set(doc)


def test_eval_conical_and_whittaker_anchors(capsys):
    _, out, _ = run(capsys, "eval", "--fn", "conical_p", "--mu", "0", "--nu", "0", "--z", "1.000001")
    assert json.loads(out)["rows"][0]["value"] == pytest.approx(1.0, abs=1e-6)
    _, out, _ = run(capsys, "eval", "--fn", "whittaker_w", "--kappa", "0", "--m", "0.5", "--z", "2")
    assert json.loads(out)["rows"][0]["value"] == pytest.approx(np.exp(-1), rel=1e-12)


def test_eval_grid_csv(capsys):
    code, out, _ = run(capsys, "eval", "--fn", "conical_p", "--mu", "0,0.5", "--nu", "1", "--z", "1.5,2,3",
                       "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == EXIT_OK and len(rows) == 6
    assert set(rows[0]) == {"mu", "nu", "z", "value", "est_error"}


def test_verify_csv_header_and_pass(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "algebra", "--format", "csv")
    lines = out.splitlines()
    assert code == EXIT_OK
    assert lines[0] == "anchor,param,lhs,rhs,rel_err,tol,pass"
    assert all(line.endswith(",true") for line in lines[1:])


def test_verify_failure_exit_code(capsys):
    # the isotropy record of the brachistochrone suite compares against -R^2
    code, out, err = run(capsys, "verify", "--suite", "brachistochrone")
    doc = json.loads(out)
    assert code == EXIT_FAIL and "verification failed" in err
    bad = [r for r in doc["records"] if not r["pass"]]
    assert [r["anchor"] for r in bad] == ["isotropy tr(H^2/2)=-R^2"]


def test_tolerance_override_changes_outcome(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "whipple", "--tol", "whipple=1e-30")
    assert code == EXIT_FAIL
    assert any(r["tol"] == 1e-30 for r in json.loads(out)["records"])


@pytest.mark.parametrize("argv", [
    ["verify", "--suite", "nope"],
    ["eval", "--fn", "conical_p", "--mu", "0"],
    ["eval", "--fn", "bessel_k_imag", "--nu", "0", "--x", "-1"],
    ["verify", "--suite", "algebra", "--tol", "nokey=1"],
    ["verify", "--suite", "algebra", "--tol", "bad"],
    ["bogus"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == EXIT_USAGE and out == "" and err


def test_config_file_key_value(tmp_path, capsys):
    p = tmp_path / "run.cfg"
    p.write_text("suite = algebra\ntol.algebra = 1e-14\noutput_format = csv\n")
    code, out, _ = run(capsys, "verify", "--config", str(p))
    assert code == EXIT_OK and out.startswith("anchor,")
    assert ",1e-14," in out


def test_config_file_json_and_unknown_keys(tmp_path, capsys):
    p = tmp_path / "run.json"
    p.write_text(json.dumps({"params": {"suite": "algebra"}, "seed": 5}))
    code, out, _ = run(capsys, "verify", "--config", str(p))
    assert code == EXIT_OK and json.loads(out)["config_echo"]["seed"] == 5
    p.write_text(json.dumps({"params": {"suite": "algebra"}, "colour": "red"}))
    assert run(capsys, "verify", "--config", str(p))[0] == EXIT_USAGE
    q = tmp_path / "bad.cfg"
    q.write_text("bogus = 1\n")
    assert run(capsys, "verify", "--config", str(q))[0] == EXIT_USAGE


def test_load_config_and_runconfig_validate(tmp_path):
    p = tmp_path / "c.cfg"
    p.write_text("# comment\ncommand = kernel\nrho = 1,2\nseed = 3\n")
    raw = load_config(p)
    cfg = RunConfig(**raw)
    assert cfg.validate().params == {"rho": "1,2"} and cfg.seed == 3
    with pytest.raises(ValueError):
        RunConfig("kernel", {"zzz": 1}).validate()


def test_kernel_transform_brachistochrone_commands(capsys, tmp_path):
    code, out, _ = run(capsys, "kernel", "--rho", "0.5", "--t", "0.5", "--method", "mckean")
    assert code == EXIT_OK and json.loads(out)["rows"][0]["value"] == pytest.approx(0.1168162239484122, rel=1e-10)
    code, out, _ = run(capsys, "transform", "--kind", "kontorovich_lebedev", "--grid", "0.5,1")
    assert code == EXIT_OK and len(json.loads(out)["rows"]) == 2
    dest = tmp_path / "b.json"
    code, out, _ = run(capsys, "brachistochrone", "--omega", "0.5", "--output", str(dest))
    doc = json.loads(dest.read_text())
    assert code == EXIT_OK and out == ""
    assert doc["closed_form_error"] < 1e-8 and doc["trace_h2"] == pytest.approx(1.0)


def test_nan_written_as_null(capsys):
    _, out, _ = run(capsys, "eval", "--fn", "greens_function", "--rho", "1", "--E", "2")
    assert json.loads(out)["rows"][0]["est_error"] is None
    assert "NaN" not in out


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "hypdiff", "eval", "--fn", "bessel_k_imag", "--nu", "0", "--x", "1",
                        "--format", "csv"], capture_output=True, text=True)
    assert r.returncode == 0
    assert r.stdout.splitlines()[1].startswith("0.0,1.0,0.42102443824")
