import numpy as np
import pytest

from hypdiff.verify import DEFAULT_TOLERANCES, SUITES, Record, run_suite


def test_record_pass_flag_and_dict():
    r = Record("a", "p", 1.0, 1.0, 0.0, 1e-12)
    assert r.passed and r.as_dict()["pass"] is True
    assert not Record("a", "p", 1.0, 2.0, 0.5, 1e-3).passed
    assert not Record("a", "p", np.nan, 1.0, np.nan, 1.0).passed


def test_suites_registered():
    assert set(SUITES) == {"algebra", "brachistochrone", "metric", "eigen", "bridges", "whipple", "completeness",
                           "composition", "kernel"}


def test_tolerance_override_and_unknown_key():
    rep = run_suite("algebra", {"algebra": 1e-3})
    assert rep.passed and all(r.tol == 1e-3 for r in rep.records)
    assert DEFAULT_TOLERANCES["algebra"] == 1e-15
    with pytest.raises(KeyError):
        run_suite("algebra", {"nokey": 1.0})
    with pytest.raises(KeyError):
        run_suite("nosuch")


def test_report_failures_and_timing():
    rep = run_suite("brachistochrone")
    assert [r.anchor for r in rep.failures] == ["isotropy tr(H^2/2)=-R^2"]
    assert not rep.passed and rep.wall_ms > 0
