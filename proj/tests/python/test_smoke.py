import json
import os
import subprocess

import pytest

try:
    import berndtlib as b
except ImportError:
    import _berndt as b


def test_closed_form_json_round_trip():
    j = json.loads(b.closed_form_json(2))
    assert [t["coeff"] for t in j["terms"]] == [
        "5/1024", "-15/16384", "3/16384", "-7/131072", "1/65536"]
    assert [t["gamma_exp"] for t in j["terms"]] == [8, 10, 12, 14, 16]


def test_coefficients_exact():
    assert b.coefficients(2) == [
        "5/1024", "-15/8192", "3/16384", "-7/65536", "1/65536"]


def test_pretty_mentions_gamma_and_pi():
    p = b.closed_form_pretty(3)
    assert "G^" in p and "pi" in p


def test_closed_form_value_matches_integral():
    val = b.closed_form_value(2, digits=35)
    integral, bound = b.integrate_mixed("5", digits=35)
    assert val[:30] == integral[:30]
    assert float(bound) < 1e-30


def test_series_matches_closed_form_value():
    s = b.hyper_sum("X", 5, 3, y="pi", digits=30)
    closed = json.loads(b.closed_series_json("X3", 2))
    assert len(closed["terms"]) >= 1
    assert s.startswith("-") or s.startswith("0")


def test_gamma_quarter_digits():
    g = b.gamma_quarter(digits=30)
    assert g.startswith("3.6256099082219083119306851558")


def test_ramanujan_sine_quarter_pi():
    v = float(b.ramanujan_sine(1, digits=20))
    assert abs(v - 0.7853981633974483) < 1e-12


def test_barnes_value_reasonable():
    v = float(b.barnes_value(2, digits=20))
    assert 0 < v < 0.1


def test_run_suite_core():
    ok, text = b.run_suite("core", digits=30)
    assert ok, text
    assert "ALL PASS" in text


def test_invalid_inputs_raise():
    with pytest.raises(Exception):
        b.closed_form_json(1)
    with pytest.raises(Exception):
        b.hyper_sum("nope", 5, 2)


@pytest.mark.skipif("BERNDT_CLI" not in os.environ,
                    reason="CLI path not provided")
def test_cli_agrees_with_module():
    out = subprocess.run(
        [os.environ["BERNDT_CLI"], "--prec", "25", "closed-form", "--m", "2",
         "--json"],
        capture_output=True, text=True, check=True).stdout
    assert b.closed_form_json(2) in out
