import math
import os
import subprocess

import pytest

import abeta


def test_bounds():
    assert abeta.bound_gamma(1, 0.0) == pytest.approx(0.5)
    assert abeta.bound_inverse(0.0) == pytest.approx((1.0, 4.0 / 3))
    b = abeta.bound_diff32(0.0)
    assert b["lower"] == pytest.approx(-1 / math.sqrt(3))
    assert b["upper_region"] == "flat"
    assert abeta.bound_psi_plus(1.0, 3.0, 1.0)["upper"] == pytest.approx(12.0)
    assert abeta.diff32_threshold() == pytest.approx((7 - math.sqrt(17)) / 8)
    with pytest.raises(ValueError):
        abeta.bound_gamma(1, 1.5)


def test_series_round_trip():
    f = [0, 1, 1, 0, 0]
    F = abeta.revert(f, 4)
    assert [round(c.real, 12) for c in F] == [0, 1, -1, 2, -5]
    g = abeta.compose(f, F, 4)
    assert max(abs(a - b) for a, b in zip(g, [0, 1, 0, 0, 0])) < 1e-14


def test_caratheodory_and_extremals():
    assert abeta.is_valid_truncation([2, 2, 2])
    assert not abeta.is_valid_truncation([2, 0])
    a = abeta.extremal("f1", 0.0, 3)
    assert [c.real for c in a] == pytest.approx([1.0, 2 / 3, 0.5])
    assert abeta.functional("gamma2", *a) == pytest.approx(1 / 12)
    assert abeta.functional("gamma2", *abeta.extremal("f2", 0.0, 3)) == pytest.approx(1 / 3)


def test_search_and_verify():
    r = abeta.search("gamma1", beta=0.0)
    assert r["optimum"] == pytest.approx(0.5)
    assert r["c1"] == 2.0
    rep = abeta.verify("thm2.1", beta=0.5, part=2)
    assert rep["status"] == "PASS"
    assert rep["witness_upper_name"] == "f2"
    assert abeta.verify_lemma21(1.0, 1.0, -2 / 3)["status"] == "PASS"
    with pytest.raises(ValueError):
        abeta.verify("thm9.9")


def test_run_cli_in_process():
    code, out, err = abeta.run_cli(["bounds", "--beta", "0"])
    assert code == 0
    header, row = out.strip().splitlines()
    values = dict(zip(header.split(","), row.split(",")))
    assert values["gamma1"] == "0.5"
    assert abeta.run_cli(["bounds", "--beta", "2"])[0] == 2
    assert abeta.format_number(-0.0) == "0"


@pytest.mark.skipif("ABETA_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_binary_matches_module():
    proc = subprocess.run([os.environ["ABETA_CLI"], "bounds", "--beta", "0.3"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == abeta.run_cli(["bounds", "--beta", "0.3"])[1]
