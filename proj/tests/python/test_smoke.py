import math
import os
import subprocess

import pytest

import relconvex as rc


def test_majorization_and_certificate():
    assert rc.is_majorized([1, 1, 1], [3, 0, 0])
    assert not rc.is_majorized([3, 0, 0], [1, 1, 1])
    a, residual = rc.hlp_transfer_matrix([2, 2], [3, 1])
    assert residual <= 1e-12
    assert all(abs(sum(row) - 1) < 1e-12 for row in a)
    with pytest.raises(ValueError, match="not majorized"):
        rc.hlp_transfer_matrix([3, 0, 0], [1, 1, 1])


def test_transport():
    v = rc.weighted_majorization_decide([1.0], [0.0, 2.0], [1.0], [0.5, 0.5])
    assert v["feasible"]
    assert v["certificate"][0] == pytest.approx([0.5, 0.5])
    assert not rc.weighted_majorization_decide([[3, 3]], [[0, 0], [1, 0], [0, 1]])["feasible"]
    with pytest.raises(rc.InputError):
        rc.weighted_majorization_decide([0.0], [[0.0, 0.0]])


def test_convexity():
    assert rc.support_line_certify("xexp", -1, -20, 20)["certified"]
    assert not rc.support_line_certify("xexp", -3, -20, 20)["certified"]
    assert abs(rc.convexity_boundary("log2", 2) - 5.495869874) <= 1e-6
    assert abs(rc.convexity_boundary("gauss1d", 0.5) - 1.183802) <= 1e-5
    assert rc.convexity_boundary("square", 0.0) is None


def test_polynomials():
    rs = sorted(rc.roots([0, -3, 0, 4]), key=lambda z: z.real)
    assert rs[0] == pytest.approx(-math.sqrt(3) / 2)
    assert rc.malamud_majorization_check([0, -3, 0, 4])["feasible"]
    c = rc.relative_concavity_verify([0, -3, 0, 4])
    assert c["holds"]
    assert c["lhs"] == pytest.approx(math.exp(-0.25), abs=1e-12)
    assert c["rhs"] == pytest.approx((1 + 2 * math.exp(-0.75)) / 3, abs=1e-12)
    with pytest.raises(rc.HypothesisError):
        rc.relative_concavity_verify([-4, 0, 1])


def test_inequalities_and_spectra():
    p = rc.popoviciu_verify("square", 0, 1, 2)
    assert p["lhs"] == pytest.approx(8 / 3)
    assert p["rhs"] == pytest.approx(7 / 3)
    t = rc.trace_inequality_verify([0.5, 0.5], [[[2, 0], [0, 0]], [[-2, 0], [0, 0]]])
    assert t["holds"]
    assert rc.schur_horn_check([[2, 1], [1, 2]])
    assert rc.eigenvalues([[2, 1], [1, 2]]) == pytest.approx([3, 1])


def test_reproduce_constants():
    report = rc.reproduce("constants")
    assert report["failed"] == 0
    assert [e["id"] for e in report["entries"]] == ["a-star", "r-star"]


def test_cli_exit_codes():
    cli = os.environ.get("RELCONVEX_CLI")
    if not cli:
        pytest.skip("RELCONVEX_CLI not set")
    ok = subprocess.run([cli, "poly", "malamud", "--coeffs", "0,-3,0,4"], capture_output=True, text=True)
    assert ok.returncode == 0
    assert ok.stdout.startswith("feasible")
    assert subprocess.run([cli, "majorize", "--x", "3,0,0", "--y", "1,1,1"]).returncode == 3
    assert subprocess.run([cli, "frobnicate"], capture_output=True).returncode == 1
