from fractions import Fraction as F

import pytest

import eopkit


def test_hermite_type3():
    assert eopkit.eop("hermite", "III", 2, 3) == [0, F(3, 2), 0, 1]


def test_laguerre_m0_matches_shifted_classical():
    assert eopkit.eop("laguerre", "I", 0, 2, alpha=F(1, 2)) == eopkit.cop("laguerre", 2, alpha=F(3, 2))


def test_laguerre_type3_constant():
    assert eopkit.eop("laguerre", "III", 2, 3, alpha=F(1, 2)) == [F(-3, 8), F(9, 4), F(9, 2), 1]


def test_classical_monic():
    for family in ("hermite", "laguerre", "jacobi"):
        assert eopkit.cop(family, 5, alpha=F(1, 3), beta=F(2, 7))[-1] == 1


def test_gap_degree_raises():
    with pytest.raises(eopkit.SpecError, match="gap"):
        eopkit.eop("laguerre", "III", 2, 1, alpha=F(1, 2))


def test_pole_raises_value_error():
    with pytest.raises(ValueError, match="pole"):
        eopkit.eop("laguerre", "II", 1, 3, alpha=-2)


def test_verify_passes():
    r = eopkit.verify("link", m=1, n=2, alpha=F(1, 3), beta=F(2, 5))
    assert r["passed"] and r["exit_code"] == 0
    assert eopkit.verify("quad-odd-obstruction", m=1, n=2)["passed"]


def test_verify_degenerate_raises():
    with pytest.raises(eopkit.SpecError):
        eopkit.verify("link", m=1, n=2)


def test_suite_section():
    r = eopkit.suite(max_m=1, max_n=2, only="limits")
    assert [s["name"] for s in r["sections"]] == ["limits"]
    assert r["exit_code"] == 0


def test_run_cli_usage():
    code, _, err = eopkit.run_cli(["eop", "--family", "hermite", "-m", "1", "-n", "3"])
    assert code == 2 and "error:" in err
