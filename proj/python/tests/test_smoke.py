import math

import pytest

import qf3


def test_s3_exact_values():
    assert qf3.s3(1, method="naive")["S3"] == 2
    assert qf3.s3(2, method="naive")["S3"] == 29
    assert qf3.s3(2.9)["S3"] == 29  # floor invariance


def test_bessel_references():
    assert qf3.bessel("Y", 0, 1.0) == pytest.approx(0.08825696421567696, abs=1e-12)
    assert qf3.bessel("K", 0, 1.0) == pytest.approx(0.42102443824070834, abs=1e-12)
    with pytest.raises(Exception):
        qf3.bessel("K", 0, -1.0)


def test_gauss_sum_magnitude():
    # |S(q, 1)| = sqrt(q) for odd q
    for q in (3, 5, 13, 101):
        assert abs(qf3.gauss_sum(q, 1)) == pytest.approx(math.sqrt(q), abs=1e-9)


def test_singular_series():
    e = qf3.s1_euler(P=10000, eps=1e-12)
    closed = 4.0 * qf3.zeta(3) / (5.0 * qf3.zeta(4))
    assert e["value"] == pytest.approx(closed, abs=1e-6)


def test_constants_and_table():
    c = qf3.constants()
    assert c["J1"] == pytest.approx(1.0, abs=1e-6)
    assert c["C1"] == pytest.approx(2.0 * c["S1"] * c["J1"])
    rows = qf3.table([1, 2])
    assert rows[0]["S3"] == 2
    assert rows[1]["S3"] == 29


def test_voronoi_identity():
    r = qf3.voronoi_check(1, 1, n_trunc=4000)
    assert r["rel_residual"] < 1e-6


def test_lemma_check():
    r = qf3.check_lemma("3.1", qmax=60)
    assert r["max_violation"] < 1e-9
    assert r["cases"] > 0
