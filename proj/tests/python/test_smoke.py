from fractions import Fraction

import pytest

import hilbdim


def test_dimensions():
    assert hilbdim.dim_closed_form("scroll-p2", 7, 3, 6, e1=4, e2=9) == 57
    assert hilbdim.chi_normal("hqf", 10, 5, 7) == 94
    assert hilbdim.chi_normal("dp3", 10, 9, 6, pg=3) == 114
    assert hilbdim.chi_normal("scroll-q", 8, 4, 6, e11=3, e12=3, e2=10) == 61


def test_invariants_agree_with_ring():
    closed = hilbdim.invariants("scroll-q", 8, 4, 6, e11=3, e12=3, e2=10)
    ring = hilbdim.ring_invariants("scroll-q", 8, 4, 6, e11=3, e12=3, e2=10)
    keys = ["L3", "KL2", "K2L", "K3", "c2L", "Kc2", "c3"]
    assert [closed[k] for k in keys] == [ring[k] for k in keys]
    assert closed["K2L"] == 10
    assert closed["c3"] == 8


def test_hilbert_polynomial():
    assert hilbdim.hilbert_polynomial([0, 0], [1, 1, 1, 2], 6) == [
        1,
        Fraction(7, 3),
        Fraction(5, 2),
        Fraction(7, 6),
    ]
    p1 = hilbdim.hilbert_polynomial([0, 0, 0], [1, 1, 1, 1, 1], 6)
    assert sum(p1) == 7


def test_bundles():
    assert hilbdim.derive_eb(7, 3, 2) == (3, 1)
    assert hilbdim.sym([0, 1, 1, 1], 2) == [0, 1, 1, 1, 2, 2, 2, 2, 2, 2]
    with pytest.raises(ArithmeticError):
        hilbdim.derive_eb(8, 3, 3)


def test_errors():
    with pytest.raises(ValueError):
        hilbdim.chi_normal("scroll-p2", 7, 4, 6, e1=4, e2=9)
    with pytest.raises(ValueError):
        hilbdim.chi_normal("cubic", 7, 3, 6)


def test_cli_and_tables():
    code, report = hilbdim.verify_tables()
    assert code == 0
    assert report["summary"]["fail"] == 0
    code, out, err = hilbdim.run_cli(["search", "hqf", "--d-min", "7"])
    assert code == 2 and "d-max" in err
