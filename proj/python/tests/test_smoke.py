import math

import pytest

import bstower


def step(report, name):
    return next(s for s in report["steps"] if s["name"] == name)


def test_field_invariants():
    assert bstower.field_invariants("x^2 + 1") == (-4, 0, 1)
    with pytest.raises(bstower.BstowerError):
        bstower.field_invariants("x^2 - 4")


def test_verify_example1():
    report = bstower.verify(1)
    assert report["format"] == "bstower-report/1"
    assert report["overall"] == "PASS"
    assert step(report, "discriminant")["computed"] == str(-23 * 35509)
    assert step(report, "GS certificate (theta=0)")["computed"] == "infinite"


def test_verify_example2_deviation():
    report = bstower.verify(2)
    assert report["overall"] == "FAIL"
    assert report["first_failure"] == "BS upper bound"
    assert [d["step"] for d in report["deviations"]] == ["BS upper bound"]


def test_splitting_and_bounds():
    doc = bstower.bundled_example(2)
    split = bstower.splitting(doc, 20)
    assert split["output"] == ["q N_q", "13 5", "real places 12", "complex places 0"]
    b = bstower.bounds(bstower.bundled_example(1))
    assert float(step(b, "BS lower bound")["computed"]) == pytest.approx(0.56498, abs=1e-4)


def test_table():
    t = bstower.table()
    assert t["output"][-1] == "* literal from configuration, not re-derived"


def test_bs_ratio():
    assert bstower.bs_ratio({}) == 1.0
    assert bstower.bs_ratio({"R": 1.0}) == pytest.approx(1 - math.log(2))
    assert bstower.bs_ratio({"4": 2.0}) == pytest.approx(1 + 2 * math.log(4 / 3))
    with pytest.raises(bstower.BstowerError):
        bstower.bs_ratio({"6": 1.0})
