import cmath
import math

import pytest

import qdeform


def test_q_rationals():
    assert qdeform.q_sharp(5, 2) == ("q^3+q^2+2*q+1", "q+1")
    assert qdeform.q_flat(2, 1) == ("q^2+1", "1")
    assert qdeform.even_cf(5, 2) == [2, 2]
    assert qdeform.transition_check(7, 3)
    assert qdeform.positivity_check(13, 5)
    with pytest.raises(qdeform.PreconditionError):
        qdeform.positivity_check(1, 2)


def test_ratfunc():
    r = qdeform.RatFunc("(1+q)/(1-q)")
    assert str(r) == "(-q-1)/(q-1)"
    assert r.eval("2") == "-3"
    assert r * r.inverse() == qdeform.RatFunc(1)
    assert str(qdeform.RatFunc("q") ** 2 - 1) == "q^2-1"
    with pytest.raises(qdeform.ParseError):
        qdeform.RatFunc("q+")
    with pytest.raises(qdeform.MathError):
        qdeform.RatFunc(0).inverse()


def test_operators():
    assert qdeform.witt_bracket(1, 2) == {2: "q-1", 3: "1"}
    mult, vec = qdeform.bracket(-1, 0)
    assert mult == "0"
    assert "x" in vec


def test_series():
    assert qdeform.tsallis_series(3) == ["1", "1", "-1/2*q+1", "1/3*q^2-7/6*q+1"]
    assert qdeform.tsallis_at(4, "1") == ["1", "1", "1/2", "1/6", "1/24"]


def test_flows():
    assert qdeform.flow_dm1(0.5, 2.0, 1.0) == pytest.approx(2 * math.exp(0.5) - 1)
    z = 0.3 + 0.2j
    assert abs(qdeform.flow_d0(0.0, 1.5, z) - z) < 1e-12
    assert abs(qdeform.flow_d1(0.4, 1.5, qdeform.flow_d1(0.3, 1.5, z)) - qdeform.flow_d1(0.7, 1.5, z)) < 1e-10
    assert qdeform.classical_witt_flow(1, 1.0, 2.0) == pytest.approx(2 * cmath.e)
    assert qdeform.classical_witt_flow(2, 1.0, 1.0) is None


def test_verify():
    assert "witt" in qdeform.suite_names()
    report = qdeform.verify("sl2")
    assert report["suite"] == "sl2"
    assert all(c["status"] == "pass" for c in report["checks"])
    with pytest.raises(ValueError):
        qdeform.verify("nosuch")
