import numpy as np
import pytest

from animlab.baseline import (
    SPLINE_LIMIT_A,
    SPLINE_LIMIT_B,
    SimpleAnimator,
    SplineAnimator,
    hermite,
    spline_discrete_matrices,
    spline_limit_step_response,
)
from animlab.easing import smoothstep


def test_hermite_endpoint():
    assert hermite(0.0, 0.0, 1.0, 0.0, 1.0) == pytest.approx(1.0)


def test_hermite_symmetry():
    assert hermite(0.0, 0.0, 1.0, 0.0, 0.5) == pytest.approx(0.5)


def test_hermite_hand_value():
    # basis at t=0.5: h00=0.5, h10=0.125, h01=0.5, h11=-0.125
    assert hermite(0.0, 2.0, 1.0, 0.0, 0.5) == pytest.approx(0.75)


def test_simple_uninterrupted():
    a = SimpleAnimator(0.0, smoothstep(1.0))
    a.retarget(0.0, 1.0)
    assert a.eval(0.5) == pytest.approx(0.5)
    assert a.eval(2.0) == pytest.approx(1.0)


def test_simple_interrupted_hand_value():
    # 0.5 + s(0.5) * (0 - 0.5) = 0.25
    a = SimpleAnimator(0.0, smoothstep(1.0))
    a.retarget(0.0, 1.0)
    a.retarget(0.5, 0.0)
    assert a.eval(1.0) == pytest.approx(0.25)


def test_simple_constant_input():
    a = SimpleAnimator(3.5, smoothstep(1.0))
    for t in np.linspace(0.0, 10.0, 11):
        assert a.eval(t) == 3.5


def test_simple_rejects_decreasing_retarget():
    a = SimpleAnimator(0.0, smoothstep(1.0))
    a.retarget(1.0, 1.0)
    with pytest.raises(ValueError):
        a.retarget(0.5, 2.0)


def test_simple_segment_ends_exactly_at_target():
    a = SimpleAnimator(0.0, smoothstep(1.0))
    targets = [(0.0, 1.0), (1.5, -2.0), (4.0, 0.5)]  # gaps >= d
    for (t, v), nxt in zip(targets, targets[1:] + [(7.0, None)]):
        a.retarget(t, v)
        assert a.eval(nxt[0] - 1e-12) == pytest.approx(v, abs=1e-9)


def test_simple_velocity_discontinuity_at_interruption():
    e = smoothstep(1.0)
    a = SimpleAnimator(0.0, e)
    a.retarget(0.0, 1.0)
    v_before = a.velocity(0.5)
    a.retarget(0.5, 0.0)
    v_after = a.velocity(0.5)
    # jump equals sdot(dt)*|delta| with sdot(0)=0 on the new segment
    assert v_before == pytest.approx(e.derivative(0.5) * 1.0)
    assert v_after == 0.0
    assert abs(v_before - v_after) > 1.0


def test_spline_segment_endpoint():
    a = SplineAnimator(0.0, 0.0, 1.0)
    a.retarget(0.0, 1.0)
    assert a.eval(1.0) == pytest.approx(1.0)
    assert a.velocity(1.0) == 0.0


def test_spline_velocity_continuous_at_interruption():
    a = SplineAnimator(0.0, 0.0, 1.0)
    a.retarget(0.0, 1.0)
    h = 1e-7
    v_left = (a.eval(0.5) - a.eval(0.5 - h)) / h
    a.retarget(0.5, 0.0)
    v_right = (a.eval(0.5 + h) - a.eval(0.5)) / h
    assert abs(v_left - v_right) < 1e-5
    assert a.velocity(0.5) == pytest.approx(v_left, abs=1e-5)


def test_spline_output_continuous_at_retargets(rng):
    a = SplineAnimator(0.0, 0.0, 1.0)
    t = 0.0
    for _ in range(10):
        t += rng.uniform(0.05, 0.4)
        before = a.eval(t)
        a.retarget(t, rng.uniform(-5, 5))
        assert a.eval(t) == pytest.approx(before, abs=1e-12)


def test_spline_constant_input():
    a = SplineAnimator(5.0)
    for t in np.linspace(0.0, 3.0, 7):
        assert a.eval(t) == 5.0


def test_spline_rejects_decreasing_retarget():
    a = SplineAnimator(0.0)
    a.retarget(1.0, 1.0)
    with pytest.raises(ValueError):
        a.retarget(0.0, 2.0)


@pytest.mark.parametrize("T", [1e-3, 1e-4, 1e-5])
def test_discrete_spline_matrices_converge_first_order(T):
    A, B = spline_discrete_matrices(T)
    assert np.abs((A - np.eye(2)) / T - SPLINE_LIMIT_A).max() < 10.0 * T
    assert np.abs(B / T - SPLINE_LIMIT_B).max() < 10.0 * T


def test_spline_limit_step_response():
    resp = spline_limit_step_response(span=20.0, rate=1000.0)
    assert resp.samples[0] == 0.0
    assert resp.samples[-1] == pytest.approx(1.0, abs=1e-3)
    # analytic 2nd-order overshoot: wn^2 = 6, 2*zeta*wn = 4
    wn = np.sqrt(6.0)
    zeta = 2.0 / wn
    peak = 1.0 + np.exp(-np.pi * zeta / np.sqrt(1.0 - zeta**2))
    assert resp.samples.max() == pytest.approx(peak, abs=1e-3)
    assert peak == pytest.approx(1.0117, abs=1e-3)


def test_spline_limit_rate_precondition():
    with pytest.raises(ValueError):
        spline_limit_step_response(rate=50.0)
