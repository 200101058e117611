import numpy as np
import pytest

from animlab.baseline import SimpleAnimator
from animlab.easing import bspline, smoothstep
from animlab.fir import (
    FirCoefficients,
    FirDiscreteFilter,
    FirStepAnimator,
    convolve_oracle,
    fir_coeffs_from_easing,
    fir_response,
)
from animlab.signal_core import step_from_events

from conftest import random_step_signal


def replay(anim, sig, t):
    for ti, v in sig.events:
        if ti > t:
            break
        anim.retarget(ti, v)
    return anim.eval(t)


class TestCoefficients:
    def test_taps_sum_to_one(self):
        for e in (smoothstep(1.0), bspline(3, 0.8)):
            for rate in (7.0, 60.0, 240.0):
                c = fir_coeffs_from_easing(e, rate)
                assert c.taps.sum() == pytest.approx(1.0, abs=1e-9)

    def test_smoothstep_taps_symmetric(self):
        c = fir_coeffs_from_easing(smoothstep(1.0), 4.0)
        assert len(c.taps) == 4
        assert c.taps[0] == pytest.approx(c.taps[3])
        assert c.taps[1] == pytest.approx(c.taps[2])

    def test_box_taps_uniform(self):
        c = fir_coeffs_from_easing(bspline(1, 1.0), 4.0)
        assert np.allclose(c.taps, 0.25)

    def test_rate_too_low_rejected(self):
        with pytest.raises(ValueError):
            fir_coeffs_from_easing(smoothstep(1.0), 1.0)

    def test_non_affine_taps_rejected(self):
        with pytest.raises(ValueError):
            FirCoefficients(60.0, [0.5, 0.6])


class TestStepAnimator:
    def test_interrupted_hand_value(self):
        # s(1) - s(0.5) = 1 - 0.5
        a = FirStepAnimator(0.0, smoothstep(1.0))
        a.retarget(0.0, 1.0)
        a.retarget(0.5, 0.0)
        assert a.eval(1.0) == pytest.approx(0.5)

    def test_equals_simple_when_uninterrupted(self, rng):
        e = smoothstep(1.0)
        sig = random_step_signal(rng, n_events=5, span=10.0, gap_min=1.0)
        grid = np.linspace(0.0, 12.0, 10_000)
        fir = FirStepAnimator(sig.initial, e)
        simple = SimpleAnimator(sig.initial, e)
        events = list(sig.events)
        ei = 0
        worst = 0.0
        for t in grid:
            while ei < len(events) and events[ei][0] <= t:
                fir.retarget(*events[ei])
                simple.retarget(*events[ei])
                ei += 1
            worst = max(worst, abs(fir.eval(t) - simple.eval(t)))
        assert worst <= 1e-12

    def test_constant_input(self):
        a = FirStepAnimator(2.5, smoothstep(1.0))
        for t in np.linspace(0.0, 5.0, 11):
            assert a.eval(t) == 2.5

    def test_rejects_decreasing_time(self):
        a = FirStepAnimator(0.0, smoothstep(1.0))
        a.retarget(1.0, 1.0)
        with pytest.raises(ValueError):
            a.retarget(0.5, 0.0)

    def test_superposition(self, rng):
        e = smoothstep(1.0)
        times = np.sort(rng.uniform(0.0, 4.0, 5))
        v1 = rng.uniform(-5, 5, 5)
        v2 = rng.uniform(-5, 5, 5)
        a, b = 0.7, -1.3
        grid = np.linspace(0.0, 6.0, 200)
        for t in grid:
            s1 = step_from_events(1.0, list(zip(times, v1)))
            s2 = step_from_events(-2.0, list(zip(times, v2)))
            s12 = step_from_events(
                a * 1.0 + b * -2.0, list(zip(times, a * v1 + b * v2))
            )
            y1 = fir_response(s1, e, t)
            y2 = fir_response(s2, e, t)
            y12 = fir_response(s12, e, t)
            assert y12 == pytest.approx(a * y1 + b * y2, abs=1e-9)

    def test_time_invariance(self, rng):
        e = smoothstep(1.0)
        sig = random_step_signal(rng)
        shift = 2.75
        for t in np.linspace(0.0, 6.0, 50):
            assert fir_response(sig, e, t) == pytest.approx(
                fir_response(sig.shifted(shift), e, t + shift), abs=1e-12
            )

    def test_velocity_continuity_under_interruption(self):
        e = smoothstep(1.0)
        rate = 1000.0
        a = FirStepAnimator(0.0, e)
        sdot_max = 1.5  # max of 6u(1-u)/d
        events = [(0.0, 1.0), (0.3, -1.0), (0.45, 2.0)]
        total_delta = 1.0 + 2.0 + 3.0
        grid = np.arange(0.0, 2.0, 1.0 / rate)
        ei = 0
        outputs = []
        for t in grid:
            while ei < len(events) and events[ei][0] <= t:
                a.retarget(*events[ei])
                ei += 1
            outputs.append(a.eval(t))
        num_vel = np.diff(outputs) * rate
        jumps = np.abs(np.diff(num_vel))
        assert jumps.max() <= 10.0 * sdot_max * total_delta / rate

    def test_convexity_range(self, rng):
        e = smoothstep(1.0)
        for _ in range(5):
            sig = random_step_signal(rng)
            values = [sig.initial] + [v for _, v in sig.events]
            lo, hi = min(values), max(values)
            for t in np.linspace(0.0, 7.0, 300):
                y = fir_response(sig, e, t)
                assert lo - 1e-9 <= y <= hi + 1e-9

    def test_pruning_is_lossless(self, rng):
        e = smoothstep(1.0)
        sig = random_step_signal(rng, n_events=8, span=6.0)
        pruned = FirStepAnimator(sig.initial, e)
        events = list(sig.events)
        ei = 0
        for t in np.linspace(0.0, 8.0, 400):
            while ei < len(events) and events[ei][0] <= t:
                pruned.retarget(*events[ei])
                ei += 1
            # unpruned reference: closed-form sum over ALL past deltas
            prev = sig.initial
            total = sig.initial
            for tk, vk in events[:ei]:
                total += (vk - prev) * e(t - tk)
                prev = vk
            assert pruned.eval(t) == pytest.approx(total, abs=1e-12)
        assert len(pruned._inflight) <= 8


class TestDiscreteFilter:
    def test_constant_stream(self):
        f = FirDiscreteFilter(fir_coeffs_from_easing(smoothstep(1.0), 16.0))
        for _ in range(40):
            assert f.push(5.0) == pytest.approx(5.0, abs=1e-12)

    def test_step_outputs_partial_sums(self):
        c = fir_coeffs_from_easing(smoothstep(1.0), 8.0)
        f = FirDiscreteFilter(c)
        f.push(0.0)  # cold start at 0
        outs = [f.push(1.0) for _ in range(len(c.taps) + 2)]
        partial = np.cumsum(c.taps)
        for k in range(len(c.taps)):
            assert outs[k] == pytest.approx(partial[k], abs=1e-12)
        assert outs[-1] == pytest.approx(1.0, abs=1e-12)

    def test_hand_convolution(self):
        f = FirDiscreteFilter(FirCoefficients(4.0, [0.25] * 4))
        f.push(0.0)  # cold start fills history with 0
        outs = [f.push(x) for x in (0.0, 1.0, 1.0)]
        assert outs == pytest.approx([0.0, 0.25, 0.5])

    def test_converges_to_continuous_with_rate(self):
        e = smoothstep(1.0)
        sig = step_from_events(0.0, [(0.2, 1.0), (0.55, -0.5), (1.4, 2.0)])
        errors = []
        for rate in (60.0, 240.0, 960.0):
            f = FirDiscreteFilter(fir_coeffs_from_easing(e, rate))
            n = int(3.0 * rate)
            worst = 0.0
            for k in range(n):
                t = k / rate
                y = f.push(sig(t))
                # midpoint taps make partial sums track s((k+1)T): the
                # discrete output is aligned one sample ahead
                worst = max(worst, abs(y - fir_response(sig, e, (k + 1) / rate)))
            errors.append(worst)
        assert errors[0] > errors[1] > errors[2]
        assert errors[2] <= 1e-3


class TestConvolveOracle:
    def test_constant(self):
        sig = step_from_events(3.0, [])
        out = convolve_oracle(sig, smoothstep(1.0), [0.5, 2.0, 7.5])
        assert out == pytest.approx([3.0, 3.0, 3.0], abs=1e-8)

    def test_single_step_gives_easing(self):
        e = smoothstep(1.0)
        sig = step_from_events(0.0, [(0.0, 1.0)])
        grid = np.linspace(0.05, 1.5, 20)
        out = convolve_oracle(sig, e, grid)
        for y, t in zip(out, grid):
            assert y == pytest.approx(e(t), abs=1e-8)

    def test_matches_animator_on_double_step(self):
        e = smoothstep(1.0)
        sig = step_from_events(0.0, [(0.0, 1.0), (0.5, 0.0)])
        grid = np.linspace(0.1, 2.0, 25)
        out = convolve_oracle(sig, e, grid)
        for y, t in zip(out, grid):
            assert y == pytest.approx(fir_response(sig, e, t), abs=1e-7)
