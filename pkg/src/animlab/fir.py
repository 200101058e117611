"""FIR transition engines.

The continuous engine keeps a queue of in-flight transitions: for a step
input with targets x_i at times t_i the output is

    x0 + sum_i (x_i - x_{i-1}) * s(t - t_i)

Entries older than the easing duration contribute their full delta and are
folded into a settled base value, so memory is bounded by the number of
retargets within one duration.  The discrete engine is a plain convolution
over a ring buffer of recent inputs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .signal_core import Animator, StepSignal

__all__ = [
    "FirStepAnimator",
    "fir_step_animator",
    "FirCoefficients",
    "fir_coeffs_from_easing",
    "FirDiscreteFilter",
    "fir_response",
    "convolve_oracle",
]


class FirStepAnimator(Animator):
    """Continuous-time FIR transitions for a step input.

    Deltas are taken against the previous *target* (not the previous
    output); that is what makes the closed-form sum above hold.  Supports
    vector-valued (matrix) easings driven by scalar targets.
    """

    def __init__(self, x0, easing):
        super().__init__()
        self.easing = easing
        self._last_target = float(x0)
        if easing.is_vector:
            self._base = float(x0) * np.asarray(easing.terminal, dtype=float)
        else:
            self._base = float(x0)
        self._inflight = deque()  # (t_i, delta_i), oldest first

    def retarget(self, t, value):
        self._check_retarget(t)
        delta = float(value) - self._last_target
        self._last_target = float(value)
        if delta != 0.0:
            self._inflight.append((t, delta))

    def _prune(self, t):
        while self._inflight and t - self._inflight[0][0] >= self.easing.d:
            _, delta = self._inflight.popleft()
            self._base = self._base + delta * self.easing.terminal

    def eval(self, t):
        self._check_eval(t)
        self._prune(t)
        out = self._base
        for ti, delta in self._inflight:
            out = out + delta * self.easing(t - ti)
        return out

    def velocity(self, t):
        self._check_eval(t)
        self._prune(t)
        v = 0.0 * self.easing.terminal if self.easing.is_vector else 0.0
        for ti, delta in self._inflight:
            v = v + delta * self.easing.derivative(t - ti)
        return v


def fir_step_animator(x0, easing):
    return FirStepAnimator(x0, easing)


def fir_response(sig: StepSignal, easing, t):
    """Closed-form FIR output for a whole step signal at one time."""
    anim = FirStepAnimator(sig.initial, easing)
    for ti, v in sig.events:
        if ti > t:
            break
        anim.retarget(ti, v)
    return anim.eval(t)


@dataclass(frozen=True)
class FirCoefficients:
    """Impulse-invariant tap table: h[k] ~ sdot((k+1/2)/rate)/rate."""

    rate: float
    taps: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "taps", np.asarray(self.taps, dtype=float))
        if abs(self.taps.sum() - 1.0) > 1e-9:
            raise ValueError("FIR taps must sum to 1 (affine filter)")


def fir_coeffs_from_easing(easing, rate) -> FirCoefficients:
    """Impulse-invariant discretization of an easing's derivative.

    Midpoint sampling is second-order accurate and avoids the zero
    endpoint samples of easings with vanishing end derivatives.
    """
    if rate * easing.d < 2:
        raise ValueError(f"rate {rate} too low for duration {easing.d}")
    K = int(np.ceil(easing.d * rate))
    h = np.array(
        [easing.derivative((k + 0.5) / rate) / rate for k in range(K)]
    )
    return FirCoefficients(rate, h / h.sum())


class FirDiscreteFilter:
    """Streaming convolution over a ring buffer of the last K inputs.

    The buffer is pre-filled with the first pushed value so a filter
    starting at rest produces no spurious transient from implicit zeros.
    """

    def __init__(self, coeffs: FirCoefficients):
        self.coeffs = coeffs
        self._buf = None  # newest first

    def push(self, target):
        K = len(self.coeffs.taps)
        if self._buf is None:
            self._buf = deque([float(target)] * K, maxlen=K)
        else:
            self._buf.appendleft(float(target))
        return float(np.dot(self.coeffs.taps, self._buf))

    def reset(self):
        self._buf = None


def convolve_oracle(sig: StepSignal, easing, grid):
    """Independent check: numerically integrate (x * sdot)(t) by adaptive
    quadrature over the easing's support, splitting at step events."""
    d = easing.d
    out = []
    for t in grid:
        lo, hi = t - d, t
        points = sorted(
            {lo, hi} | {ti for ti, _ in sig.events if lo < ti < hi}
        )
        total = 0.0
        for a, b in zip(points[:-1], points[1:]):
            val, _ = quad(
                lambda tau: easing.derivative(t - tau) * sig(tau),
                a,
                b,
                epsabs=1e-10,
                limit=200,
            )
            total += val
        out.append(total)
    return out
