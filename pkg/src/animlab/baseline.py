"""Baseline engines: simple transitions and spline transitions.

The simple engine restarts a single easing segment from the current value
at every retarget, which is what causes velocity discontinuities under
interruption.  The spline engine starts a cubic Hermite segment from the
current value AND velocity, so it is C^1 across retargets, at the price of
giving up creative control over the motion shape.

Also houses the continuous-time system the discrete spline recurrence
converges to as the sample period goes to zero, used for settling and
overshoot analysis.
"""

from __future__ import annotations

import numpy as np

from .signal_core import Animator, SampledSignal

__all__ = [
    "hermite",
    "hermite_derivative",
    "SimpleAnimator",
    "SplineAnimator",
    "simple_animator",
    "spline_animator",
    "SPLINE_LIMIT_A",
    "SPLINE_LIMIT_B",
    "spline_discrete_matrices",
    "spline_limit_step_response",
]


def hermite(p0, dp0, p1, dp1, t):
    """Cubic Hermite interpolation on normalized time t in [0, 1]."""
    t = min(max(t, 0.0), 1.0)
    t2 = t * t
    t3 = t2 * t
    return (
        (2 * t3 - 3 * t2 + 1) * p0
        + (t3 - 2 * t2 + t) * dp0
        + (-2 * t3 + 3 * t2) * p1
        + (t3 - t2) * dp1
    )


def hermite_derivative(p0, dp0, p1, dp1, t):
    t = min(max(t, 0.0), 1.0)
    t2 = t * t
    return (
        (6 * t2 - 6 * t) * p0
        + (3 * t2 - 4 * t + 1) * dp0
        + (-6 * t2 + 6 * t) * p1
        + (3 * t2 - 2 * t) * dp1
    )


class SimpleAnimator(Animator):
    """One active segment at a time: y(t) = y0 + s(t - ti) * (target - y0)."""

    def __init__(self, x0, easing):
        super().__init__()
        self.easing = easing
        self._seg_t = -np.inf
        self._seg_start = float(x0)
        self._seg_target = float(x0)

    def retarget(self, t, value):
        self._check_retarget(t)
        # freeze the current output as the new segment's start value
        start = self._eval_at(t)
        self._seg_t = t
        self._seg_start = start
        self._seg_target = float(value)

    def _eval_at(self, t):
        s = self.easing(t - self._seg_t)
        return self._seg_start + s * (self._seg_target - self._seg_start)

    def eval(self, t):
        self._check_eval(t)
        return self._eval_at(t)

    def velocity(self, t):
        """Analytic derivative, so interruption jumps are exact."""
        self._check_eval(t)
        ds = self.easing.derivative(t - self._seg_t)
        return ds * (self._seg_target - self._seg_start)


class SplineAnimator(Animator):
    """Hermite segment from current (value, velocity) to (target, 0) over d."""

    def __init__(self, x0, v0=0.0, d=1.0):
        super().__init__()
        if d <= 0:
            raise ValueError("segment duration must be positive")
        self.d = float(d)
        self._seg_t = -np.inf
        self._p0 = float(x0)
        self._v0 = float(v0)
        self._p1 = float(x0)

    def _tau(self, t):
        return min(max((t - self._seg_t) / self.d, 0.0), 1.0)

    def retarget(self, t, value):
        self._check_retarget(t)
        p, v = self._eval_at(t), self._vel_at(t)
        self._seg_t = t
        self._p0 = p
        self._v0 = v
        self._p1 = float(value)

    def _eval_at(self, t):
        # Hermite tangents are per normalized time, hence the factor d
        return hermite(self._p0, self._v0 * self.d, self._p1, 0.0, self._tau(t))

    def _vel_at(self, t):
        tau = self._tau(t)
        if tau >= 1.0:
            return 0.0
        return hermite_derivative(self._p0, self._v0 * self.d, self._p1, 0.0, tau) / self.d

    def eval(self, t):
        self._check_eval(t)
        return self._eval_at(t)

    def velocity(self, t):
        self._check_eval(t)
        return self._vel_at(t)


def simple_animator(x0, easing):
    return SimpleAnimator(x0, easing)


def spline_animator(x0, v0=0.0, d=1.0):
    return SplineAnimator(x0, v0, d)


# Continuous limit of the discrete spline recurrence, state (y, dy/dt).
SPLINE_LIMIT_A = np.array([[0.0, 1.0], [-6.0, -4.0]])
SPLINE_LIMIT_B = np.array([0.0, 6.0])


def spline_discrete_matrices(T):
    """One-step matrices of the sampled spline recurrence on state (y, dy)."""
    A = np.array(
        [
            [2 * T**3 - 3 * T**2 + 1, T**3 - 2 * T**2 + T],
            [6 * T**2 - 6 * T, 3 * T**2 - 4 * T + 1],
        ]
    )
    B = np.array([-2 * T**3 + 3 * T**2, -6 * T**2 + 6 * T])
    return A, B


def spline_limit_step_response(span=20.0, rate=1000.0):
    """Unit step response of the limit system from rest, via fixed-step RK4."""
    if rate < 100:
        raise ValueError("rate must be >= 100 for integration accuracy")
    h = 1.0 / rate
    n = int(round(span * rate)) + 1
    A, B = SPLINE_LIMIT_A, SPLINE_LIMIT_B
    x = np.zeros(2)
    out = np.empty(n)
    out[0] = 0.0
    f = lambda x: A @ x + B  # u = 1
    for i in range(1, n):
        k1 = f(x)
        k2 = f(x + 0.5 * h * k1)
        k3 = f(x + 0.5 * h * k2)
        k4 = f(x + h * k3)
        x = x + (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
        out[i] = x[0]
    return SampledSignal(0.0, rate, out)
