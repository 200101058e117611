"""Continuous state-space systems and their discrete biquad realizations.

Builders produce classic transition-grade systems (spring-mass-damper,
one-pole low-pass).  Continuous systems are simulated with fixed-step RK4;
for production use they are discretized into a cascade of second-order
sections (biquads) run in Transposed Direct Form II.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy import signal as sig

from .signal_core import SampledSignal, StepSignal

__all__ = [
    "StateSpaceSystem",
    "SpringParams",
    "make_spring_system",
    "make_one_pole_system",
    "simulate",
    "step_response",
    "Biquad",
    "BiquadCascade",
    "discretize",
    "IirAnimator",
    "iir_animator",
]

MAX_ORDER = 8


@dataclass
class StateSpaceSystem:
    """dx/dt = Ax + Bu, y = Cx + Du (single input, single output here)."""

    A: np.ndarray
    B: np.ndarray
    C: np.ndarray
    D: np.ndarray

    def __post_init__(self):
        self.A = np.atleast_2d(np.asarray(self.A, dtype=float))
        n = self.A.shape[0]
        if self.A.shape != (n, n):
            raise ValueError("A must be square")
        if n > MAX_ORDER:
            raise ValueError(f"system order {n} exceeds {MAX_ORDER}")
        self.B = np.asarray(self.B, dtype=float).reshape(n, 1)
        self.C = np.asarray(self.C, dtype=float).reshape(1, n)
        self.D = np.atleast_2d(np.asarray(self.D, dtype=float)).reshape(1, 1)

    @property
    def order(self):
        return self.A.shape[0]

    @property
    def eigenvalues(self):
        return np.linalg.eigvals(self.A)

    def require_stable(self):
        eig = self.eigenvalues
        if np.any(eig.real >= 0):
            raise ValueError(f"system has unstable pole(s): {eig[eig.real >= 0]}")


@dataclass(frozen=True)
class SpringParams:
    mass: float = 1.0
    stiffness: float = 1.0
    damping: float = 2.0

    def __post_init__(self):
        if self.mass <= 0 or self.stiffness <= 0:
            raise ValueError("mass and stiffness must be positive")
        if self.damping < 0:
            raise ValueError("damping must be non-negative")


def make_spring_system(p: SpringParams) -> StateSpaceSystem:
    """m x'' = k(u - x) - damping * x', state (x, q=x'), output x."""
    m, k, c = p.mass, p.stiffness, p.damping
    A = np.array([[0.0, 1.0], [-k / m, -c / m]])
    B = np.array([0.0, k / m])
    return StateSpaceSystem(A, B, [1.0, 0.0], 0.0)


def make_one_pole_system(a: float) -> StateSpaceSystem:
    """dx/dt = a(u - x): step response 1 - exp(-a t)."""
    if a <= 0:
        raise ValueError("pole rate a must be positive")
    return StateSpaceSystem([[-a]], [a], [1.0], 0.0)


def simulate(system: StateSpaceSystem, input_signal: StepSignal, span, rate) -> SampledSignal:
    """Fixed-step RK4 from rest over [0, span]; the input is held constant
    within each step (step signals are piecewise constant anyway)."""
    eig_mag = np.abs(system.eigenvalues).max()
    min_rate = 10.0 * eig_mag / (2.0 * np.pi)
    if rate < min_rate:
        raise ValueError(
            f"rate {rate} too low: largest eigenvalue magnitude {eig_mag:.4g} "
            f"requires rate >= {min_rate:.4g}"
        )
    h = 1.0 / rate
    n = int(round(span * rate)) + 1
    A, B, C, D = system.A, system.B[:, 0], system.C[0], system.D[0, 0]
    x = np.zeros(system.order)
    out = np.empty(n)
    out[0] = C @ x + D * input_signal(0.0)
    for i in range(1, n):
        t0 = (i - 1) * h
        u = input_signal(t0)
        f = lambda xv: A @ xv + B * u
        k1 = f(x)
        k2 = f(x + 0.5 * h * k1)
        k3 = f(x + 0.5 * h * k2)
        k4 = f(x + h * k3)
        x = x + (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
        out[i] = C @ x + D * input_signal(i * h)
    return SampledSignal(0.0, rate, out)


def step_response(system: StateSpaceSystem, span=10.0, rate=1000.0) -> SampledSignal:
    """Response to a unit step at t=0 from rest."""
    return simulate(system, StepSignal(0.0, ((0.0, 1.0),)), span, rate)


class Biquad:
    """Second-order section run in Transposed Direct Form II.

        y  = b0*x + z1
        z1 = b1*x - a1*y + z2
        z2 = b2*x - a2*y
    """

    def __init__(self, b0, b1, b2, a1, a2):
        self.b0, self.b1, self.b2 = float(b0), float(b1), float(b2)
        self.a1, self.a2 = float(a1), float(a2)
        roots = np.roots([1.0, self.a1, self.a2])
        if np.any(np.abs(roots) >= 1.0):
            raise ValueError(f"unstable biquad poles {roots}")
        self.z1 = 0.0
        self.z2 = 0.0

    @property
    def dc_gain(self):
        return (self.b0 + self.b1 + self.b2) / (1.0 + self.a1 + self.a2)

    def push(self, x):
        y = self.b0 * x + self.z1
        self.z1 = self.b1 * x - self.a1 * y + self.z2
        self.z2 = self.b2 * x - self.a2 * y
        return y

    def reset(self):
        self.z1 = 0.0
        self.z2 = 0.0

    def seed_dc(self, x):
        """Set the delay cells to the steady state for constant input x."""
        self.z2 = (self.b2 - self.a2 * self.dc_gain) * x
        self.z1 = (self.b1 - self.a1 * self.dc_gain) * x + self.z2


@dataclass
class BiquadCascade:
    stages: list = field(default_factory=list)

    @property
    def dc_gain(self):
        g = 1.0
        for st in self.stages:
            g *= st.dc_gain
        return g

    def push(self, x):
        for st in self.stages:
            x = st.push(x)
        return x

    def reset(self):
        for st in self.stages:
            st.reset()

    def impulse_response(self, n):
        self.reset()
        out = [self.push(1.0)]
        out.extend(self.push(0.0) for _ in range(n - 1))
        self.reset()
        return np.array(out)


def _pair_poles(poles):
    """Group complex-conjugate pairs together, then pair up real poles;
    a leftover real pole becomes a first-order (degenerate) section."""
    poles = sorted(poles, key=lambda p: (p.real, abs(p.imag)))
    complex_p = [p for p in poles if abs(p.imag) > 1e-12 * max(1.0, abs(p))]
    real_p = [p for p in poles if abs(p.imag) <= 1e-12 * max(1.0, abs(p))]
    groups = []
    used = set()
    for i, p in enumerate(complex_p):
        if i in used:
            continue
        for j in range(i + 1, len(complex_p)):
            if j not in used and abs(complex_p[j] - p.conjugate()) < 1e-9 * max(1.0, abs(p)):
                groups.append([p, complex_p[j]])
                used.update((i, j))
                break
        else:
            raise ValueError(f"complex pole {p} has no conjugate partner")
    while len(real_p) >= 2:
        groups.append([real_p.pop(), real_p.pop()])
    if real_p:
        groups.append([real_p.pop()])
    return groups


def discretize(system: StateSpaceSystem, rate, method="bilinear") -> BiquadCascade:
    """Split a stable system into second-order sections and discretize each.

    Methods: 'bilinear' (frequency-warping substitution, preserves DC) or
    'impulse_invariant' (samples the impulse response; DC gain is then
    renormalized to 1, since transitions require affine filters).
    """
    if rate <= 0:
        raise ValueError("rate must be positive")
    if method not in ("bilinear", "impulse_invariant"):
        raise ValueError(f"unknown discretization method {method!r}")
    system.require_stable()
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", sig.BadCoefficients)
        zeros, poles, gain = sig.ss2zpk(system.A, system.B, system.C, system.D)
    zeros = [z for z in zeros if np.isfinite(z)]
    groups = _pair_poles(poles)
    zeros = list(zeros)
    stages = []
    for gi, group in enumerate(groups):
        # distribute zeros two per section, in order; our builders have none
        zs = [zeros.pop(0) for _ in range(min(2, len(zeros)))]
        num = np.real(np.poly(zs)) if zs else np.array([1.0])
        den = np.real(np.poly(group))
        if gi == 0:
            num = num * gain
        if method == "bilinear":
            bz, az = sig.bilinear(num, den, fs=rate)
        else:
            bz, az, _ = sig.cont2discrete((num, den), 1.0 / rate, method="impulse")
            bz = np.atleast_1d(np.squeeze(bz))
        bz = np.atleast_1d(bz) / az[0]
        az = np.asarray(az) / az[0]
        b = np.zeros(3)
        a = np.zeros(3)
        b[: len(bz)] = bz
        a[: len(az)] = az
        # renormalize this section's DC gain to exactly 1
        g = b.sum() / a.sum()
        if abs(g) < 1e-300:
            raise ValueError("section has zero DC gain; cannot normalize")
        b = b / g
        stages.append(Biquad(b[0], b[1], b[2], a[1], a[2]))
    return BiquadCascade(stages)


class IirAnimator:
    """Discrete animator over a biquad cascade.

    The first push seeds every stage's delay cells with its DC fixed point,
    so the animator starts at rest at the initial value instead of at zero.
    """

    def __init__(self, cascade: BiquadCascade):
        if abs(cascade.dc_gain - 1.0) > 1e-8:
            raise ValueError("cascade DC gain must be 1 for transitions")
        self.cascade = cascade
        self._started = False

    def push(self, target):
        if not self._started:
            for st in self.cascade.stages:
                st.seed_dc(float(target))
            self._started = True
        return self.cascade.push(float(target))

    def reset(self):
        self.cascade.reset()
        self._started = False


def iir_animator(cascade: BiquadCascade) -> IirAnimator:
    return IirAnimator(cascade)
