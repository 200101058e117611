"""Constant-speed elliptical-arc easing for permutation animation.

Objects swapping slots travel along the lower half of an ellipse from
(0,0) to (1,0).  Parameterizing the angle linearly in time gives
non-constant speed whenever the aspect ratio differs from 1, so the
trajectory is reparameterized by normalized arc length: the arc length is
an incomplete elliptic integral of the second kind, its normalized form
sigma is inverted numerically, and the inverse is tabulated into a
vector-valued easing that can drive a FIR transition directly.
"""

from __future__ import annotations

import numpy as np
from scipy.integrate import quad
from scipy.interpolate import PchipInterpolator
from scipy.special import ellipeinc

from .easing import Easing

__all__ = [
    "ellipse_point",
    "elliptic_e",
    "arc_length",
    "sigma",
    "sigma_inverse",
    "make_arc_easing",
]


def ellipse_point(aspect, theta):
    """Point on the ellipse through (0,0) at theta=pi and (1,0) at theta=2*pi."""
    return np.array([0.5 * (np.cos(theta) + 1.0), 0.5 * aspect * np.sin(theta)])


def elliptic_e(phi, m):
    """Incomplete elliptic integral of the second kind,
    E(phi | m) = integral_0^phi sqrt(1 - m sin^2) dtheta."""
    if m > 1.0:
        # integrand turns imaginary past the singular angle
        if abs(np.sin(phi)) ** 2 * m > 1.0 + 1e-12:
            raise ValueError(f"E(phi|m) undefined for m={m} at phi={phi}")
        val, _ = quad(
            lambda th: np.sqrt(max(1.0 - m * np.sin(th) ** 2, 0.0)),
            0.0,
            phi,
            epsabs=1e-12,
            limit=200,
        )
        return val
    return float(ellipeinc(phi, m))


def elliptic_e_quadrature(phi, m):
    """Adaptive-quadrature oracle for E, independent of the fast path."""
    val, _ = quad(
        lambda th: np.sqrt(1.0 - m * np.sin(th) ** 2),
        0.0,
        phi,
        epsabs=1e-12,
        limit=500,
    )
    return val


def arc_length(aspect, theta1, theta2):
    """Arc length along the ellipse from theta1 to theta2:
    (aspect/2) * (E(theta2|k^2) - E(theta1|k^2)) with k^2 = 1 - 1/aspect^2."""
    if theta1 > theta2:
        raise ValueError("need theta1 <= theta2")
    if aspect == 1.0:
        return 0.5 * (theta2 - theta1)
    m = 1.0 - 1.0 / aspect**2
    return 0.5 * aspect * (elliptic_e(theta2, m) - elliptic_e(theta1, m))


def sigma(aspect, theta):
    """Portion of the total trajectory length traveled at angle theta."""
    return arc_length(aspect, np.pi, theta) / arc_length(aspect, np.pi, 2 * np.pi)


def sigma_inverse(aspect, t):
    """Invert sigma by bisection on [pi, 2*pi] (sigma is strictly increasing)."""
    if not 0.0 <= t <= 1.0:
        raise ValueError("t must lie in [0, 1]")
    if t == 0.0:
        return np.pi
    if t == 1.0:
        return 2 * np.pi
    total = arc_length(aspect, np.pi, 2 * np.pi)
    lo, hi = np.pi, 2 * np.pi
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if arc_length(aspect, np.pi, mid) / total < t:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def make_arc_easing(aspect, g=None, d=1.0, table_size=1024):
    """Vector-valued easing: position on the ellipse at normalized arc
    length g(t), with the sigma-inverse lookup tabulated once and
    interpolated monotone-cubically.

    `g` is an inner scalar easing controlling progress along the arc; it
    defaults to a four-pole one-pole-cascade step response (fast-in /
    slow-out).  The result runs from (0,0) at t<=0 to (1,0) at t>=d.
    """
    from .easing import one_pole_cascade

    if aspect <= 0.0:
        raise ValueError("aspect must be positive")
    if table_size < 64:
        raise ValueError("table_size must be >= 64")
    if g is None:
        g = one_pole_cascade(d, n=4)
    ts = np.linspace(0.0, 1.0, table_size)
    thetas = np.array([sigma_inverse(aspect, t) for t in ts])
    theta_of = PchipInterpolator(ts, thetas)

    def progress(t):
        # rescale so an inner easing of any duration spans [0, d]
        return float(np.clip(g(t * g.d / d), 0.0, 1.0))

    def value(t):
        return ellipse_point(aspect, float(theta_of(progress(t))))

    e = Easing(d, value, terminal=np.array([1.0, 0.0]), kind=f"arc(aspect={aspect:g})")
    e.aspect = aspect
    e.inner = g
    return e
