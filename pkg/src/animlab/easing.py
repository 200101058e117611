"""Easing functions: duration-d curves that are 0 before 0 and 1 after d.

An easing is the step response of the transition filter, so its derivative
is the filter's impulse response.  Three families are provided:

* smoothstep -- the cubic 3u^2 - 2u^3
* bspline(n) -- step response of n ideal box filters of width d/n in series
  (piecewise polynomial of degree n, C^(n-1))
* one_pole_cascade(a, n) -- step response of n cascaded one-pole low-pass
  stages, truncated at d and renormalized so s(d) = 1 (fast-in/slow-out)
"""

from __future__ import annotations

import math

import numpy as np
from scipy.optimize import brentq
from scipy.special import gammainc

__all__ = [
    "Easing",
    "make_easing",
    "smoothstep",
    "bspline",
    "one_pole_cascade",
    "warp_easing",
]


class Easing:
    """Easing curve with duration `d`.

    `value` and `deriv` are closures over raw time in [0, d]; evaluation
    through the public API clamps to the flat regions outside.  `terminal`
    is 1.0 for scalar easings and a fixed vector for matrix-valued ones.
    """

    def __init__(self, d, value, deriv=None, terminal=1.0, kind="custom"):
        if d <= 0:
            raise ValueError("easing duration must be positive")
        self.d = float(d)
        self._value = value
        self._deriv = deriv
        self.terminal = terminal
        self.kind = kind

    @property
    def is_vector(self):
        return not np.isscalar(self.terminal)

    def _zero(self):
        return np.zeros_like(self.terminal) if self.is_vector else 0.0

    def __call__(self, t):
        if t <= 0.0:
            return self._zero()
        if t >= self.d:
            return self.terminal
        return self._value(t)

    def derivative(self, t):
        """d/dt of the easing; zero outside (0, d)."""
        if t <= 0.0 or t >= self.d:
            return self._zero()
        if self._deriv is not None:
            return self._deriv(t)
        h = self.d * 1e-6
        return (self(t + h) - self(t - h)) / (2.0 * h)


def smoothstep(d=1.0):
    """3u^2 - 2u^3: the default C^1 easing with vanishing end derivatives."""

    def value(t):
        u = t / d
        return u * u * (3.0 - 2.0 * u)

    def deriv(t):
        u = t / d
        return 6.0 * u * (1.0 - u) / d

    return Easing(d, value, deriv, kind="smoothstep")


def _irwin_hall_cdf(u, n):
    # CDF of the sum of n iid U(0,1): piecewise degree-n polynomial
    if u <= 0.0:
        return 0.0
    if u >= n:
        return 1.0
    acc = 0.0
    for k in range(int(math.floor(u)) + 1):
        acc += (-1.0) ** k * math.comb(n, k) * (u - k) ** n
    return acc / math.factorial(n)


def _irwin_hall_pdf(u, n):
    if u <= 0.0 or u >= n:
        return 0.0
    acc = 0.0
    for k in range(int(math.floor(u)) + 1):
        acc += (-1.0) ** k * math.comb(n, k) * (u - k) ** (n - 1)
    return acc / math.factorial(n - 1)


def bspline(order=2, d=1.0):
    """Step response of `order` box filters of width d/order in series."""
    n = int(order)
    if n < 1:
        raise ValueError("bspline order must be >= 1")
    scale = n / d  # maps [0, d] to [0, n] in unit-box coordinates

    def value(t):
        return _irwin_hall_cdf(t * scale, n)

    def deriv(t):
        return _irwin_hall_pdf(t * scale, n) * scale

    return Easing(d, value, deriv, kind=f"bspline({n})")


def _cascade_cdf(t, a, n):
    # step response of n cascaded stages dx/dt = a(u - x): Erlang(n, a) CDF
    return gammainc(n, a * t)


def default_cascade_rate(d, n, residual=1e-4):
    """Smallest rate a for which the untruncated step response reaches
    1 - residual at t = d, so truncation at d is explicit and tiny."""
    return brentq(
        lambda a: _cascade_cdf(d, a, n) - (1.0 - residual), 1e-6 / d, 1e4 * n / d
    )


def one_pole_cascade(d=1.0, n=4, a=None):
    """Step response of n cascaded one-pole filters, truncated at d and
    renormalized so s(d) = 1.  If `a` is omitted it is chosen so the raw
    response reaches 1 - 1e-4 at d."""
    n = int(n)
    if n < 1:
        raise ValueError("need at least one pole")
    if a is None:
        a = default_cascade_rate(d, n)
    if a <= 0:
        raise ValueError("pole rate a must be positive")
    norm = _cascade_cdf(d, a, n)

    def value(t):
        return _cascade_cdf(t, a, n) / norm

    lognf = math.lgamma(n)

    def deriv(t):
        return a * math.exp((n - 1) * math.log(a * t) - a * t - lognf) / norm

    e = Easing(d, value, deriv, kind=f"one_pole_cascade(a={a:g}, n={n})")
    e.pole_rate = a
    e.poles = n
    return e


def make_easing(kind, d, **params):
    """Dispatch by kind name: smoothstep | bspline | one_pole_cascade."""
    if kind == "smoothstep":
        return smoothstep(d)
    if kind == "bspline":
        return bspline(params.get("order", params.get("n", 2)), d)
    if kind == "one_pole_cascade":
        return one_pole_cascade(d, n=params.get("n", 4), a=params.get("a"))
    raise ValueError(f"unknown easing kind {kind!r}")


def warp_easing(e, w):
    """Compose a monotone map w (w(0)=0, w(1)=1) with an easing's output.

    Squaring the output, for example, turns a symmetric curve into an
    asymmetric one whose reverse plays back as the original.
    """
    warped = Easing(e.d, lambda t: w(e(t)), terminal=w(e.terminal), kind=f"warp({e.kind})")
    return warped
