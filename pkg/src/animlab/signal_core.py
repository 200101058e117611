"""Time, step-signal and sampled-signal primitives shared by every engine.

Times are plain floats (seconds).  Step signals are right-continuous:
the value changes AT each event time and holds until the next one.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "StepSignal",
    "SampledSignal",
    "Animator",
    "step_from_events",
    "sample",
]


@dataclass(frozen=True)
class StepSignal:
    """Piecewise-constant signal: initial value plus timestamped changes.

    Use :func:`step_from_events` to construct with validation.
    """

    initial: float
    events: tuple = ()  # ((t, value), ...) with strictly increasing t

    def __call__(self, t: float) -> float:
        # right-continuous: value events[i][1] holds on [t_i, t_{i+1})
        times = [ev[0] for ev in self.events]
        i = bisect.bisect_right(times, t)
        if i == 0:
            return self.initial
        return self.events[i - 1][1]

    def value_before(self, t: float) -> float:
        """Value on the interval immediately left of t (left limit)."""
        times = [ev[0] for ev in self.events]
        i = bisect.bisect_left(times, t)
        if i == 0:
            return self.initial
        return self.events[i - 1][1]

    def shifted(self, dt: float) -> "StepSignal":
        return StepSignal(self.initial, tuple((t + dt, v) for t, v in self.events))

    def scaled(self, a: float) -> "StepSignal":
        return StepSignal(a * self.initial, tuple((t, a * v) for t, v in self.events))


def step_from_events(x0, events) -> StepSignal:
    """Build a StepSignal, rejecting non-increasing event times."""
    events = tuple((float(t), v) for t, v in events)
    for i in range(1, len(events)):
        if events[i][0] <= events[i - 1][0]:
            raise ValueError(f"non-increasing time at index {i}")
    return StepSignal(x0, events)


@dataclass(frozen=True)
class SampledSignal:
    """Uniformly sampled signal starting at `start` with `rate` samples/s."""

    start: float
    rate: float
    samples: np.ndarray = field(default_factory=lambda: np.zeros(1))

    def __post_init__(self):
        if self.rate <= 0:
            raise ValueError("rate must be positive")
        object.__setattr__(self, "samples", np.asarray(self.samples, dtype=float))
        if len(self.samples) < 1:
            raise ValueError("need at least one sample")

    @property
    def times(self) -> np.ndarray:
        return self.start + np.arange(len(self.samples)) / self.rate


def sample(f, start: float, rate: float, count: int) -> SampledSignal:
    """Sample f at `count` uniformly spaced times from `start`."""
    if rate <= 0:
        raise ValueError("rate must be positive")
    if count < 1:
        raise ValueError("count must be >= 1")
    ts = start + np.arange(count) / rate
    return SampledSignal(start, rate, np.array([f(t) for t in ts], dtype=float))


class Animator:
    """Base class for stateful smoothers.

    Continuous engines implement retarget(t, value) / eval(t) / velocity(t)
    with non-decreasing times; discrete engines implement push(target).
    Subclasses call _check_retarget / _check_eval to enforce the contract.
    """

    def __init__(self):
        self._last_retarget = -np.inf

    def _check_retarget(self, t: float):
        if t < self._last_retarget:
            raise ValueError(
                f"retarget time {t} precedes previous retarget {self._last_retarget}"
            )
        self._last_retarget = t

    def _check_eval(self, t: float):
        if t < self._last_retarget:
            raise ValueError(
                f"eval time {t} precedes last retarget {self._last_retarget}"
            )

    def retarget(self, t: float, value):
        raise NotImplementedError

    def eval(self, t: float):
        raise NotImplementedError

    def velocity(self, t: float):
        raise NotImplementedError
