"""Scenario runner and analytical experiments.

Scenarios are declarative: named step-signal channels, an engine per
channel, a sample rate and a time span.  Running one produces a trace
with target, output and velocity columns per channel, suitable for CSV
export.  The experiments reproduce the analytical behaviors that motivate
the FIR/IIR engines: the constant-output interruption limit, velocity
jumps under interruption, emergent averaging of a wiggled query, and the
overshoot pathology of mixing easing durations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .baseline import (
    SimpleAnimator,
    SplineAnimator,
    spline_discrete_matrices,
    spline_limit_step_response,
    SPLINE_LIMIT_A,
    SPLINE_LIMIT_B,
)
from .easing import make_easing, smoothstep
from .fir import FirStepAnimator
from .iir import (
    IirAnimator,
    SpringParams,
    discretize,
    make_one_pole_system,
    make_spring_system,
)
from .signal_core import StepSignal, step_from_events

__all__ = [
    "Scenario",
    "Trace",
    "easing_from_config",
    "system_from_config",
    "build_engine",
    "run_scenario",
    "experiment_interruption_limit",
    "experiment_velocity_jumps",
    "experiment_emergent_average",
    "experiment_varying_easing_overshoot",
    "experiment_spline_limit",
]


def easing_from_config(cfg):
    cfg = dict(cfg or {"kind": "smoothstep", "d": 1.0})
    kind = cfg.pop("kind", "smoothstep")
    d = cfg.pop("d", 1.0)
    if kind == "arc":
        from .arc import make_arc_easing

        return make_arc_easing(cfg.get("aspect", 0.5), d=d)
    return make_easing(kind, d, **cfg)


def system_from_config(cfg):
    cfg = dict(cfg or {"kind": "spring"})
    kind = cfg.pop("kind", "spring")
    if kind == "spring":
        return make_spring_system(SpringParams(**cfg))
    if kind == "one_pole":
        return make_one_pole_system(cfg.get("a", 4.0))
    raise ValueError(f"unknown system kind {kind!r}")


class _DiscreteChannel:
    """Adapts a sample-pushed engine to the retarget/eval interface.

    Retargets are quantized to the next sample boundary (timing error is
    at most one sample period); velocity is by first differences.
    """

    def __init__(self, animator, x0, rate):
        self.animator = animator
        self.rate = rate
        self.target = float(x0)
        self._pending = []  # (sample index, value)
        self._outputs = []

    def retarget(self, t, value):
        k = int(np.ceil(t * self.rate - 1e-9))
        self._pending.append((k, float(value)))

    def advance_to(self, k):
        while len(self._outputs) <= k:
            n = len(self._outputs)
            for kp, v in self._pending:
                if kp <= n:
                    self.target = v
            self._pending = [(kp, v) for kp, v in self._pending if kp > n]
            self._outputs.append(self.animator.push(self.target))

    def output(self, k):
        self.advance_to(k)
        return self._outputs[k]

    def velocity(self, k):
        self.advance_to(k)
        if k == 0:
            return 0.0
        return (self._outputs[k] - self._outputs[k - 1]) * self.rate


def build_engine(x0, cfg, rate):
    """Instantiate an engine from a config dict {kind, ...}."""
    cfg = dict(cfg or {"kind": "fir"})
    kind = cfg.get("kind", "fir")
    if kind == "simple":
        return SimpleAnimator(x0, easing_from_config(cfg.get("easing")))
    if kind == "spline":
        return SplineAnimator(x0, cfg.get("v0", 0.0), cfg.get("d", 1.0))
    if kind == "fir":
        return FirStepAnimator(x0, easing_from_config(cfg.get("easing")))
    if kind == "iir":
        system = system_from_config(cfg.get("system"))
        cascade = discretize(system, rate, cfg.get("method", "bilinear"))
        anim = IirAnimator(cascade)
        anim.push(x0)  # start settled at the initial value
        return _DiscreteChannel(anim, x0, rate)
    raise ValueError(f"unknown engine kind {kind!r}")


@dataclass
class Scenario:
    span: float
    rate: float
    channels: dict  # name -> {"x0":..., "events":[[t, v],...], "engine": {...}}
    app: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.rate < 10:
            raise ValueError("scenario rate must be >= 10")

    @classmethod
    def from_json(cls, text):
        doc = json.loads(text)
        return cls(
            span=doc["span"],
            rate=doc["rate"],
            channels=doc["channels"],
            app=doc.get("app", {}),
        )

    def to_json(self):
        return json.dumps(
            {"span": self.span, "rate": self.rate, "channels": self.channels,
             **({"app": self.app} if self.app else {})},
            indent=2,
        )


@dataclass
class Trace:
    times: np.ndarray
    columns: dict  # "<ch>.target" etc -> np.ndarray

    def to_csv(self):
        names = list(self.columns)
        lines = ["t," + ",".join(names)]
        fmt = lambda x: format(float(x), ".17g")
        cols = [self.columns[n] for n in names]
        for i, t in enumerate(self.times):
            lines.append(",".join([fmt(t)] + [fmt(c[i]) for c in cols]))
        return "\n".join(lines) + "\n"


def run_scenario(s: Scenario) -> Trace:
    n = int(round(s.span * s.rate)) + 1
    times = np.arange(n) / s.rate
    columns = {}
    for name, spec in s.channels.items():
        try:
            sig = step_from_events(spec.get("x0", 0.0), spec.get("events", []))
            engine = build_engine(sig.initial, spec.get("engine"), s.rate)
        except (ValueError, KeyError) as exc:
            raise ValueError(f"channel {name!r}: {exc}") from exc
        target = np.array([sig(t) for t in times])
        output = np.empty(n)
        velocity = np.empty(n)
        if isinstance(engine, _DiscreteChannel):
            for t, v in sig.events:
                engine.retarget(t, v)
            for k in range(n):
                output[k] = engine.output(k)
                velocity[k] = engine.velocity(k)
        else:
            events = list(sig.events)
            ei = 0
            for k, t in enumerate(times):
                while ei < len(events) and events[ei][0] <= t:
                    engine.retarget(events[ei][0], events[ei][1])
                    ei += 1
                output[k] = engine.eval(t)
                velocity[k] = engine.velocity(t)
        columns[f"{name}.target"] = target
        columns[f"{name}.output"] = output
        columns[f"{name}.velocity"] = velocity
    return Trace(times, columns)


def experiment_interruption_limit(n_values, easing=None):
    """Sup-deviation of the simple engine under ever-faster interruption.

    Runs the sampled recurrence y[i+1] = y[i] + s(T)(x[i] - y[i]) with the
    target toggling 1/0 every sample over one unit of time and reports
    sup |y[i] - y[0]| per n.  With a vanishing-start-derivative easing the
    deviation collapses as n grows; with a linear easing it does not.
    """
    easing = easing or smoothstep(1.0)
    warning = None
    if abs(easing.derivative(1e-9 * easing.d)) > 1e-3:
        warning = "easing derivative does not vanish at 0; limit claim does not apply"
    results = {}
    for n in n_values:
        T = 1.0 / n
        sT = easing(T)
        y = 0.0
        dev = 0.0
        for i in range(n):
            x = 1.0 if i % 2 == 0 else 0.0
            y = y + sT * (x - y)
            dev = max(dev, abs(y))
        results[n] = dev
    return {"deviation": results, "warning": warning}


_DOUBLE_STEP = ((0.0, 1.0), (0.5, 0.0))


def experiment_velocity_jumps(easing=None, events=_DOUBLE_STEP, x0=0.0):
    """Max velocity discontinuity at any retarget instant, per engine."""
    easing = easing or smoothstep(1.0)
    engines = {
        "simple": SimpleAnimator(x0, easing),
        "spline": SplineAnimator(x0, 0.0, easing.d),
        "fir": FirStepAnimator(x0, easing),
    }
    jumps = {name: 0.0 for name in engines}
    for name, eng in engines.items():
        for t, v in events:
            before = eng.velocity(t)
            eng.retarget(t, v)
            after = eng.velocity(t)
            jumps[name] = max(jumps[name], abs(after - before))
    return jumps


def experiment_emergent_average(period, easing=None, duty=0.5, rate=240.0):
    """Drive a 0/1 square wave through a FIR engine for 20 durations and
    report mean and peak-to-peak of the last 5 durations of output."""
    easing = easing or smoothstep(1.0)
    d = easing.d
    span = 20.0 * d
    events = []
    t = 0.0
    high = True
    while t < span:
        events.append((t, 1.0 if high else 0.0))
        t += period * (duty if high else (1.0 - duty))
        high = not high
    anim = FirStepAnimator(0.0, easing)
    n = int(round(span * rate)) + 1
    times = np.arange(n) / rate
    ei = 0
    out = np.empty(n)
    for k, tk in enumerate(times):
        while ei < len(events) and events[ei][0] <= tk:
            anim.retarget(*events[ei])
            ei += 1
        out[k] = anim.eval(tk)
    steady = out[times >= span - 5.0 * d]
    return {"mean": float(steady.mean()), "peak_to_peak": float(np.ptp(steady))}


def experiment_varying_easing_overshoot(d_long=2.0, d_short=0.2, t_interrupt=0.1, rate=1000.0):
    """Naive additive mixing of easings with different durations.

    A 0->1 transition with a long easing is interrupted by a 1->0
    transition with a short easing; the short one completes while the
    long one has barely moved, so the sum plunges far below the range.
    The equal-duration (LTI) control stays in range.
    """
    long_e = smoothstep(d_long)
    short_e = smoothstep(d_short)
    span = d_long + t_interrupt
    times = np.arange(int(round(span * rate)) + 1) / rate
    mixed = np.array(
        [long_e(t) * 1.0 + short_e(t - t_interrupt) * -1.0 for t in times]
    )
    lti = np.array(
        [long_e(t) * 1.0 + long_e(t - t_interrupt) * -1.0 for t in times]
    )

    def excursion(y):
        return float(max(np.max(y - 1.0), np.max(-y), 0.0))

    return {
        "times": times,
        "mixed": mixed,
        "equal_duration": lti,
        "mixed_excursion": excursion(mixed),
        "equal_duration_excursion": excursion(lti),
    }


def experiment_spline_limit(span=20.0, rate=1000.0, periods=(1e-3, 1e-4, 1e-5)):
    """Convergence of the sampled spline matrices to the continuous limit,
    plus the limit system's step-response peak and settling value."""
    conv = {}
    for T in periods:
        A, B = spline_discrete_matrices(T)
        conv[T] = {
            "A_error": float(np.abs((A - np.eye(2)) / T - SPLINE_LIMIT_A).max()),
            "B_error": float(np.abs(B / T - SPLINE_LIMIT_B).max()),
        }
    resp = spline_limit_step_response(span, rate)
    return {
        "convergence": conv,
        "peak": float(resp.samples.max()),
        "settle": float(resp.samples[-1]),
        "response": resp,
    }
