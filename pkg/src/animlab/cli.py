"""Command-line entry points.

    animlab simulate --scenario <file> --out <file.csv>
    animlab respond --engine <simple|spline|fir|iir> [--easing k --duration s] --rate hz --kind <step|impulse>
    animlab coeffs --easing <kind> --duration <s> --rate <hz>
    animlab experiment <interruption-limit|velocity-jumps|emergent-average|varying-easing|spline-limit> [params]
    animlab serve --port <p> --rate <hz>
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import harness
from .easing import make_easing
from .fir import FirStepAnimator, fir_coeffs_from_easing


def _cmd_simulate(args):
    with open(args.scenario) as fh:
        scenario = harness.Scenario.from_json(fh.read())
    trace = harness.run_scenario(scenario)
    with open(args.out, "w", newline="\n") as fh:
        fh.write(trace.to_csv())
    print(f"wrote {len(trace.times)} rows to {args.out}")


def _cmd_respond(args):
    span = args.span if args.span is not None else 3.0 * args.duration
    engine_cfg = {"kind": args.engine}
    if args.engine in ("simple", "fir"):
        engine_cfg["easing"] = {"kind": args.easing, "d": args.duration}
    elif args.engine == "spline":
        engine_cfg["d"] = args.duration
    else:
        engine_cfg["system"] = {"kind": "spring"}
    if args.kind == "step":
        events = [[0.0, 1.0]]
    else:
        # discrete impulse: up at t=0, back down one sample later
        events = [[0.0, 1.0], [1.0 / args.rate, 0.0]]
    scenario = harness.Scenario(
        span=span,
        rate=args.rate,
        channels={"y": {"x0": 0.0, "events": events, "engine": engine_cfg}},
    )
    sys.stdout.write(harness.run_scenario(scenario).to_csv())


def _cmd_coeffs(args):
    easing = make_easing(args.easing, args.duration)
    coeffs = fir_coeffs_from_easing(easing, args.rate)
    json.dump(
        {"rate": coeffs.rate, "taps": [float(h) for h in coeffs.taps]},
        sys.stdout,
        indent=2,
    )
    print()


def _cmd_experiment(args):
    name = args.name
    if name == "interruption-limit":
        res = harness.experiment_interruption_limit(args.n or [10, 100, 1000])
        for n, dev in res["deviation"].items():
            print(f"n={n}: sup deviation {dev:.6g}")
        if res["warning"]:
            print(f"warning: {res['warning']}")
    elif name == "velocity-jumps":
        for engine, jump in harness.experiment_velocity_jumps().items():
            print(f"{engine}: max velocity jump {jump:.6g}")
    elif name == "emergent-average":
        res = harness.experiment_emergent_average(args.period)
        print(f"mean {res['mean']:.6g}, peak-to-peak {res['peak_to_peak']:.6g}")
    elif name == "varying-easing":
        res = harness.experiment_varying_easing_overshoot()
        print(f"mixed-duration excursion beyond range: {res['mixed_excursion']:.6g}")
        print(f"equal-duration excursion beyond range: {res['equal_duration_excursion']:.6g}")
    elif name == "spline-limit":
        res = harness.experiment_spline_limit()
        for T, err in res["convergence"].items():
            print(f"T={T:g}: |dA|={err['A_error']:.3g} |dB|={err['B_error']:.3g}")
        print(f"step response peak {res['peak']:.6g}, settles to {res['settle']:.6g}")
    else:
        raise SystemExit(f"unknown experiment {name!r}")


def _cmd_serve(args):
    from .server import serve

    serve(args.port, args.rate)


def main(argv=None):
    parser = argparse.ArgumentParser(prog="animlab")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="run a scenario file to a CSV trace")
    p.add_argument("--scenario", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("respond", help="print a step/impulse response trace")
    p.add_argument("--engine", choices=["simple", "spline", "fir", "iir"], required=True)
    p.add_argument("--easing", default="smoothstep")
    p.add_argument("--duration", type=float, default=1.0)
    p.add_argument("--rate", type=float, default=240.0)
    p.add_argument("--kind", choices=["step", "impulse"], default="step")
    p.add_argument("--span", type=float)
    p.set_defaults(func=_cmd_respond)

    p = sub.add_parser("coeffs", help="print impulse-invariant FIR taps")
    p.add_argument("--easing", default="smoothstep")
    p.add_argument("--duration", type=float, default=1.0)
    p.add_argument("--rate", type=float, required=True)
    p.set_defaults(func=_cmd_coeffs)

    p = sub.add_parser("experiment", help="run an analytical experiment")
    p.add_argument(
        "name",
        choices=[
            "interruption-limit",
            "velocity-jumps",
            "emergent-average",
            "varying-easing",
            "spline-limit",
        ],
    )
    p.add_argument("--n", type=int, nargs="*")
    p.add_argument("--period", type=float, default=0.05)
    p.set_defaults(func=_cmd_experiment)

    p = sub.add_parser("serve", help="run the live session endpoint")
    p.add_argument("--port", type=int, default=8765)
    p.add_argument("--rate", type=float, default=60.0)
    p.set_defaults(func=_cmd_serve)

    args = parser.parse_args(argv)
    args.func(args)


if __name__ == "__main__":
    main()
