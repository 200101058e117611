"""Compare the three scalar transition engines on an interrupted move.

A value heads from 0 to 1, then gets retargeted to 0 halfway through.
The simple engine restarts its easing from the frozen current value, the
spline engine carries velocity through the interruption, and the FIR
engine superposes the two moves.  Watch the velocity columns: only the
simple engine jumps.
"""

import numpy as np

from animlab import FirStepAnimator, SimpleAnimator, SplineAnimator, smoothstep


def run(engine, events, grid):
    out, vel = [], []
    ei = 0
    for t in grid:
        while ei < len(events) and events[ei][0] <= t:
            engine.retarget(*events[ei])
            ei += 1
        out.append(engine.eval(t))
        vel.append(engine.velocity(t))
    return np.array(out), np.array(vel)


def main():
    e = smoothstep(1.0)
    events = [(0.0, 1.0), (0.5, 0.0)]
    grid = np.linspace(0.0, 2.0, 201)

    engines = {
        "simple": SimpleAnimator(0.0, e),
        "spline": SplineAnimator(0.0, 0.0, 1.0),
        "fir": FirStepAnimator(0.0, e),
    }
    results = {name: run(eng, list(events), grid) for name, eng in engines.items()}

    print("t      " + "".join(f"{n:>10} {n + '_v':>10}" for n in results))
    for i in range(0, len(grid), 20):
        row = f"{grid[i]:5.2f}  "
        for out, vel in results.values():
            row += f"{out[i]:10.4f} {vel[i]:10.4f}"
        print(row)

    for name, (out, vel) in results.items():
        jump = np.abs(np.diff(vel)).max()
        print(f"{name}: largest velocity change between samples = {jump:.3f}")


if __name__ == "__main__":
    main()
