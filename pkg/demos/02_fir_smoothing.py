"""FIR transitions as convolution, continuous and discrete.

The FIR engine's output is the target signal convolved with the easing
derivative.  This demo shows three views of the same smoothing:

1. the event-driven animator (exact, evaluated anywhere),
2. adaptive-quadrature convolution (slow reference),
3. a streaming discrete filter built from impulse-invariant taps.
"""

import numpy as np

from animlab import (
    FirDiscreteFilter,
    convolve_oracle,
    fir_coeffs_from_easing,
    fir_response,
    smoothstep,
    step_from_events,
)


def main():
    e = smoothstep(0.5)
    sig = step_from_events(0.0, [(0.2, 1.0), (0.45, -0.5), (1.0, 2.0)])

    ts = np.linspace(0.0, 2.0, 9)
    exact = [fir_response(sig, e, t) for t in ts]
    quad = convolve_oracle(sig, e, ts)
    print("t      animator   quadrature  |diff|")
    for t, a, q in zip(ts, exact, quad):
        print(f"{t:5.2f}  {a:9.6f}  {q:10.6f}  {abs(a - q):.2e}")

    rate = 120.0
    coeffs = fir_coeffs_from_easing(e, rate)
    print(f"\n{len(coeffs.taps)} taps at {rate:g} Hz, sum = {coeffs.taps.sum():.12f}")

    filt = FirDiscreteFilter(coeffs)
    worst = 0.0
    for k in range(int(2.0 * rate)):
        y = filt.push(sig(k / rate))
        worst = max(worst, abs(y - fir_response(sig, e, (k + 1) / rate)))
    print(f"streaming filter vs continuous response: max |err| = {worst:.2e}")


if __name__ == "__main__":
    main()
