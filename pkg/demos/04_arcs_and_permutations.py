"""Vector-valued arc easings and the permutation scene.

Two objects swap slots; each follows an elliptical arc at constant
speed, so they pass on opposite sides of the row instead of sliding
through each other.
"""

import numpy as np

from animlab import PermutationScene, arc_length, make_arc_easing, step_from_events


def main():
    alpha = 2.0
    print(f"half-ellipse (aspect {alpha}) arc length: "
          f"{arc_length(alpha, np.pi, 2 * np.pi):.5f}")

    e = make_arc_easing(alpha, d=1.0)
    ts = np.linspace(0.0, 1.0, 6)
    print("\nt      x        y")
    for t in ts:
        x, y = e(t)
        print(f"{t:4.2f}  {x:7.4f}  {y:7.4f}")

    scene = PermutationScene(
        {
            "a": step_from_events(0.0, [(0.0, 1.0)]),
            "b": step_from_events(1.0, [(0.0, 0.0)]),
        },
        e,
    )
    print("\nmid-swap separation:")
    for t in (0.25, 0.5, 0.75):
        pa = scene.position("a", t)
        pb = scene.position("b", t)
        print(f"  t={t}: a=({pa[0]:.3f},{pa[1]:+.3f})  b=({pb[0]:.3f},{pb[1]:+.3f})"
              f"  dist={np.linalg.norm(pa - pb):.3f}")


if __name__ == "__main__":
    main()
