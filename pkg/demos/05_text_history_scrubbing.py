"""Animating a text document while scrubbing through its edit history.

A small document goes through four revisions; a revision slider sweeps
forward and the per-character animation state (size, tint, position) is
sampled along the way.  Inserted characters grow in tinted blue, deleted
ones shrink out tinted red, and survivors slide to their new slots.
"""

from animlab import TextDocument, char_anim_tick, step_from_events


def main():
    doc = TextDocument(
        [
            [("insert", 0, "h", "h"), ("insert", 1, "e", "e")],
            [("insert", 2, "l1", "l"), ("insert", 3, "l2", "l"),
             ("insert", 4, "o", "o")],
            [("delete", "l2")],
            [("delete", "o"), ("insert", 3, "p", "p"), ("insert", 4, "x", "!")],
        ]
    )
    for rev in range(doc.n_revisions + 1):
        print(f"rev {rev}: {doc.text(rev)!r}")

    print("\ntotal order (tombstones included):",
          " ".join(r.id for r in doc.total_order()))

    slider = step_from_events(0.0, [(1.0, 1.0), (2.0, 2.0), (3.0, 3.0), (4.0, 4.0)])
    print("\nt     char  size   pos    color (r,g,b)")
    for t in (0.5, 1.2, 2.2, 3.2, 4.2, 5.0):
        for cid in ("h", "o", "p"):
            s = char_anim_tick(doc, cid, slider, t)
            r, g, b = s["color"]
            vis = "" if s["visible"] else "  (hidden)"
            print(f"{t:4.1f}  {cid:>4}  {s['size']:.3f}  {s['position']:5.2f}"
                  f"  ({r:.2f},{g:.2f},{b:.2f}){vis}")
        print()


if __name__ == "__main__":
    main()
