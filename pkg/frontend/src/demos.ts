import type { EngineKind } from "./protocol.js";

export type DemoName = "bars" | "histogram" | "permutation" | "textdoc";

export interface ChannelSpec {
  name: string;
  x0: number;
}

/** Quarterly revenue per department for the bar-chart demo: dragging the
 * quarter slider retargets every bar at once. */
export const QUARTER_DATA: Record<string, number[]> = {
  eng: [40, 55, 62, 48, 70, 66, 72, 80, 76, 84],
  sales: [80, 72, 60, 90, 85, 78, 95, 88, 92, 75],
  hr: [20, 22, 25, 24, 28, 26, 30, 29, 31, 27],
  ops: [50, 45, 52, 58, 54, 60, 56, 64, 59, 62],
};

export const N_QUARTERS = 10;

/** Bin counts for the brushed histogram (full-selection baseline). */
export const HISTOGRAM_COUNTS = [12, 30, 55, 80, 74, 48, 25, 9];

export const PERMUTATION_OBJECTS = ["a", "b", "c", "d", "e"];

export const TEXTDOC_REVISIONS = 6;

export function demoChannels(demo: DemoName): ChannelSpec[] {
  switch (demo) {
    case "bars":
      return Object.keys(QUARTER_DATA).map((dept) => ({
        name: `bar.${dept}`,
        x0: QUARTER_DATA[dept][0],
      }));
    case "histogram":
      return HISTOGRAM_COUNTS.map((count, i) => ({
        name: `bin.${i}`,
        x0: count,
      }));
    case "permutation":
      return PERMUTATION_OBJECTS.map((obj, slot) => ({
        name: `slot.${obj}`,
        x0: slot,
      }));
    case "textdoc":
      return [{ name: "rev", x0: 0 }];
  }
}

/** Per-demo response duration: snappy for direct manipulation, slower
 * for the text scrubber so tint pulses are visible. */
export function demoDuration(demo: DemoName): number {
  return demo === "textdoc" ? 0.4 : 0.25;
}

export const ENGINE_KINDS: EngineKind[] = ["simple", "spline", "fir", "iir"];
