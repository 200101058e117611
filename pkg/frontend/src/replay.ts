import type { InputEvent, SessionView } from "./session.js";

export interface ScriptedEvent {
  /** milliseconds from replay start */
  at: number;
  event: InputEvent;
}

/** Drive a session from a recorded event log, for deterministic
 * end-to-end tests.  Resolves once the last event has been dispatched. */
export function replay(
  view: SessionView,
  script: ScriptedEvent[],
): Promise<void> {
  return new Promise((resolve) => {
    const start = Date.now();
    let i = 0;
    const pump = () => {
      const now = Date.now() - start;
      while (i < script.length && script[i].at <= now) {
        view.dispatch(script[i].event);
        i += 1;
      }
      if (i < script.length) {
        setTimeout(pump, Math.max(1, script[i].at - (Date.now() - start)));
      } else {
        resolve();
      }
    };
    pump();
  });
}

/** Stress input: sweep the quarter slider across `n` quarters in
 * `spanMs` milliseconds. */
export function sliderSweep(n: number, spanMs: number): ScriptedEvent[] {
  const out: ScriptedEvent[] = [];
  for (let i = 0; i < n; i++) {
    out.push({ at: (i * spanMs) / n, event: { kind: "slider", quarter: i } });
  }
  return out;
}
