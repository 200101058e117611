import { DomBarRenderer } from "./render.js";
import { SessionView } from "./session.js";
import { WebSocketTransport } from "./transport.js";
import {
  DemoName,
  ENGINE_KINDS,
  N_QUARTERS,
  PERMUTATION_OBJECTS,
  TEXTDOC_REVISIONS,
} from "./demos.js";
import type { EngineKind } from "./protocol.js";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

export function connectAndSubscribe(url: string, demo: DemoName): SessionView {
  const renderer = new DomBarRenderer(el("chart"), el("status"));
  const engine = el<HTMLSelectElement>("engine").value as EngineKind;
  return new SessionView(new WebSocketTransport(url), renderer, demo, engine);
}

export function start(): void {
  const url = `ws://${location.hostname}:8765/`;
  let demo = (new URLSearchParams(location.search).get("demo") ??
    "bars") as DemoName;
  let view = connectAndSubscribe(url, demo);

  const engineSelect = el<HTMLSelectElement>("engine");
  engineSelect.innerHTML = ENGINE_KINDS.map(
    (k) => `<option value="${k}"${k === view.engine ? " selected" : ""}>${k}</option>`,
  ).join("");
  engineSelect.onchange = () =>
    view.dispatch({ kind: "engine", engine: engineSelect.value as EngineKind });

  const slider = el<HTMLInputElement>("slider");
  slider.max = String(N_QUARTERS - 1);
  slider.oninput = () => {
    // no debouncing: every input event goes straight to the server
    if (demo === "bars") {
      view.dispatch({ kind: "slider", quarter: Number(slider.value) });
    } else if (demo === "textdoc") {
      view.dispatch({
        kind: "revision",
        rev: Math.round(
          (Number(slider.value) / (N_QUARTERS - 1)) * TEXTDOC_REVISIONS,
        ),
      });
    }
  };

  el("chart").onwheel = (ev) => {
    if (demo !== "histogram") return;
    ev.preventDefault();
    const zoom = (view.lastFrame?.zoom ?? 1) * (ev.deltaY < 0 ? 1.1 : 0.9);
    view.dispatch({ kind: "zoom", value: zoom });
  };

  el("shuffle").onclick = () => {
    const slots = PERMUTATION_OBJECTS.map((_, i) => i);
    for (let i = slots.length - 1; i > 0; i--) {
      const j = Math.floor(Math.random() * (i + 1));
      [slots[i], slots[j]] = [slots[j], slots[i]];
    }
    view.dispatch({ kind: "shuffle", slots });
  };

  for (const name of ["bars", "histogram", "permutation", "textdoc"]) {
    el(`demo-${name}`).onclick = () => {
      view.close();
      demo = name as DemoName;
      el("chart").innerHTML = "";
      view = connectAndSubscribe(url, demo);
    };
  }
}

if (typeof document !== "undefined" && document.getElementById("chart")) {
  start();
}
