import type { Frame } from "./protocol.js";
import type { Renderer, SessionStatus } from "./session.js";

/** DOM bar renderer: bar heights are set from frame values verbatim.
 * The zoom factor comes from the frame too (the server owns it), so
 * even scaling shows only server-pushed numbers. */
export class DomBarRenderer implements Renderer {
  private bars = new Map<string, HTMLElement>();

  constructor(
    private container: HTMLElement,
    private statusEl: HTMLElement,
    private pxPerUnit = 2,
  ) {}

  render(frame: Frame): void {
    const zoom = frame.zoom ?? 1;
    for (const [name, ch] of Object.entries(frame.channels)) {
      let bar = this.bars.get(name);
      if (!bar) {
        bar = document.createElement("div");
        bar.className = "bar";
        bar.dataset.channel = name;
        this.container.appendChild(bar);
        this.bars.set(name, bar);
      }
      const value = typeof ch.output === "number" ? ch.output : ch.output[0];
      bar.style.height = `${value * zoom * this.pxPerUnit}px`;
      bar.dataset.value = String(value);
    }
  }

  showStatus(status: SessionStatus): void {
    this.statusEl.textContent =
      status === "disconnected" ? "disconnected — reload to reconnect" : status;
    this.statusEl.className = `status ${status}`;
  }

  showError(message: string): void {
    this.statusEl.textContent = `server error: ${message}`;
  }
}

/** Test renderer: records exactly what would be displayed. */
export class RecordingRenderer implements Renderer {
  frames: Frame[] = [];
  displayed = new Map<string, number | number[]>();
  statuses: SessionStatus[] = [];
  errors: string[] = [];

  render(frame: Frame): void {
    this.frames.push(frame);
    for (const [name, ch] of Object.entries(frame.channels)) {
      this.displayed.set(name, ch.output);
    }
  }

  showStatus(status: SessionStatus): void {
    this.statuses.push(status);
  }

  showError(message: string): void {
    this.errors.push(message);
  }
}
