import {
  ClientMessage,
  EngineKind,
  Frame,
  engineConfig,
  isErrorReply,
  parseServerMessage,
} from "./protocol.js";
import {
  ChannelSpec,
  DemoName,
  HISTOGRAM_COUNTS,
  PERMUTATION_OBJECTS,
  QUARTER_DATA,
  demoChannels,
  demoDuration,
} from "./demos.js";
import type { Transport } from "./transport.js";

export type SessionStatus = "connecting" | "live" | "disconnected";

export type InputEvent =
  | { kind: "slider"; quarter: number }
  | { kind: "brush"; lo: number; hi: number }
  | { kind: "zoom"; value: number }
  | { kind: "shuffle"; slots: number[] }
  | { kind: "revision"; rev: number }
  | { kind: "engine"; engine: EngineKind };

export interface Renderer {
  /** Must display exactly the frame's values — no interpolation. */
  render(frame: Frame): void;
  showStatus(status: SessionStatus): void;
  showError(message: string): void;
}

/** Mirror of one server session.  All smoothing happens server-side;
 * this class only forwards inputs and repaints received frames. */
export class SessionView {
  readonly demo: DemoName;
  engine: EngineKind;
  status: SessionStatus = "connecting";
  lastFrame: Frame | null = null;
  readonly channels: ChannelSpec[];
  errors: string[] = [];

  constructor(
    private transport: Transport,
    private renderer: Renderer,
    demo: DemoName,
    engine: EngineKind = "fir",
  ) {
    this.demo = demo;
    this.engine = engine;
    this.channels = demoChannels(demo);
    transport.onMessage((text) => this.handleMessage(text));
    transport.onClose(() => {
      // frozen last frame stays on screen; banner asks to reconnect
      this.status = "disconnected";
      this.renderer.showStatus(this.status);
    });
    this.createChannels();
    this.renderer.showStatus(this.status);
  }

  private createChannels(): void {
    const duration = demoDuration(this.demo);
    for (const ch of this.channels) {
      this.send({
        op: "create",
        channel: ch.name,
        x0: this.currentValue(ch),
        engine: engineConfig(this.engine, duration),
      });
    }
  }

  /** Latest known output for a channel, for engine-toggle handoff. */
  private currentValue(ch: ChannelSpec): number {
    const out = this.lastFrame?.channels[ch.name]?.output;
    return typeof out === "number" ? out : ch.x0;
  }

  private send(msg: ClientMessage): void {
    this.transport.send(msg);
  }

  private handleMessage(text: string): void {
    const msg = parseServerMessage(text);
    if (isErrorReply(msg)) {
      this.errors.push(msg.error);
      this.renderer.showError(msg.error);
      return;
    }
    if (this.status === "connecting") {
      this.status = "live";
      this.renderer.showStatus(this.status);
    }
    this.lastFrame = msg;
    this.renderer.render(msg);
  }

  /** Forward an input immediately — no debouncing, interruptions are
   * the point. */
  dispatch(event: InputEvent): void {
    switch (event.kind) {
      case "slider": {
        for (const dept of Object.keys(QUARTER_DATA)) {
          this.send({
            op: "retarget",
            channel: `bar.${dept}`,
            value: QUARTER_DATA[dept][event.quarter],
          });
        }
        break;
      }
      case "brush": {
        // bins outside the brush drop to zero, inside keep their count
        HISTOGRAM_COUNTS.forEach((count, i) => {
          const inside = i >= event.lo && i <= event.hi;
          this.send({
            op: "retarget",
            channel: `bin.${i}`,
            value: inside ? count : 0,
          });
        });
        break;
      }
      case "zoom":
        this.send({ op: "zoom", value: event.value });
        break;
      case "shuffle": {
        PERMUTATION_OBJECTS.forEach((obj, i) => {
          this.send({
            op: "retarget",
            channel: `slot.${obj}`,
            value: event.slots[i],
          });
        });
        break;
      }
      case "revision":
        this.send({ op: "retarget", channel: "rev", value: event.rev });
        break;
      case "engine":
        // recreate every channel with the new engine, starting from the
        // last rendered value so the handoff doesn't jump
        this.engine = event.engine;
        this.createChannels();
        break;
    }
  }

  close(): void {
    this.send({ op: "close" });
    this.transport.close();
  }
}
