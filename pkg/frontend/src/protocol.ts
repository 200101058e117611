/** Wire types for the animlab serve protocol: one JSON object per line
 * (TCP) or per text frame (WebSocket). */

export type EngineKind = "simple" | "spline" | "fir" | "iir";

export interface EasingConfig {
  kind: string;
  d: number;
  [param: string]: unknown;
}

export interface EngineConfig {
  kind: EngineKind;
  easing?: EasingConfig;
  d?: number;
  system?: { kind: string; [param: string]: unknown };
}

export type ClientMessage =
  | { op: "create"; channel: string; x0: number; engine: EngineConfig }
  | { op: "retarget"; channel: string; value: number }
  | { op: "zoom"; value: number }
  | { op: "close" };

export interface ChannelFrame {
  target: number;
  output: number | number[];
}

export interface Frame {
  t: number;
  zoom?: number;
  channels: Record<string, ChannelFrame>;
}

export interface ErrorReply {
  error: string;
}

export type ServerMessage = Frame | ErrorReply;

export function isErrorReply(msg: ServerMessage): msg is ErrorReply {
  return typeof (msg as ErrorReply).error === "string";
}

/** Engine config for a scalar channel with a given response duration. */
export function engineConfig(kind: EngineKind, duration: number): EngineConfig {
  switch (kind) {
    case "simple":
    case "fir":
      return { kind, easing: { kind: "smoothstep", d: duration } };
    case "spline":
      return { kind, d: duration };
    case "iir":
      // a gently damped spring with a settling time near `duration`
      return {
        kind,
        system: {
          kind: "spring",
          stiffness: Math.pow((2 * Math.PI) / duration, 2),
          damping: (2 * 2 * Math.PI) / duration,
        },
      };
  }
}

export function parseServerMessage(text: string): ServerMessage {
  const doc = JSON.parse(text);
  if (typeof doc.error === "string") return doc as ErrorReply;
  if (typeof doc.t !== "number" || typeof doc.channels !== "object") {
    throw new Error(`not a frame: ${text}`);
  }
  return doc as Frame;
}
