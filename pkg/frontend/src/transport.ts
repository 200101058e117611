import type { ClientMessage } from "./protocol.js";

/** One bidirectional message pipe to the server.  Implementations:
 * browser WebSocket (here) and a Node TCP line client (tests). */
export interface Transport {
  send(msg: ClientMessage): void;
  onMessage(cb: (text: string) => void): void;
  onClose(cb: () => void): void;
  close(): void;
}

export class WebSocketTransport implements Transport {
  private ws: WebSocket;
  private messageCb: ((text: string) => void) | null = null;
  private closeCb: (() => void) | null = null;
  private pending: ClientMessage[] = [];

  constructor(url: string) {
    this.ws = new WebSocket(url);
    this.ws.onopen = () => {
      for (const msg of this.pending) this.ws.send(JSON.stringify(msg));
      this.pending = [];
    };
    this.ws.onmessage = (ev) => this.messageCb?.(String(ev.data));
    this.ws.onclose = () => this.closeCb?.();
    this.ws.onerror = () => this.closeCb?.();
  }

  send(msg: ClientMessage): void {
    if (this.ws.readyState === WebSocket.OPEN) {
      this.ws.send(JSON.stringify(msg));
    } else {
      this.pending.push(msg);
    }
  }

  onMessage(cb: (text: string) => void): void {
    this.messageCb = cb;
  }

  onClose(cb: () => void): void {
    this.closeCb = cb;
  }

  close(): void {
    this.ws.close();
  }
}
