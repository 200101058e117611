"""Live session endpoint for the demo UI.

Speaks one JSON object per text frame over a local bidirectional socket.
Two framings are accepted on the same port: newline-delimited JSON over a
plain TCP connection, and RFC 6455 WebSocket text frames (the connection
is upgraded when the first bytes look like an HTTP GET), so both scripted
clients and browsers can connect.

Each connection owns an isolated session of named channels.  Client
retargets are applied at the next tick; the server pushes one frame per
tick at the configured rate.  Malformed messages get an {"error": ...}
reply and the session continues.
"""

from __future__ import annotations

import base64
import hashlib
import json
import socket
import struct
import threading
import time

import numpy as np

from .harness import _DiscreteChannel, build_engine

__all__ = ["AnimServer", "serve"]

_WS_GUID = "258EAFA5-E914-47DA-95CA-C5AB0DC85B11"


class _LineTransport:
    def __init__(self, sock, initial=b""):
        self.sock = sock
        self._buf = initial

    def recv(self):
        while b"\n" not in self._buf:
            chunk = self.sock.recv(4096)
            if not chunk:
                return None
            self._buf += chunk
        line, self._buf = self._buf.split(b"\n", 1)
        return line.decode("utf-8").strip()

    def send(self, text):
        self.sock.sendall(text.encode("utf-8") + b"\n")

    def close(self):
        self.sock.close()


class _WebSocketTransport:
    def __init__(self, sock, initial=b""):
        self.sock = sock
        self._buf = initial
        self._handshake()

    def _read_until(self, marker):
        while marker not in self._buf:
            chunk = self.sock.recv(4096)
            if not chunk:
                raise ConnectionError("closed during handshake")
            self._buf += chunk
        data, self._buf = self._buf.split(marker, 1)
        return data

    def _handshake(self):
        head = self._read_until(b"\r\n\r\n").decode("latin-1")
        key = None
        for line in head.split("\r\n")[1:]:
            name, _, value = line.partition(":")
            if name.strip().lower() == "sec-websocket-key":
                key = value.strip()
        if key is None:
            raise ConnectionError("missing Sec-WebSocket-Key")
        accept = base64.b64encode(
            hashlib.sha1((key + _WS_GUID).encode()).digest()
        ).decode()
        self.sock.sendall(
            (
                "HTTP/1.1 101 Switching Protocols\r\n"
                "Upgrade: websocket\r\n"
                "Connection: Upgrade\r\n"
                f"Sec-WebSocket-Accept: {accept}\r\n\r\n"
            ).encode("latin-1")
        )

    def _read_exact(self, n):
        while len(self._buf) < n:
            chunk = self.sock.recv(4096)
            if not chunk:
                return None
            self._buf += chunk
        data, self._buf = self._buf[:n], self._buf[n:]
        return data

    def recv(self):
        while True:
            hdr = self._read_exact(2)
            if hdr is None:
                return None
            opcode = hdr[0] & 0x0F
            masked = bool(hdr[1] & 0x80)
            length = hdr[1] & 0x7F
            if length == 126:
                length = struct.unpack(">H", self._read_exact(2))[0]
            elif length == 127:
                length = struct.unpack(">Q", self._read_exact(8))[0]
            mask = self._read_exact(4) if masked else b"\0\0\0\0"
            payload = self._read_exact(length) or b""
            payload = bytes(b ^ mask[i % 4] for i, b in enumerate(payload))
            if opcode == 0x8:  # close
                return None
            if opcode == 0x9:  # ping -> pong
                self._send_frame(0xA, payload)
                continue
            if opcode in (0x1, 0x2):
                return payload.decode("utf-8")

    def _send_frame(self, opcode, payload):
        header = bytes([0x80 | opcode])
        n = len(payload)
        if n < 126:
            header += bytes([n])
        elif n < 1 << 16:
            header += bytes([126]) + struct.pack(">H", n)
        else:
            header += bytes([127]) + struct.pack(">Q", n)
        self.sock.sendall(header + payload)

    def send(self, text):
        self._send_frame(0x1, text.encode("utf-8"))

    def close(self):
        try:
            self._send_frame(0x8, b"")
        except OSError:
            pass
        self.sock.close()


def _jsonable(value):
    if isinstance(value, np.ndarray):
        return [float(v) for v in value]
    return float(value)


class _Session:
    def __init__(self, transport, rate):
        self.transport = transport
        self.rate = rate
        self.lock = threading.Lock()
        self.channels = {}  # name -> (engine, target holder)
        self.pending = []
        self.zoom = None
        self.closed = threading.Event()

    def handle_message(self, text):
        try:
            msg = json.loads(text)
            op = msg["op"]
            if op == "create":
                name = msg["channel"]
                x0 = float(msg.get("x0", 0.0))
                engine = build_engine(x0, msg.get("engine"), self.rate)
                with self.lock:
                    self.channels[name] = {"engine": engine, "target": x0}
            elif op == "retarget":
                name = msg["channel"]
                value = float(msg["value"])
                with self.lock:
                    if name not in self.channels:
                        raise KeyError(f"unknown channel {name!r}")
                    self.pending.append((name, value))
            elif op == "zoom":
                with self.lock:
                    self.zoom = float(msg["value"])
            elif op == "close":
                self.closed.set()
            else:
                raise ValueError(f"unknown op {op!r}")
        except Exception as exc:  # malformed message: reply, keep session
            try:
                self.transport.send(json.dumps({"error": str(exc)}))
            except OSError:
                self.closed.set()

    def reader(self):
        try:
            while not self.closed.is_set():
                text = self.transport.recv()
                if text is None:
                    break
                if text:
                    self.handle_message(text)
        except (OSError, ConnectionError):
            pass
        finally:
            self.closed.set()

    def ticker(self):
        period = 1.0 / self.rate
        k = 0
        start = time.monotonic()
        try:
            while not self.closed.is_set():
                t = k / self.rate
                with self.lock:
                    for name, value in self.pending:
                        ch = self.channels[name]
                        ch["target"] = value
                        eng = ch["engine"]
                        if isinstance(eng, _DiscreteChannel):
                            eng.retarget(t, value)
                        else:
                            eng.retarget(t, value)
                    self.pending.clear()
                    frame = {"t": t, "channels": {}}
                    if self.zoom is not None:
                        frame["zoom"] = self.zoom
                    for name, ch in self.channels.items():
                        eng = ch["engine"]
                        if isinstance(eng, _DiscreteChannel):
                            out = eng.output(k)
                        else:
                            out = eng.eval(t)
                        frame["channels"][name] = {
                            "target": ch["target"],
                            "output": _jsonable(out),
                        }
                self.transport.send(json.dumps(frame))
                k += 1
                deadline = start + k * period
                delay = deadline - time.monotonic()
                if delay > 0:
                    time.sleep(delay)
        except (OSError, ConnectionError):
            pass
        finally:
            self.closed.set()
            try:
                self.transport.close()
            except OSError:
                pass


class AnimServer:
    """Threaded session server; each connection is fully isolated."""

    def __init__(self, port=0, rate=60.0, host="127.0.0.1"):
        self.host = host
        self.rate = rate
        self._sock = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
        self._sock.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
        self._sock.bind((host, port))
        self.port = self._sock.getsockname()[1]
        self._stop = threading.Event()
        self._accept_thread = None

    def _handle(self, conn):
        # sniff the protocol: browsers send their GET immediately, so a
        # short quiet period means a plain line-JSON client
        conn.settimeout(0.25)
        try:
            first = conn.recv(4, socket.MSG_PEEK)
        except socket.timeout:
            first = b""
        except OSError:
            conn.close()
            return
        conn.settimeout(None)
        try:
            if first.startswith(b"GET"):
                transport = _WebSocketTransport(conn)
            else:
                transport = _LineTransport(conn)
        except (OSError, ConnectionError):
            conn.close()
            return
        session = _Session(transport, self.rate)
        threading.Thread(target=session.reader, daemon=True).start()
        threading.Thread(target=session.ticker, daemon=True).start()

    def _accept_loop(self):
        while not self._stop.is_set():
            try:
                conn, _ = self._sock.accept()
            except socket.timeout:
                continue
            except OSError:
                break
            threading.Thread(target=self._handle, args=(conn,), daemon=True).start()

    def start(self):
        self._sock.listen()
        self._sock.settimeout(0.2)
        self._accept_thread = threading.Thread(target=self._accept_loop, daemon=True)
        self._accept_thread.start()
        return self.port

    def stop(self):
        self._stop.set()
        try:
            self._sock.close()
        except OSError:
            pass
        if self._accept_thread is not None:
            self._accept_thread.join(timeout=2.0)


def serve(port, rate, host="127.0.0.1"):
    """Run the server until interrupted."""
    server = AnimServer(port, rate, host)
    server.start()
    print(f"animlab serve listening on {host}:{server.port} at {rate} Hz")
    try:
        while True:
            time.sleep(1.0)
    except KeyboardInterrupt:
        pass
    finally:
        server.stop()
