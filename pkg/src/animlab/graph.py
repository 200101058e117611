"""System diagrams: blocks wired in series/parallel, plus LTI classification.

A block is any stateful discrete-time unit with push(x) -> y and reset().
Graphs are composition trees (series lists, weighted parallel fan-outs and
pointwise maps), which covers every diagram the transition engines need
without arbitrary-DAG scheduling.
"""

from __future__ import annotations

from collections import deque

import numpy as np

__all__ = [
    "Block",
    "FirBlock",
    "CascadeBlock",
    "GainBlock",
    "MapBlock",
    "SeriesBlock",
    "ParallelBlock",
    "series",
    "parallel",
    "map_block",
    "gain",
    "identity",
    "impulse_response",
    "classify",
]


class Block:
    def push(self, x):
        raise NotImplementedError

    def reset(self):
        pass


class FirBlock(Block):
    """Direct convolution over a tap vector (zero initial history)."""

    def __init__(self, taps):
        self.taps = np.asarray(taps, dtype=float)
        self.reset()

    def push(self, x):
        self._buf.appendleft(float(x))
        return float(np.dot(self.taps, self._buf))

    def reset(self):
        self._buf = deque([0.0] * len(self.taps), maxlen=len(self.taps))


class CascadeBlock(Block):
    """Wraps a biquad cascade with zero initial state (no DC seeding)."""

    def __init__(self, cascade):
        self.cascade = cascade

    def push(self, x):
        return self.cascade.push(x)

    def reset(self):
        self.cascade.reset()


class GainBlock(Block):
    def __init__(self, k):
        self.k = float(k)

    def push(self, x):
        return self.k * x


class MapBlock(Block):
    """Stateless pointwise application of f."""

    def __init__(self, f):
        self.f = f

    def push(self, x):
        return self.f(x)


class SeriesBlock(Block):
    def __init__(self, blocks):
        if not blocks:
            raise ValueError("series needs at least one block")
        self.blocks = list(blocks)

    def push(self, x):
        for b in self.blocks:
            x = b.push(x)
        return x

    def reset(self):
        for b in self.blocks:
            b.reset()


class ParallelBlock(Block):
    def __init__(self, blocks, weights):
        if not blocks:
            raise ValueError("parallel needs at least one block")
        if len(blocks) != len(weights):
            raise ValueError(
                f"got {len(blocks)} blocks but {len(weights)} weights"
            )
        self.blocks = list(blocks)
        self.weights = [float(w) for w in weights]

    def push(self, x):
        return sum(w * b.push(x) for b, w in zip(self.blocks, self.weights))

    def reset(self):
        for b in self.blocks:
            b.reset()


def series(blocks):
    return SeriesBlock(blocks)


def parallel(blocks, weights=None):
    if weights is None:
        weights = [1.0] * len(blocks)
    return ParallelBlock(blocks, weights)


def map_block(f):
    return MapBlock(f)


def gain(k):
    return GainBlock(k)


def identity():
    return GainBlock(1.0)


def impulse_response(block, n):
    """Push a unit impulse followed by n-1 zeros through a fresh block."""
    if n < 1:
        raise ValueError("n must be >= 1")
    block.reset()
    out = [block.push(1.0)]
    out.extend(block.push(0.0) for _ in range(n - 1))
    block.reset()
    return np.array(out)


def classify(block, n):
    """Classify a block as affine and/or convex from its impulse response.

    Requires the response to have decayed within the window: the last 10%
    of samples must be below 1e-9, otherwise n is too small to judge.
    """
    h = impulse_response(block, n)
    tail = h[int(np.ceil(0.9 * n)):]
    if len(tail) and np.max(np.abs(tail)) >= 1e-9:
        raise ValueError(f"impulse response has not decayed within n={n} samples")
    affine = abs(h.sum() - 1.0) <= 1e-6
    convex = affine and h.min() >= -1e-9
    return {"affine": affine, "convex": convex}
