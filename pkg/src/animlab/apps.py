"""Application systems built on the transition engines.

* Histogram bins: smooth the bin *counts*, then apply zoom, so pinch
  zooming stays immediate while count changes animate.
* Permutations: per-object FIR transitions with a vector-valued elliptical
  arc easing, so swapping objects pass on opposite sides of the row.
* Text documents: per-character presence/position signals driven by a
  revision slider, with ghost positions for absent characters taken from
  a total order over the document's whole history.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .easing import Easing, smoothstep
from .fir import FirStepAnimator, fir_response
from .signal_core import StepSignal, step_from_events

__all__ = [
    "HistogramPipeline",
    "PermutationScene",
    "CharRecord",
    "TextDocument",
    "presence_signal",
    "position_signal",
    "pulse_response",
    "char_anim_tick",
    "BLUE",
    "BLACK",
    "RED",
]


class HistogramPipeline:
    """height(bin, t) = zoom(t) * smoothed count(bin, t).

    Counts are smoothed through the configured easing (FIR); the zoom
    signal is applied afterwards, unsmoothed.
    """

    def __init__(self, counts: dict, zoom: Optional[StepSignal] = None, easing: Optional[Easing] = None):
        self.counts = dict(counts)
        self.zoom = zoom if zoom is not None else StepSignal(1.0)
        self.easing = easing if easing is not None else smoothstep(1.0)

    def smoothed_count(self, name, t):
        if name not in self.counts:
            raise KeyError(f"unknown bin {name!r}")
        return fir_response(self.counts[name], self.easing, t)

    def height(self, name, t):
        return self.zoom(t) * self.smoothed_count(name, t)


class PermutationScene:
    """Objects in a row of slots, each animated with an arc easing.

    Slot assignments are scalar step signals; outputs are 2D points whose
    x interpolates the slots and whose y is the arc excursion (0 at rest).
    """

    def __init__(self, slots: dict, arc_easing: Easing):
        if not arc_easing.is_vector:
            raise ValueError("permutation scene needs a vector-valued easing")
        self.slots = dict(slots)
        self.easing = arc_easing

    def position(self, obj, t):
        if obj not in self.slots:
            raise KeyError(f"unknown object {obj!r}")
        sig = self.slots[obj]
        anim = FirStepAnimator(sig.initial, self.easing)
        for ti, v in sig.events:
            if ti > t:
                break
            anim.retarget(ti, v)
        return anim.eval(t)


# --- text document animation -------------------------------------------------

EOF_ID = "<eof>"


@dataclass
class CharRecord:
    id: str
    glyph: str
    insert_rev: int
    delete_rev: Optional[int] = None  # None = still present

    def present_at(self, rev) -> bool:
        if rev < self.insert_rev:
            return False
        return self.delete_rev is None or rev < self.delete_rev


class TextDocument:
    """Edit history of a single document plus the induced total order.

    Built from a list of revisions, each a list of operations applied in
    order: ("insert", visible_position, char_id, glyph) or
    ("delete", char_id).  Revision 0 is the empty document; revision r
    is the state after applying the first r revisions.  Characters are
    never moved or reinserted.

    The total order extends the on-screen partial order: coexisting
    characters keep their document order; text inserted where deleted
    text sat in the same revision is ordered before the deleted text;
    otherwise earlier-deleted tombstones stay before later insertions.
    """

    def __init__(self, revisions):
        self.records: dict[str, CharRecord] = {}
        self._order: list[str] = []  # total order, tombstones included
        self.n_revisions = len(revisions)
        for r, ops in enumerate(revisions, start=1):
            deletes = [op for op in ops if op[0] == "delete"]
            inserts = [op for op in ops if op[0] == "insert"]
            for _, cid in deletes:
                rec = self.records.get(cid)
                if rec is None or rec.delete_rev is not None:
                    raise ValueError(f"delete of absent character {cid!r} at revision {r}")
                rec.delete_rev = r
            for _, pos, cid, glyph in inserts:
                if cid in self.records:
                    raise ValueError(f"character {cid!r} reinserted at revision {r}")
                self.records[cid] = CharRecord(cid, glyph, r)
                self._insert_into_order(cid, pos, r)
        # invisible always-present end-of-file sentinel
        self.records[EOF_ID] = CharRecord(EOF_ID, "", 0)
        self._order.append(EOF_ID)

    def _insert_into_order(self, cid, pos, rev):
        # find the master index following the pos-th visible character,
        # then skip tombstones deleted before this revision (they keep
        # their earlier-inserted precedence); tombstones deleted in THIS
        # revision are replaced text and come after the new character
        visible_seen = 0
        i = 0
        while i < len(self._order) and visible_seen < pos:
            if self.records[self._order[i]].present_at(rev):
                visible_seen += 1
            i += 1
        if visible_seen < pos:
            raise ValueError(f"insert position {pos} beyond document end")
        while i < len(self._order):
            rec = self.records[self._order[i]]
            if rec.present_at(rev) or rec.delete_rev == rev:
                break
            i += 1
        self._order.insert(i, cid)

    def total_order(self):
        """All characters (including the EOF sentinel) in total order."""
        return [self.records[cid] for cid in self._order]

    def visible(self, rev):
        """Visible characters at a revision, in document order (no sentinel)."""
        return [
            self.records[cid]
            for cid in self._order
            if cid != EOF_ID and self.records[cid].present_at(rev)
        ]

    def layout_position(self, cid, rev):
        """Monospace layout: index among visible characters (width 1)."""
        pos = 0
        for other in self._order:
            if other == cid:
                if not self.records[cid].present_at(rev) and cid != EOF_ID:
                    raise ValueError(f"{cid!r} not visible at revision {rev}")
                return float(pos)
            if other != EOF_ID and self.records[other].present_at(rev):
                pos += 1
        raise KeyError(f"unknown character {cid!r}")

    def ghost_position(self, cid, rev):
        """Position of cid at a revision: its own slot if visible, else the
        slot of its least visible successor (the EOF sentinel backstops)."""
        rec = self.records[cid]
        if rec.present_at(rev) or cid == EOF_ID:
            return self.layout_position(cid, rev)
        i = self._order.index(cid)
        pos = sum(
            1
            for other in self._order[:i]
            if other != EOF_ID and self.records[other].present_at(rev)
        )
        # the successor occupying slot `pos` is the least visible char > cid
        return float(pos)

    def text(self, rev):
        return "".join(rec.glyph for rec in self.visible(rev))


def presence_signal(doc: TextDocument, cid, rev_signal: StepSignal) -> StepSignal:
    """0/1 step signal of a character's presence under a revision slider."""
    rec = doc.records[cid]
    p0 = 1.0 if rec.present_at(int(rev_signal.initial)) else 0.0
    events = []
    last = p0
    for t, rev in rev_signal.events:
        p = 1.0 if rec.present_at(int(rev)) else 0.0
        if p != last:
            events.append((t, p))
            last = p
    return StepSignal(p0, tuple(events))


def position_signal(doc: TextDocument, cid, rev_signal: StepSignal) -> StepSignal:
    """Step signal of a character's (ghost) layout position over time."""
    x0 = doc.ghost_position(cid, int(rev_signal.initial))
    events = []
    last = x0
    for t, rev in rev_signal.events:
        x = doc.ghost_position(cid, int(rev))
        if x != last:
            events.append((t, x))
            last = x
    return StepSignal(x0, tuple(events))


def pulse_response(d):
    """Smooth, compactly supported step response: rises 0->1 over the first
    half of d and falls back to 0 over the second half, so settled
    characters carry no residual tint."""
    half = smoothstep(d / 2.0)

    def value(t):
        return half(t) - half(t - d / 2.0)

    e = Easing(d, value, terminal=0.0, kind="pulse")
    return e


BLUE = np.array([0x21, 0x66, 0xAC]) / 255.0
BLACK = np.zeros(3)
RED = np.array([0xB2, 0x18, 0x2C]) / 255.0


def char_anim_tick(doc: TextDocument, cid, rev_signal: StepSignal, t, smoothing: Optional[Easing] = None, nominal_size=1.0):
    """Sampled render state {size, color, position, visible} for one character.

    Size follows a smoothed presence signal; color pulses toward blue on
    insertion and toward red on deletion, returning exactly to black once
    the compact-support pulse has passed; position follows a smoothed
    (ghost-substituted) layout signal.  Characters with size below 1e-3
    of nominal report visible=False.
    """
    if smoothing is None:
        smoothing = smoothstep(0.4)
    presence = presence_signal(doc, cid, rev_signal)
    psi = float(np.clip(fir_response(presence, smoothing, t), 0.0, 1.0))
    pos = fir_response(position_signal(doc, cid, rev_signal), smoothing, t)

    # color pulse: sum of compact bumps, one per presence change
    pulse = pulse_response(smoothing.d)
    chi = 0.0
    direction = 0.0
    for ti, v in presence.events:
        if ti > t:
            break
        prev = presence.value_before(ti)
        step = v - prev
        bump = pulse(t - ti)
        if bump != 0.0:
            chi += abs(step) * bump
            direction = step
    chi = float(np.clip(chi, 0.0, 1.0))
    if direction > 0:
        color = BLACK + (BLUE - BLACK) * chi
    elif direction < 0:
        color = BLACK + (RED - BLACK) * chi
    else:
        color = BLACK.copy()

    size = psi * nominal_size
    return {
        "size": size,
        "color": color,
        "position": pos,
        "visible": size >= 1e-3 * nominal_size,
    }
