import numpy as np
import pytest

from animlab.apps import (
    BLACK,
    BLUE,
    EOF_ID,
    RED,
    HistogramPipeline,
    PermutationScene,
    TextDocument,
    char_anim_tick,
    position_signal,
    presence_signal,
    pulse_response,
)
from animlab.arc import make_arc_easing
from animlab.easing import bspline, smoothstep
from animlab.signal_core import StepSignal, step_from_events


class TestHistogram:
    def test_zoom_applies_immediately(self):
        counts = {"a": StepSignal(4.0)}
        zoom = step_from_events(1.0, [(1.0, 2.0)])
        h = HistogramPipeline(counts, zoom=zoom)
        assert h.height("a", 0.999) == pytest.approx(4.0)
        assert h.height("a", 1.0) == pytest.approx(8.0)

    def test_count_changes_are_smoothed(self):
        counts = {"a": step_from_events(0.0, [(0.0, 10.0)])}
        h = HistogramPipeline(counts, easing=smoothstep(1.0))
        assert h.height("a", 0.5) == pytest.approx(5.0)
        assert h.height("a", 2.0) == pytest.approx(10.0)

    def test_zoom_commutes_with_smoothing_scale(self):
        # constant zoom z: height equals z * smoothed count everywhere,
        # identical to smoothing pre-scaled counts
        counts = {"a": step_from_events(1.0, [(0.2, 3.0), (0.6, -1.0)])}
        scaled = {"a": counts["a"].scaled(2.0)}
        h1 = HistogramPipeline(counts, zoom=StepSignal(2.0))
        h2 = HistogramPipeline(scaled, zoom=StepSignal(1.0))
        for t in np.linspace(0.0, 2.0, 40):
            assert h1.height("a", t) == pytest.approx(h2.height("a", t), abs=1e-12)

    def test_unknown_bin(self):
        h = HistogramPipeline({"a": StepSignal(1.0)})
        with pytest.raises(KeyError):
            h.height("b", 0.0)


class TestPermutation:
    def test_scalar_easing_rejected(self):
        with pytest.raises(ValueError):
            PermutationScene({}, smoothstep(1.0))

    def test_settled_positions_are_slots(self):
        e = make_arc_easing(1.0, d=1.0)
        scene = PermutationScene(
            {"a": StepSignal(0.0), "b": StepSignal(1.0)}, e
        )
        assert scene.position("a", 5.0) == pytest.approx([0.0, 0.0])
        assert scene.position("b", 5.0) == pytest.approx([1.0, 0.0])

    def test_swap_passes_on_opposite_sides(self):
        # a: 0 -> 1, b: 1 -> 0; mid-swap their y excursions have opposite
        # signs, so the objects do not collide
        e = make_arc_easing(1.0, g=bspline(1, 1.0), d=1.0)
        scene = PermutationScene(
            {
                "a": step_from_events(0.0, [(0.0, 1.0)]),
                "b": step_from_events(1.0, [(0.0, 0.0)]),
            },
            e,
        )
        pa = scene.position("a", 0.5)
        pb = scene.position("b", 0.5)
        assert pa[1] * pb[1] < 0
        assert abs(pa[1]) > 0.1 and abs(pb[1]) > 0.1
        # x positions meet in the middle but the points stay apart
        assert np.linalg.norm(pa - pb) > 0.5

    def test_unknown_object(self):
        scene = PermutationScene({}, make_arc_easing(1.0))
        with pytest.raises(KeyError):
            scene.position("z", 0.0)


def doc_hello():
    """'he' -> 'helo' -> delete one l, replace o with 'p!'."""
    return TextDocument(
        [
            [("insert", 0, "h", "h"), ("insert", 1, "e", "e")],
            [("insert", 2, "l1", "l"), ("insert", 3, "l2", "l"), ("insert", 4, "o", "o")],
            [("delete", "l2")],
            [("delete", "o"), ("insert", 3, "p", "p"), ("insert", 4, "x", "!")],
        ]
    )


class TestTextDocument:
    def test_snapshots(self):
        d = doc_hello()
        assert d.text(0) == ""
        assert d.text(1) == "he"
        assert d.text(2) == "hello"
        assert d.text(3) == "helo"
        assert d.text(4) == "help!"

    def test_total_order_is_superset_of_every_snapshot(self):
        d = doc_hello()
        order = [r.id for r in d.total_order()]
        for rev in range(d.n_revisions + 1):
            vis = [r.id for r in d.visible(rev)]
            idx = [order.index(c) for c in vis]
            assert idx == sorted(idx)

    def test_replace_orders_new_text_before_old(self):
        # 'p' replaced 'o' in the same revision: p precedes the o tombstone
        d = doc_hello()
        order = [r.id for r in d.total_order()]
        assert order.index("p") < order.index("o")

    def test_earlier_deleted_tombstone_precedes_later_insert(self):
        # delete "b" at rev 2, then insert "c" at that visible position in
        # rev 3: the earlier-inserted tombstone keeps its precedence
        d = TextDocument(
            [
                [("insert", 0, "a", "a"), ("insert", 1, "b", "b")],
                [("delete", "b")],
                [("insert", 1, "c", "c")],
            ]
        )
        order = [r.id for r in d.total_order()]
        assert order.index("b") < order.index("c")

    def test_eof_sentinel_is_last(self):
        assert doc_hello().total_order()[-1].id == EOF_ID

    def test_layout_positions(self):
        d = doc_hello()
        assert d.layout_position("h", 2) == 0.0
        assert d.layout_position("o", 2) == 4.0
        assert d.layout_position("p", 4) == 3.0

    def test_ghost_position_of_deleted_char(self):
        d = doc_hello()
        # at rev 4 the o tombstone sits after 'p' and '!': ghost at EOF slot
        assert d.ghost_position("o", 4) == 5.0
        # before insertion a char ghosts at its eventual slot's successor
        assert d.ghost_position("p", 2) == pytest.approx(
            d.layout_position("o", 2)
        )

    def test_invalid_operations_rejected(self):
        with pytest.raises(ValueError):
            TextDocument([[("delete", "x")]])
        with pytest.raises(ValueError):
            TextDocument([[("insert", 3, "a", "a")]])
        with pytest.raises(ValueError):
            TextDocument(
                [[("insert", 0, "a", "a")], [("delete", "a")], [("insert", 0, "a", "a")]]
            )


def random_history(rng, n_revisions=8):
    """Random edit history plus the naive per-revision snapshots."""
    revisions = []
    visible = []  # list of (cid, glyph)
    snapshots = [[]]
    counter = 0
    for _ in range(n_revisions):
        # deletes first, then inserts, mirroring per-revision semantics
        ops = []
        for _ in range(int(rng.integers(0, 3))):
            if not visible:
                break
            k = int(rng.integers(0, len(visible)))
            ops.append(("delete", visible[k][0]))
            visible.pop(k)
        for _ in range(int(rng.integers(0 if ops else 1, 3))):
            cid = f"c{counter}"
            counter += 1
            pos = int(rng.integers(0, len(visible) + 1))
            ops.append(("insert", pos, cid, cid))
            visible.insert(pos, (cid, cid))
        revisions.append(ops)
        snapshots.append(list(visible))
    return revisions, snapshots


def test_total_order_consistent_on_random_histories(rng):
    for _ in range(50):
        revisions, snapshots = random_history(rng)
        d = TextDocument(revisions)
        order = [r.id for r in d.total_order()]
        for rev, snap in enumerate(snapshots):
            expected = [cid for cid, _ in snap]
            assert [r.id for r in d.visible(rev)] == expected
            idx = [order.index(c) for c in expected]
            assert idx == sorted(idx)
        # pairwise: any two characters keep one fixed relative order in
        # every snapshot where both are visible
        for rev, snap in enumerate(snapshots):
            ids = [cid for cid, _ in snap]
            for i, a in enumerate(ids):
                for b in ids[i + 1:]:
                    assert order.index(a) < order.index(b)


class TestSignals:
    def test_presence_signal_edges(self):
        d = doc_hello()
        slider = step_from_events(0.0, [(1.0, 2.0), (2.0, 4.0)])
        p = presence_signal(d, "o", slider)
        assert p(0.5) == 0.0
        assert p(1.5) == 1.0
        assert p(2.5) == 0.0

    def test_position_signal_tracks_ghost(self):
        d = doc_hello()
        slider = step_from_events(2.0, [(1.0, 4.0)])
        x = position_signal(d, "h", slider)
        assert x(0.0) == 0.0
        assert x(2.0) == 0.0  # h never moves
        x_o = position_signal(d, "o", slider)
        assert x_o(0.0) == 4.0
        assert x_o(2.0) == 5.0  # deleted at rev 4: ghost slides to EOF slot

    def test_pulse_is_compactly_supported(self):
        pulse = pulse_response(0.4)
        assert pulse(-0.1) == 0.0
        assert pulse(0.2) == pytest.approx(1.0)
        assert pulse(0.45) == 0.0
        assert pulse.terminal == 0.0

    def test_pulse_peak_between_halves(self):
        pulse = pulse_response(1.0)
        ts = np.linspace(0.0, 1.0, 101)
        vals = [pulse(t) for t in ts]
        assert max(vals) == pytest.approx(1.0)
        assert vals[0] == 0.0 and vals[-1] == pytest.approx(0.0, abs=1e-12)


class TestCharAnimTick:
    def test_settled_present_char(self):
        d = doc_hello()
        slider = StepSignal(4.0)
        state = char_anim_tick(d, "h", slider, 10.0)
        assert state["size"] == pytest.approx(1.0)
        assert state["visible"]
        assert state["color"] == pytest.approx(BLACK)
        assert state["position"] == pytest.approx(0.0)

    def test_inserting_char_tints_blue_then_settles(self):
        d = doc_hello()
        slider = step_from_events(0.0, [(1.0, 2.0)])
        mid = char_anim_tick(d, "o", slider, 1.2, smoothing=smoothstep(0.4))
        assert 0.0 < mid["size"] < 1.0
        assert mid["color"] == pytest.approx(BLUE * mid["color"][2] / BLUE[2])
        assert np.any(mid["color"] > 0)
        done = char_anim_tick(d, "o", slider, 3.0, smoothing=smoothstep(0.4))
        assert done["size"] == pytest.approx(1.0)
        assert done["color"] == pytest.approx(BLACK, abs=1e-12)

    def test_deleting_char_tints_red_and_disappears(self):
        d = doc_hello()
        slider = step_from_events(4.0, [(1.0, 3.0)])  # undo to rev 3 kills p
        mid = char_anim_tick(d, "p", slider, 1.2, smoothing=smoothstep(0.4))
        assert mid["color"][0] > mid["color"][2]  # red-dominant
        gone = char_anim_tick(d, "p", slider, 3.0, smoothing=smoothstep(0.4))
        assert gone["size"] == pytest.approx(0.0, abs=1e-9)
        assert not gone["visible"]

    def test_position_animates_smoothly_between_slots(self):
        d = doc_hello()
        # l2 deletion at rev 3 shifts o from slot 4 to slot 3
        slider = step_from_events(2.0, [(1.0, 3.0)])
        before = char_anim_tick(d, "o", slider, 0.9)["position"]
        mid = char_anim_tick(d, "o", slider, 1.2)["position"]
        after = char_anim_tick(d, "o", slider, 2.0)["position"]
        assert before == pytest.approx(4.0)
        assert 3.0 < mid < 4.0
        assert after == pytest.approx(3.0)
