"""FM-index queries over any record source: LF, find, locate, extract.

All functions are pure and work against either index encoding through
the shared record-view protocol.  Positions are (node, offset) pairs;
search states are a node plus an inclusive offset range within its
record.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .model import flip
from .records import ENDMARKER


class UnsupportedOperationError(RuntimeError):
    """Operation requires an index feature that was not built."""


@dataclass(frozen=True)
class Position:
    node: int
    offset: int


@dataclass(frozen=True)
class SearchState:
    """Offset range [sp, ep] within the record of the pattern's last node."""

    node: int
    sp: int
    ep: int

    @property
    def size(self) -> int:
        return 0 if self.ep < self.sp else self.ep - self.sp + 1

    @property
    def empty(self) -> bool:
        return self.ep < self.sp

    @classmethod
    def empty_state(cls) -> "SearchState":
        return cls(ENDMARKER, 0, -1)


@dataclass(frozen=True)
class BidirectionalState:
    """Equal-size ranges for a pattern and its reverse."""

    forward: SearchState
    backward: SearchState

    @property
    def size(self) -> int:
        return self.forward.size

    @property
    def empty(self) -> bool:
        return self.forward.empty

    def flipped(self) -> "BidirectionalState":
        return BidirectionalState(self.backward, self.forward)

    @classmethod
    def empty_state(cls) -> "BidirectionalState":
        return cls(SearchState.empty_state(), SearchState.empty_state())


def lf(src, pos: Position, w: int) -> Position | None:
    """One LF step from (node, offset) towards successor w."""
    if w == ENDMARKER:
        raise ValueError("cannot take an LF step over the endmarker")
    view = src.record_view(pos.node)
    if not 0 <= pos.offset < view.length:
        raise IndexError(f"offset {pos.offset} out of range in record {pos.node}")
    target = view.lf(pos.offset, w)
    if target is None:
        return None
    return Position(w, target)


def full_state(src, v: int) -> SearchState:
    """The whole record of node v as a search state."""
    if v == ENDMARKER or not src.in_range(v):
        return SearchState.empty_state()
    view = src.record_view(v)
    return SearchState(v, 0, view.length - 1)


def extend(src, state: SearchState, w: int) -> SearchState:
    """Extend the matched pattern with one more node."""
    if state.empty:
        return SearchState.empty_state()
    if w == ENDMARKER or not src.in_range(w):
        return SearchState.empty_state()
    view = src.record_view(state.node)
    rng = view.lf_range(state.sp, state.ep, w)
    if rng is None:
        return SearchState.empty_state()
    return SearchState(w, rng[0], rng[1])


def find(src, pattern: Sequence[int]) -> SearchState:
    """Range of indexed path positions where the pattern ends.

    The empty pattern yields the full endmarker-record range so that
    find and extract share a start state.
    """
    if not pattern:
        return SearchState(ENDMARKER, 0, src.sequence_count - 1)
    state = full_state(src, pattern[0])
    for w in pattern[1:]:
        if state.empty:
            return SearchState.empty_state()
        state = extend(src, state, w)
    return state


def locate_direct(src, state: SearchState) -> Counter:
    """Text ids for every position of the range, walked one at a time."""
    hits: Counter = Counter()
    for offset in range(state.sp, state.ep + 1):
        node, i = state.node, offset
        while True:
            tid = src.sampled_id(node, i)
            if tid is not None:
                hits[tid] += 1
                break
            view = src.record_view(node)
            w = view.char_at(i)
            i = view.lf(i, w)
            node = w
    return hits


def locate_fast(src, state: SearchState) -> Counter:
    """Text ids for the range, advancing all pending positions together.

    Positions in the same record are advanced with a single decode, and
    positions falling inside one run share a single LF computation.
    """
    hits: Counter = Counter()
    if state.empty:
        return hits
    pending: dict[int, list[int]] = {state.node: list(range(state.sp, state.ep + 1))}
    while pending:
        node = min(pending)
        # Offsets may repeat: walks started at different depths can pass
        # through the same row, and each walk counts separately.
        offsets = sorted(pending.pop(node))
        view = src.record_view(node)
        unresolved: list[int] = []
        for i in offsets:
            tid = view.sample_at(i)
            if tid is not None:
                hits[tid] += 1
            else:
                unresolved.append(i)
        if not unresolved:
            continue
        # Walk the runs once; all offsets inside one run advance together.
        run_start = 0
        idx = 0
        local: dict[int, int] = {}
        for rk, rl in view.runs:
            run_end = run_start + rl
            w = view.edges[rk][0]
            if idx < len(unresolved) and unresolved[idx] < run_end:
                base = view.edges[rk][1] + local.get(rk, 0)
                while idx < len(unresolved) and unresolved[idx] < run_end:
                    i = unresolved[idx]
                    pending.setdefault(w, []).append(base + (i - run_start))
                    idx += 1
            local[rk] = local.get(rk, 0) + rl
            run_start = run_end
            if idx == len(unresolved):
                break
    return hits


def extract(src, j: int) -> tuple[int, ...]:
    """Reconstruct the j-th inserted path by replaying LF from its start."""
    if not 0 <= j < src.sequence_count:
        raise IndexError(f"text id {j} out of range [0, {src.sequence_count})")
    path: list[int] = []
    node, i = ENDMARKER, j
    while True:
        view = src.record_view(node)
        w = view.char_at(i)
        if w == ENDMARKER:
            return tuple(path)
        path.append(w)
        i = view.lf(i, w)
        node = w


# -- bidirectional search --

def _require_bidirectional(src) -> None:
    if not getattr(src, "bidirectional", False):
        raise UnsupportedOperationError(
            "index was not built with both path orientations")


def bd_find_node(src, v: int) -> BidirectionalState:
    """Bidirectional state of a single-node pattern."""
    _require_bidirectional(src)
    fwd = full_state(src, v)
    bwd = full_state(src, flip(v))
    if fwd.empty or bwd.empty:
        return BidirectionalState.empty_state()
    return BidirectionalState(fwd, bwd)


def bd_extend_forward(src, state: BidirectionalState, v: int) -> BidirectionalState:
    """Append v to the pattern, updating both ranges without a re-search."""
    _require_bidirectional(src)
    if state.empty:
        return BidirectionalState.empty_state()
    fwd = extend(src, state.forward, v)
    if fwd.empty:
        return BidirectionalState.empty_state()
    # Rows of the reverse range sorted by the node preceding the reverse
    # pattern correspond to rows of the forward range grouped by the
    # (flipped) node that follows the pattern.
    view = src.record_view(state.forward.node)
    rv = flip(v)
    skipped = 0
    pos = 0
    for w, rl in view.symbol_runs():
        if pos >= state.forward.ep + 1:
            break
        overlap = min(pos + rl, state.forward.ep + 1) - max(pos, state.forward.sp)
        if overlap > 0:
            w_rev = ENDMARKER if w == ENDMARKER else flip(w)
            if w_rev < rv:
                skipped += overlap
        pos += rl
    sp = state.backward.sp + skipped
    bwd = SearchState(state.backward.node, sp, sp + fwd.size - 1)
    return BidirectionalState(fwd, bwd)


def bd_extend_backward(src, state: BidirectionalState, v: int) -> BidirectionalState:
    """Prepend v to the pattern; forward extension of the flipped state."""
    _require_bidirectional(src)
    return bd_extend_forward(src, state.flipped(), flip(v)).flipped()


def bd_find(src, pattern: Sequence[int]) -> BidirectionalState:
    _require_bidirectional(src)
    if not pattern:
        raise ValueError("bidirectional search needs a nonempty pattern")
    state = bd_find_node(src, pattern[0])
    for v in pattern[1:]:
        if state.empty:
            return BidirectionalState.empty_state()
        state = bd_extend_forward(src, state, v)
    return state
