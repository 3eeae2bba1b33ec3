"""Construction-time index: mutable per-node records and batch insertion.

Texts are inserted with a batched variant of incremental BWT extension:
every pending text advances by one node per step, the affected records
are rebuilt from scratch (records are small, so rebuilding beats
in-place splicing), and the cumulative edge counts are refreshed from
the per-record incoming-edge counters at the end of each step.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .records import ENDMARKER, RecordView, runs_from_symbols

DEFAULT_SAMPLE_RATE = 1024

_NO_LIMIT = float("inf")


class MergeError(ValueError):
    """Node id ranges of the two indexes overlap."""


class DynamicRecord:
    """Mutable record: header, body, incoming counters, and samples."""

    __slots__ = ("outgoing", "body", "incoming", "samples")

    def __init__(self) -> None:
        self.outgoing: list[tuple[int, int]] = []   # (successor, cumulative rank)
        self.body: list[tuple[int, int]] = []       # (edge index, run length)
        self.incoming: dict[int, int] = {}          # predecessor -> paths crossing
        self.samples: list[tuple[int, int]] = []    # (offset, text id)

    @property
    def length(self) -> int:
        return sum(l for _, l in self.body)

    def symbol_runs(self) -> list[tuple[int, int]]:
        return [(self.outgoing[k][0], l) for k, l in self.body]

    def edge_rank(self, w: int) -> int | None:
        for ew, rank in self.outgoing:
            if ew == w:
                return rank
        return None

    def view(self, node: int) -> RecordView:
        return RecordView(node, self.outgoing, self.body, self.samples)


class DynamicGBWT:
    """Mutable record-partitioned BWT over a path collection."""

    def __init__(self, sample_rate: int = DEFAULT_SAMPLE_RATE,
                 bidirectional: bool = False):
        if sample_rate < 1:
            raise ValueError("sample rate must be >= 1")
        self.sample_rate = sample_rate
        self.bidirectional = bidirectional
        self.sequence_count = 0
        self.total_size = 0          # characters excluding endmarkers
        self._records: dict[int, DynamicRecord] = {ENDMARKER: DynamicRecord()}
        self._min_node: int | None = None
        self._max_node: int | None = None

    # -- record source protocol --

    @property
    def node_range(self) -> tuple[int, int]:
        """Dense [a, b] id span; (1, 0) when no node has been inserted."""
        if self._min_node is None:
            return (1, 0)
        return (self._min_node, self._max_node)

    def record_view(self, v: int) -> RecordView:
        a, b = self.node_range
        if v != ENDMARKER and not a <= v <= b:
            raise IndexError(f"node {v} outside record range [{a}, {b}]")
        rec = self._records.get(v)
        if rec is None:
            return RecordView(v, [], [])
        return rec.view(v)

    def in_range(self, v: int) -> bool:
        a, b = self.node_range
        return v == ENDMARKER or a <= v <= b

    def sampled_id(self, v: int, i: int) -> int | None:
        view = self.record_view(v)
        if not 0 <= i < view.length:
            raise IndexError(f"offset {i} out of range in record {v}")
        return view.sample_at(i)

    def node_ids(self) -> Iterable[int]:
        """Ids of records with nonempty bodies, ascending, excluding 0."""
        return sorted(v for v, r in self._records.items() if v != ENDMARKER and r.body)

    # -- construction --

    def insert(self, text: Sequence[int]) -> None:
        """Insert one path (a batch of one)."""
        self.insert_batch([text])

    def insert_batch(self, texts: Sequence[Sequence[int]]) -> None:
        paths: list[tuple[int, ...]] = []
        problems = []
        for t, raw in enumerate(texts):
            p = tuple(raw)
            if not p:
                problems.append(f"text {t}: empty paths cannot be indexed")
            elif min(p) < 1:
                problems.append(f"text {t}: node id 0 is reserved for the endmarker")
            paths.append(p)
        if problems:
            raise ValueError("; ".join(problems))
        if not paths:
            return

        m0 = self.sequence_count
        n = len(paths)
        cur_v = [ENDMARKER] * n
        cur_i = [m0 + t for t in range(n)]
        partial = [0] * n
        active = list(range(n))
        step = 0
        while active:
            active.sort(key=lambda t: (cur_v[t], cur_i[t], t))
            touched: set[int] = set()
            g = 0
            while g < len(active):
                v = cur_v[active[g]]
                h = g
                while h < len(active) and cur_v[active[h]] == v:
                    h += 1
                self._rebuild_record(v, active[g:h], step, paths, cur_i,
                                     partial, touched, m0)
                g = h
            for w in touched:
                self._refresh_edge_ranks(w)
            remaining = []
            for t in active:
                path = paths[t]
                w = path[step] if step < len(path) else ENDMARKER
                if w == ENDMARKER:
                    continue
                rank = self._records[cur_v[t]].edge_rank(w)
                cur_i[t] = partial[t] + rank
                cur_v[t] = w
                remaining.append(t)
            active = remaining
            step += 1

        self.sequence_count = m0 + n
        self.total_size += sum(len(p) for p in paths)
        self._refresh_endmarker_ranks()

    def _record(self, v: int) -> DynamicRecord:
        rec = self._records.get(v)
        if rec is None:
            rec = self._records[v] = DynamicRecord()
            if v != ENDMARKER:
                if self._min_node is None or v < self._min_node:
                    self._min_node = v
                if self._max_node is None or v > self._max_node:
                    self._max_node = v
        return rec

    def _rebuild_record(self, v: int, group: list[int], step: int,
                        paths: list[tuple[int, ...]], cur_i: list[int],
                        partial: list[int], touched: set[int], m0: int) -> None:
        rec = self._record(v)
        d = self.sample_rate

        next_chars = []
        for t in group:
            path = paths[t]
            next_chars.append(path[step] if step < len(path) else ENDMARKER)

        edge_ws = [w for w, _ in rec.outgoing]
        missing = sorted(set(next_chars) - set(edge_ws))
        if missing:
            kept = {w: rank for w, rank in rec.outgoing}
            for w in missing:
                kept[w] = 0
            new_edges = [(w, kept[w]) for w in sorted(kept)]
        else:
            new_edges = rec.outgoing

        old_runs = rec.symbol_runs()
        old_samples = rec.samples
        new_sym_runs: list[tuple[int, int]] = []
        new_samples: list[tuple[int, int]] = []
        counts: dict[int, int] = {}

        run_idx = 0
        run_off = 0        # consumed portion of the current old run
        samp_idx = 0
        old_pos = 0        # old rows consumed so far
        new_pos = 0
        inserted = 0

        def emit_until(limit: int) -> None:
            """Copy old rows until the new record has length ``limit``.

            Cursor offsets already count this step's earlier insertions,
            so the limit is a new-record offset.
            """
            nonlocal run_idx, run_off, samp_idx, old_pos, new_pos
            while new_pos < limit and run_idx < len(old_runs):
                sym, length = old_runs[run_idx]
                avail = length - run_off
                take = min(avail, limit - new_pos)
                if new_sym_runs and new_sym_runs[-1][0] == sym:
                    new_sym_runs[-1] = (sym, new_sym_runs[-1][1] + take)
                else:
                    new_sym_runs.append((sym, take))
                counts[sym] = counts.get(sym, 0) + take
                run_off += take
                old_pos += take
                new_pos += take
                if run_off == length:
                    run_idx += 1
                    run_off = 0
            while samp_idx < len(old_samples) and old_samples[samp_idx][0] < old_pos:
                off, tid = old_samples[samp_idx]
                new_samples.append((off + inserted, tid))
                samp_idx += 1

        for t, w in zip(group, next_chars):
            emit_until(cur_i[t])
            if v != ENDMARKER and ((step - 1) % d == 0 or w == ENDMARKER):
                new_samples.append((new_pos, m0 + t))
            partial[t] = counts.get(w, 0)
            counts[w] = partial[t] + 1
            if new_sym_runs and new_sym_runs[-1][0] == w:
                new_sym_runs[-1] = (w, new_sym_runs[-1][1] + 1)
            else:
                new_sym_runs.append((w, 1))
            new_pos += 1
            inserted += 1
            if w != ENDMARKER:
                target = self._record(w)
                target.incoming[v] = target.incoming.get(v, 0) + 1
                touched.add(w)
        emit_until(_NO_LIMIT)

        rec.outgoing = new_edges
        rec.body = runs_from_symbols(new_sym_runs, new_edges)
        rec.samples = new_samples

    def _refresh_edge_ranks(self, w: int) -> None:
        """Rebuild BWT.rank(u, w) in every predecessor of w from incoming counts."""
        rec = self._records[w]
        running = 0
        for u in sorted(rec.incoming):
            pred = self._records[u]
            for k, (ew, _) in enumerate(pred.outgoing):
                if ew == w:
                    pred.outgoing[k] = (w, running)
                    break
            running += rec.incoming[u]

    def _refresh_endmarker_ranks(self) -> None:
        """Recompute the cumulative counts of the endmarker character.

        Queries never LF over the endmarker, but the header invariant
        (rank = occurrences in all earlier records) is kept exact.
        """
        running = 0
        for v in sorted(self._records):
            rec = self._records[v]
            occ = 0
            for k, (ew, _) in enumerate(rec.outgoing):
                if ew == ENDMARKER:
                    rec.outgoing[k] = (ENDMARKER, running)
                    occ = sum(l for rk, l in rec.body if rk == k)
                    break
            running += occ

    # -- freeze / merge --

    def freeze(self):
        """Snapshot into the immutable query/storage encoding."""
        from .compressed import CompressedGBWT
        return CompressedGBWT.from_source(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DynamicGBWT):
            return NotImplemented
        if (self.sequence_count, self.total_size, self.node_range) != \
                (other.sequence_count, other.total_size, other.node_range):
            return False
        keys = set(self._records) | set(other._records)
        for v in keys:
            a = self._records.get(v, DynamicRecord())
            b = other._records.get(v, DynamicRecord())
            if (a.outgoing, a.body, a.samples) != (b.outgoing, b.body, b.samples):
                return False
            if a.incoming != b.incoming:
                return False
        return True


def merge(left: DynamicGBWT, right) -> DynamicGBWT:
    """Merge two indexes whose node id ranges do not overlap.

    ``right`` may be dynamic or compressed; records are read through the
    shared view protocol.  Text ids of the right side are shifted by the
    left side's sequence count, matching the order of the concatenated
    endmarker bodies.
    """
    la, lb = left.node_range
    ra, rb = right.node_range
    left_empty = la > lb
    right_empty = ra > rb
    if not left_empty and not right_empty and la <= rb and ra <= lb:
        raise MergeError(
            f"node id ranges overlap: [{la}, {lb}] vs [{ra}, {rb}]")

    out = DynamicGBWT(sample_rate=left.sample_rate,
                      bidirectional=bool(getattr(left, "bidirectional", False)
                                         and getattr(right, "bidirectional", False)))
    shift = left.sequence_count

    def copy_side(src, id_shift: int) -> None:
        a, b = src.node_range
        for v in range(a, b + 1):
            view = src.record_view(v)
            if not view.edges and not view.runs:
                continue
            rec = out._record(v)
            rec.outgoing = [(w, 0) for w, _ in view.edges]
            rec.body = list(view.runs)
            rec.samples = [(off, tid + id_shift) for off, tid in view.samples]

    copy_side(left, 0)
    copy_side(right, shift)

    # Endmarker record: left body then right body over the merged alphabet.
    end_runs = (left.record_view(ENDMARKER).symbol_runs()
                + right.record_view(ENDMARKER).symbol_runs())
    end_edges = sorted({w for w, _ in end_runs})
    end = out._records[ENDMARKER]
    end.outgoing = [(w, 0) for w in end_edges]
    end.body = runs_from_symbols(end_runs, end.outgoing)

    _recompute_ranks_and_incoming(out)
    out.sequence_count = left.sequence_count + right.sequence_count
    out.total_size = left.total_size + right.total_size
    return out


def _recompute_ranks_and_incoming(index: DynamicGBWT) -> None:
    """Canonical single-pass rebuild of cumulative ranks and incoming lists."""
    occ_before: dict[int, int] = {}
    for rec in index._records.values():
        rec.incoming = {}
    for v in sorted(index._records):
        rec = index._records[v]
        rec.outgoing = [(w, occ_before.get(w, 0)) for w, _ in rec.outgoing]
        for w, l in rec.symbol_runs():
            occ_before[w] = occ_before.get(w, 0) + l
            if w != ENDMARKER:
                target = index._records[w]
                target.incoming[v] = target.incoming.get(v, 0) + l
