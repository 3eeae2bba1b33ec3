"""Decoded per-node record views shared by the dynamic and compressed indexes.

A record is the slice of the BWT belonging to one node: a header listing
the outgoing edges with their cumulative occurrence counts, and a
run-length encoded body whose symbols are ranks into that edge list.
Queries only ever need this decoded view, so both index encodings expose
their records through it.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field

ENDMARKER = 0


@dataclass
class RecordView:
    """Immutable decoded record: edge list plus run-length body."""

    node: int
    edges: list[tuple[int, int]]       # (successor, cumulative rank), sorted
    runs: list[tuple[int, int]]        # (edge index, length >= 1)
    samples: list[tuple[int, int]] = field(default_factory=list)  # (offset, text id)
    _length: int | None = None

    @property
    def length(self) -> int:
        if self._length is None:
            self._length = sum(l for _, l in self.runs)
        return self._length

    @property
    def outdegree(self) -> int:
        return len(self.edges)

    def edge_index(self, w: int) -> int | None:
        """Index of successor w in the edge list, or None."""
        edges = self.edges
        k = bisect_left(edges, (w,))
        if k < len(edges) and edges[k][0] == w:
            return k
        return None

    def offset_of(self, w: int) -> int | None:
        """Cumulative occurrences of w in all records before this one."""
        k = self.edge_index(w)
        return None if k is None else self.edges[k][1]

    def local_rank(self, i: int, w: int) -> int:
        """Occurrences of w in the body before offset i, by run scan."""
        k = self.edge_index(w)
        if k is None:
            return 0
        count = 0
        pos = 0
        for rk, rl in self.runs:
            if pos >= i:
                break
            take = min(rl, i - pos)
            if rk == k:
                count += take
            pos += rl
        return count

    def lf(self, i: int, w: int) -> int | None:
        """Offset of position (node, i) within record w after one LF step."""
        k = self.edge_index(w)
        if k is None:
            return None
        return self.edges[k][1] + self.local_rank(i, w)

    def lf_range(self, sp: int, ep: int, w: int) -> tuple[int, int] | None:
        """Extend the range [sp, ep] with successor w; None when empty."""
        k = self.edge_index(w)
        if k is None:
            return None
        base = self.edges[k][1]
        new_sp = base + self.local_rank(sp, w)
        new_ep = base + self.local_rank(ep + 1, w) - 1
        if new_sp > new_ep:
            return None
        return new_sp, new_ep

    def char_at(self, i: int) -> int:
        """Successor node stored at body offset i (0 for the endmarker)."""
        pos = 0
        for rk, rl in self.runs:
            pos += rl
            if i < pos:
                return self.edges[rk][0]
        raise IndexError(f"offset {i} out of range [0, {self.length}) in record {self.node}")

    def symbol_runs(self) -> list[tuple[int, int]]:
        """Body runs with edge indexes replaced by successor node ids."""
        return [(self.edges[rk][0], rl) for rk, rl in self.runs]

    def sample_at(self, i: int) -> int | None:
        """Stored text id at offset i, if this offset is sampled."""
        samples = self.samples
        k = bisect_left(samples, (i, -1))
        if k < len(samples) and samples[k][0] == i:
            return samples[k][1]
        return None


def runs_from_symbols(symbol_runs: list[tuple[int, int]],
                      edges: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Re-index symbol-space runs against an edge list, merging neighbours."""
    index = {w: k for k, (w, _) in enumerate(edges)}
    out: list[tuple[int, int]] = []
    for w, l in symbol_runs:
        if l <= 0:
            continue
        k = index[w]
        if out and out[-1][0] == k:
            out[-1] = (k, out[-1][1] + l)
        else:
            out.append((k, l))
    return out
