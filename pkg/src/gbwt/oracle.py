"""Brute-force reference implementation used for verification.

Builds the multi-text BWT of a path collection by literally sorting all
reverse prefixes, and answers find/locate/extract by direct scans over
the original paths.  Deliberately simple and quadratic-ish: this is the
independent side of every equivalence check, so it must not share code
with the real index.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

ENDMARKER = 0


@dataclass(frozen=True)
class OracleRow:
    """One row of the reverse-prefix sorted BWT."""
    record: int      # node the prefix ends with (0 for the empty prefix)
    char: int        # next node on the path, or 0 at the path end
    text_id: int
    path_pos: int    # index of the record node within its path; -1 in record 0


class BwtOracle:
    """Naive multi-text BWT over a collection of paths."""

    def __init__(self, paths: Sequence[Sequence[int]]):
        self.paths = [tuple(p) for p in paths]
        keyed = []
        for j, path in enumerate(self.paths):
            for i in range(len(path) + 1):
                # Reverse prefix: nodes before position i in reverse order,
                # terminated by this text's endmarker.  Endmarkers sort
                # below every node and among themselves by text id.
                key = tuple(reversed(path[:i])) + (ENDMARKER, j)
                char = path[i] if i < len(path) else ENDMARKER
                record = path[i - 1] if i > 0 else ENDMARKER
                keyed.append((key, OracleRow(record, char, j, i - 1)))
        keyed.sort(key=lambda kr: kr[0])
        self.rows = [row for _, row in keyed]

    def record_body(self, v: int) -> list[int]:
        """BWT characters of the record for node v (0 = endmarker record)."""
        return [r.char for r in self.rows if r.record == v]

    def record_rows(self, v: int) -> list[OracleRow]:
        return [r for r in self.rows if r.record == v]

    def records(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for r in self.rows:
            out.setdefault(r.record, []).append(r.char)
        return out

    def cumulative_rank(self, v: int, w: int) -> int:
        """Occurrences of w in all records v' < v."""
        return sum(1 for r in self.rows if r.record < v and r.char == w)

    def find_count(self, pattern: Sequence[int]) -> int:
        """Occurrences of the pattern as a contiguous subpath, by scanning."""
        pattern = tuple(pattern)
        if not pattern:
            return len(self.paths)
        count = 0
        for path in self.paths:
            for i in range(len(path) - len(pattern) + 1):
                if path[i:i + len(pattern)] == pattern:
                    count += 1
        return count

    def locate(self, pattern: Sequence[int]) -> Counter:
        """Multiset of text ids with one entry per pattern occurrence."""
        pattern = tuple(pattern)
        hits: Counter = Counter()
        for j, path in enumerate(self.paths):
            if not pattern:
                hits[j] += 1
                continue
            for i in range(len(path) - len(pattern) + 1):
                if path[i:i + len(pattern)] == pattern:
                    hits[j] += 1
        return hits

    def document_array(self, v: int) -> list[int]:
        """Text id per row of the record for node v."""
        return [r.text_id for r in self.rows if r.record == v]

    def extract(self, j: int) -> tuple[int, ...]:
        return self.paths[j]

    def sampled_offsets(self, v: int, d: int) -> list[tuple[int, int]]:
        """(offset, text id) pairs the index should sample in record v."""
        out = []
        for offset, row in enumerate(self.record_rows(v)):
            if row.path_pos < 0:
                continue
            last = row.path_pos == len(self.paths[row.text_id]) - 1
            if last or row.path_pos % d == 0:
                out.append((offset, row.text_id))
        return out
