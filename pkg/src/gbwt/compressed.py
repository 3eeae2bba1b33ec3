"""Immutable byte-encoded index: record directory, id store, disk format.

Records are byte arrays: a varint header (outdegree, then differentially
encoded edges with their cumulative counts) followed by run tokens.  For
small local alphabets a run packs its symbol and part of its length into
one byte; large alphabets fall back to a varint pair.  All records are
concatenated and located through a sparse bitvector of start positions.

Stored text identifiers live in a global three-bitvector structure so
that records stay cheap to decompress.
"""

from __future__ import annotations

import io
import struct
from typing import Iterable

from .records import ENDMARKER, RecordView
from .succinct import (MalformedEncodingError, PlainBitvector, SparseBitvector,
                       varint_encode)

MAGIC = b"GBWT"
FORMAT_VERSION = 1
FLAG_BIDIRECTIONAL = 1

PACKED_ALPHABET_LIMIT = 127  # larger local alphabets use varint run pairs


class CorruptIndexError(ValueError):
    """Serialized index violates a structural invariant."""


class UnsupportedFormatError(ValueError):
    """Bad magic bytes or unknown format version."""


# -- record byte codec --

def encode_record(edges: list[tuple[int, int]], runs: list[tuple[int, int]]) -> bytes:
    """Encode one record; ``runs`` are (edge index, length) pairs."""
    out = bytearray()
    sigma = len(edges)
    out += varint_encode(sigma)
    prev_w = 0
    for w, rank in edges:
        out += varint_encode(w - prev_w)
        out += varint_encode(rank)
        prev_w = w
    if sigma <= PACKED_ALPHABET_LIMIT:
        for k, length in runs:
            r_max = (254 - k) // sigma
            r = min(length - 1, r_max)
            out.append(k + sigma * r)
            if r == r_max:
                out += varint_encode(length - 1 - r)
    else:
        for k, length in runs:
            out += varint_encode(k)
            out += varint_encode(length - 1)
    return bytes(out)


def decode_record(node: int, buf: bytes, start: int, end: int) -> RecordView:
    """Decode the record occupying buf[start:end]."""

    def read_varint(pos: int) -> tuple[int, int]:
        x = 0
        shift = 0
        while True:
            if pos >= end:
                raise MalformedEncodingError("varint crosses record boundary")
            byte = buf[pos]
            pos += 1
            x |= (byte & 0x7F) << shift
            if not byte & 0x80:
                return x, pos
            shift += 7

    try:
        sigma, pos = read_varint(start)
    except MalformedEncodingError as exc:
        raise CorruptIndexError(f"record {node}: {exc}") from exc
    edges: list[tuple[int, int]] = []
    prev_w = 0
    try:
        for k in range(sigma):
            delta, pos = read_varint(pos)
            rank, pos = read_varint(pos)
            w = prev_w + delta
            if k > 0 and delta == 0:
                raise CorruptIndexError(
                    f"record {node}: outgoing edges not strictly increasing")
            edges.append((w, rank))
            prev_w = w
        runs: list[tuple[int, int]] = []
        if sigma == 0:
            if pos != end:
                raise CorruptIndexError(f"record {node}: trailing bytes in empty record")
            return RecordView(node, [], [])
        if sigma <= PACKED_ALPHABET_LIMIT:
            while pos < end:
                byte = buf[pos]
                pos += 1
                k = byte % sigma
                r = byte // sigma
                r_max = (254 - k) // sigma
                if r > r_max:
                    raise CorruptIndexError(
                        f"record {node}: run token {byte} out of range")
                length = r + 1
                if r == r_max:
                    extra, pos = read_varint(pos)
                    length += extra
                runs.append((k, length))
        else:
            while pos < end:
                k, pos = read_varint(pos)
                if k >= sigma:
                    raise CorruptIndexError(
                        f"record {node}: run symbol {k} outside local alphabet")
                length, pos = read_varint(pos)
                runs.append((k, length + 1))
        if pos != end:
            raise CorruptIndexError(f"record {node}: decode overran record boundary")
    except MalformedEncodingError as exc:
        raise CorruptIndexError(f"record {node}: {exc}") from exc
    return RecordView(node, edges, runs)


class HaplotypeIdStore:
    """Global sampled text identifiers behind three bitvectors.

    ``records_marked`` flags the records that carry identifiers; the
    sparse vector ``range_starts`` marks where each such record's offset
    range begins inside a single concatenated span, and ``sampled`` has a
    one wherever an identifier is stored.
    """

    def __init__(self, records_marked: PlainBitvector,
                 range_starts: SparseBitvector,
                 sampled: SparseBitvector,
                 ids: list[int]):
        self.records_marked = records_marked   # B_s
        self.range_starts = range_starts       # B_r
        self.sampled = sampled                 # B_o
        self.ids = ids

    @classmethod
    def build(cls, n_records: int,
              per_record: Iterable[tuple[int, int, list[tuple[int, int]]]]
              ) -> "HaplotypeIdStore":
        """Build from (record index, record length, samples) triples."""
        marked: list[int] = []
        starts: list[int] = []
        sample_pos: list[int] = []
        ids: list[int] = []
        span = 0
        for rec_idx, length, samples in per_record:
            if not samples:
                continue
            marked.append(rec_idx)
            starts.append(span)
            for off, tid in samples:
                sample_pos.append(span + off)
                ids.append(tid)
            span += length
        return cls(
            PlainBitvector.from_ones(n_records, marked),
            SparseBitvector(span, starts),
            SparseBitvector(span, sample_pos),
            ids,
        )

    def lookup(self, rec_idx: int, offset: int) -> int | None:
        if not self.records_marked[rec_idx]:
            return None
        rank = self.records_marked.rank(rec_idx, 1)
        start = self.range_starts.select(rank + 1, 1)
        pos = start + offset
        if pos >= len(self.sampled) or not self.sampled[pos]:
            return None
        return self.ids[self.sampled.rank(pos, 1)]

    def record_samples(self, rec_idx: int, length: int) -> list[tuple[int, int]]:
        """All (offset, text id) pairs stored for one record."""
        if not self.records_marked[rec_idx]:
            return []
        rank = self.records_marked.rank(rec_idx, 1)
        start = self.range_starts.select(rank + 1, 1)
        lo = self.sampled.rank(start, 1)
        hi = self.sampled.rank(min(start + length, len(self.sampled)), 1)
        return [(self.sampled.select(i + 1, 1) - start, self.ids[i])
                for i in range(lo, hi)]


class CompressedGBWT:
    """Immutable query/storage encoding of the record-partitioned BWT."""

    def __init__(self, record_bytes: bytes, directory: SparseBitvector,
                 id_store: HaplotypeIdStore, sequence_count: int,
                 total_size: int, sample_rate: int, bidirectional: bool,
                 min_node: int, max_node: int):
        self._bytes = record_bytes
        self._directory = directory
        self._ids = id_store
        self.sequence_count = sequence_count
        self.total_size = total_size
        self.sample_rate = sample_rate
        self.bidirectional = bidirectional
        self._min_node = min_node
        self._max_node = max_node

    # -- construction from any record source --

    @classmethod
    def from_source(cls, src) -> "CompressedGBWT":
        a, b = src.node_range
        n_records = (b - a + 2) if a <= b else 1
        chunks: list[bytes] = []
        starts: list[int] = []
        sample_triples: list[tuple[int, int, list[tuple[int, int]]]] = []
        pos = 0
        for rec_idx in range(n_records):
            v = ENDMARKER if rec_idx == 0 else a + rec_idx - 1
            view = src.record_view(v)
            encoded = encode_record(view.edges, view.runs)
            starts.append(pos)
            chunks.append(encoded)
            pos += len(encoded)
            sample_triples.append((rec_idx, view.length, view.samples))
        record_bytes = b"".join(chunks)
        directory = SparseBitvector(len(record_bytes) + 1, starts)
        id_store = HaplotypeIdStore.build(n_records, sample_triples)
        return cls(record_bytes, directory, id_store,
                   src.sequence_count, src.total_size, src.sample_rate,
                   bool(getattr(src, "bidirectional", False)),
                   a if a <= b else 1, b if a <= b else 0)

    # -- record source protocol --

    @property
    def node_range(self) -> tuple[int, int]:
        return (self._min_node, self._max_node)

    def in_range(self, v: int) -> bool:
        a, b = self.node_range
        return v == ENDMARKER or a <= v <= b

    def _record_index(self, v: int) -> int:
        a, b = self.node_range
        if v == ENDMARKER:
            return 0
        if not a <= v <= b:
            raise IndexError(f"node {v} outside record range [{a}, {b}]")
        return v - a + 1

    @property
    def record_count(self) -> int:
        return self._directory.ones

    def _record_span(self, rec_idx: int) -> tuple[int, int]:
        start = self._directory.select(rec_idx + 1, 1)
        if rec_idx + 1 < self._directory.ones:
            end = self._directory.select(rec_idx + 2, 1)
        else:
            end = len(self._bytes)
        return start, end

    def record_view(self, v: int) -> RecordView:
        rec_idx = self._record_index(v)
        start, end = self._record_span(rec_idx)
        view = decode_record(v, self._bytes, start, end)
        view.samples = self._ids.record_samples(rec_idx, view.length)
        return view

    def sampled_id(self, v: int, i: int) -> int | None:
        rec_idx = self._record_index(v)
        start, end = self._record_span(rec_idx)
        length = decode_record(v, self._bytes, start, end).length
        if not 0 <= i < length:
            raise IndexError(f"offset {i} out of range in record {v}")
        return self._ids.lookup(rec_idx, i)

    def node_ids(self) -> Iterable[int]:
        a, b = self.node_range
        for v in range(a, b + 1):
            if self.record_view(v).runs:
                yield v

    def body_bytes(self) -> int:
        """Size of the concatenated record section, in bytes."""
        return len(self._bytes)

    # -- serialization --

    def serialize(self, sink: io.BufferedIOBase) -> None:
        sink.write(MAGIC)
        sink.write(struct.pack("<I", FORMAT_VERSION))
        flags = FLAG_BIDIRECTIONAL if self.bidirectional else 0
        header = struct.pack("<QQQQQQ", self.sequence_count, self.total_size,
                             self.sample_rate, flags,
                             self._min_node, self._max_node)
        _write_section(sink, header)
        _write_section(sink, _to_bytes(self._directory))
        _write_section(sink, self._bytes)
        _write_section(sink, _to_bytes(self._ids.records_marked))
        _write_section(sink, _to_bytes(self._ids.range_starts))
        _write_section(sink, _to_bytes(self._ids.sampled))
        _write_section(sink, b"".join(struct.pack("<Q", i) for i in self._ids.ids))

    def to_bytes(self) -> bytes:
        buf = io.BytesIO()
        self.serialize(buf)
        return buf.getvalue()

    @classmethod
    def deserialize(cls, source: io.BufferedIOBase) -> "CompressedGBWT":
        magic = source.read(4)
        if magic != MAGIC:
            raise UnsupportedFormatError(f"bad magic {magic!r}")
        raw = source.read(4)
        if len(raw) != 4:
            raise CorruptIndexError("truncated version field")
        version = struct.unpack("<I", raw)[0]
        if version != FORMAT_VERSION:
            raise UnsupportedFormatError(f"unsupported format version {version}")
        header = _read_section(source, "header")
        if len(header) != 48:
            raise CorruptIndexError(f"header section is {len(header)} bytes, expected 48")
        m, total, d, flags, a, b = struct.unpack("<QQQQQQ", header)
        directory = _from_bytes(SparseBitvector, _read_section(source, "directory"))
        record_bytes = _read_section(source, "records")
        marked = _from_bytes(PlainBitvector, _read_section(source, "sample records"))
        starts = _from_bytes(SparseBitvector, _read_section(source, "sample ranges"))
        sampled = _from_bytes(SparseBitvector, _read_section(source, "sample offsets"))
        ids_raw = _read_section(source, "sample ids")
        if len(ids_raw) % 8:
            raise CorruptIndexError("sample id section length not a multiple of 8")
        ids = [struct.unpack("<Q", ids_raw[k:k + 8])[0] for k in range(0, len(ids_raw), 8)]
        index = cls(record_bytes, directory,
                    HaplotypeIdStore(marked, starts, sampled, ids),
                    m, total, d, bool(flags & FLAG_BIDIRECTIONAL), a, b)
        index.validate()
        return index

    @classmethod
    def from_bytes(cls, data: bytes) -> "CompressedGBWT":
        return cls.deserialize(io.BytesIO(data))

    def validate(self) -> None:
        """Full structural check: decodability and count consistency.

        Raises CorruptIndexError on the first violation.  Checks that
        every record decodes exactly to its byte span, that cumulative
        edge counts match a recount over all earlier records, and that
        record lengths balance against total symbol occurrences.
        """
        a, b = self.node_range
        n_records = (b - a + 2) if a <= b else 1
        if self._directory.ones != n_records:
            raise CorruptIndexError(
                f"directory marks {self._directory.ones} records, expected {n_records}")
        if len(self._directory) != len(self._bytes) + 1:
            raise CorruptIndexError("directory universe does not match record bytes")
        occ_before: dict[int, int] = {}
        lengths: dict[int, int] = {}
        order = [ENDMARKER] + list(range(a, b + 1)) if a <= b else [ENDMARKER]
        for v in order:
            rec_idx = self._record_index(v)
            start, end = self._record_span(rec_idx)
            view = decode_record(v, self._bytes, start, end)
            for w, rank in view.edges:
                if rank != occ_before.get(w, 0):
                    raise CorruptIndexError(
                        f"record {v}: stored count {rank} for edge {w} "
                        f"!= recount {occ_before.get(w, 0)}")
            for w, l in view.symbol_runs():
                occ_before[w] = occ_before.get(w, 0) + l
            lengths[v] = view.length
        total_rows = sum(lengths.values())
        if lengths.get(ENDMARKER, 0) != self.sequence_count:
            raise CorruptIndexError(
                f"endmarker record length {lengths.get(ENDMARKER, 0)} "
                f"!= sequence count {self.sequence_count}")
        if total_rows != self.total_size + self.sequence_count:
            raise CorruptIndexError(
                f"total record length {total_rows} != declared size "
                f"{self.total_size + self.sequence_count}")
        for w, occ in occ_before.items():
            expected = self.sequence_count if w == ENDMARKER else lengths.get(w)
            if expected is None:
                raise CorruptIndexError(f"body references unknown node {w}")
            if occ != expected:
                raise CorruptIndexError(
                    f"node {w}: {occ} body occurrences != record length {expected}")
        if self.sampled_count() != len(self._ids.ids):
            raise CorruptIndexError("sample offset count != stored id count")

    def sampled_count(self) -> int:
        return self._ids.sampled.ones

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CompressedGBWT):
            return NotImplemented
        return self.to_bytes() == other.to_bytes()


def _write_section(sink: io.BufferedIOBase, payload: bytes) -> None:
    sink.write(struct.pack("<Q", len(payload)))
    sink.write(payload)


def _read_section(source: io.BufferedIOBase, name: str) -> bytes:
    raw = source.read(8)
    if len(raw) != 8:
        raise CorruptIndexError(f"truncated length of section '{name}'")
    n = struct.unpack("<Q", raw)[0]
    if n > (1 << 48):
        raise CorruptIndexError(f"implausible length {n} for section '{name}'")
    payload = source.read(n)
    if len(payload) != n:
        raise CorruptIndexError(f"truncated section '{name}'")
    return payload


def _to_bytes(structure) -> bytes:
    buf = io.BytesIO()
    structure.write(buf)
    return buf.getvalue()


def _from_bytes(cls, data: bytes):
    buf = io.BytesIO(data)
    try:
        out = cls.read(buf)
    except (MalformedEncodingError, ValueError) as exc:
        raise CorruptIndexError(str(exc)) from exc
    if buf.read(1):
        raise CorruptIndexError("trailing bytes after bitvector payload")
    return out
