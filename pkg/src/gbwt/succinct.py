"""Bit-level building blocks: rank/select bitvectors and the 7-bit byte code.

PlainBitvector keeps the raw bits with a two-level rank directory
(512-bit superblocks, 64-bit blocks).  SparseBitvector stores only the
positions of the set bits, split into high/low parts so that space is
proportional to the number of ones.  Both answer the same rank/select
queries and are interchangeable for identical content.

Positions are 0-based; the rank argument of select is 1-based.
"""

from __future__ import annotations

import io
import struct
from typing import Iterable, Iterator, Sequence

WORD_BITS = 64
SUPERBLOCK_WORDS = 8  # 512-bit superblocks
_WORD_MASK = (1 << WORD_BITS) - 1


class MalformedEncodingError(ValueError):
    """A byte sequence is not a valid encoding (e.g. truncated varint)."""


def _popcount(x: int) -> int:
    return x.bit_count()


def _select_in_word(word: int, i: int) -> int:
    """Position of the i-th (1-based) set bit inside a 64-bit word."""
    for pos in range(WORD_BITS):
        if word & 1:
            i -= 1
            if i == 0:
                return pos
        word >>= 1
    raise ValueError("word does not contain enough set bits")


class PlainBitvector:
    """Uncompressed bitvector with O(1)-style rank and logarithmic select."""

    def __init__(self, bits: Iterable[int] = ()):
        words: list[int] = []
        n = 0
        cur = 0
        for b in bits:
            if b:
                cur |= 1 << (n % WORD_BITS)
            n += 1
            if n % WORD_BITS == 0:
                words.append(cur)
                cur = 0
        if n % WORD_BITS:
            words.append(cur)
        self._words = words
        self._n = n
        self._build_directory()

    @classmethod
    def from_ones(cls, length: int, ones: Iterable[int]) -> "PlainBitvector":
        bv = cls()
        words = [0] * ((length + WORD_BITS - 1) // WORD_BITS)
        for p in ones:
            if not 0 <= p < length:
                raise IndexError(f"set bit {p} outside universe [0, {length})")
            words[p // WORD_BITS] |= 1 << (p % WORD_BITS)
        bv._words = words
        bv._n = length
        bv._build_directory()
        return bv

    def _build_directory(self) -> None:
        # Absolute count before each superblock, relative count before each
        # word within its superblock.
        super_ranks: list[int] = []
        block_ranks: list[int] = []
        total = 0
        rel = 0
        for w, word in enumerate(self._words):
            if w % SUPERBLOCK_WORDS == 0:
                super_ranks.append(total)
                rel = 0
            block_ranks.append(rel)
            cnt = _popcount(word)
            rel += cnt
            total += cnt
        self._super_ranks = super_ranks
        self._block_ranks = block_ranks
        self._ones = total

    def __len__(self) -> int:
        return self._n

    @property
    def ones(self) -> int:
        return self._ones

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self._n:
            raise IndexError(f"bit index {i} out of range [0, {self._n})")
        return (self._words[i // WORD_BITS] >> (i % WORD_BITS)) & 1

    def __iter__(self) -> Iterator[int]:
        for i in range(self._n):
            yield self[i]

    def rank(self, i: int, b: int = 1) -> int:
        """Number of occurrences of bit b in positions [0, i)."""
        if not 0 <= i <= self._n:
            raise IndexError(f"rank position {i} out of range [0, {self._n}]")
        w = i // WORD_BITS
        if w >= len(self._words):
            r1 = self._ones
        else:
            r1 = self._super_ranks[w // SUPERBLOCK_WORDS] + self._block_ranks[w]
            if i % WORD_BITS:
                r1 += _popcount(self._words[w] & ((1 << (i % WORD_BITS)) - 1))
        return r1 if b else i - r1

    def select(self, i: int, b: int = 1) -> int:
        """Position of the i-th (1-based) occurrence of bit b."""
        total = self._ones if b else self._n - self._ones
        if not 1 <= i <= total:
            raise ValueError(f"select rank {i} out of range [1, {total}]")
        # Binary search on word boundaries via rank.
        lo, hi = 0, len(self._words)  # word index range
        while lo < hi:
            mid = (lo + hi) // 2
            r = self._word_rank(mid + 1, b)
            if r < i:
                lo = mid + 1
            else:
                hi = mid
        before = self._word_rank(lo, b)
        word = self._words[lo]
        if not b:
            word = ~word & _WORD_MASK
        return lo * WORD_BITS + _select_in_word(word, i - before)

    def _word_rank(self, w: int, b: int) -> int:
        """Rank of bit b before word boundary w."""
        if w >= len(self._words):
            return self._ones if b else self._n - self._ones
        r1 = self._super_ranks[w // SUPERBLOCK_WORDS] + self._block_ranks[w]
        return r1 if b else w * WORD_BITS - r1

    def one_positions(self) -> Iterator[int]:
        for w, word in enumerate(self._words):
            base = w * WORD_BITS
            while word:
                low = word & -word
                yield base + low.bit_length() - 1
                word ^= low

    # -- serialization: (length as 8-byte LE, payload words) --

    def write(self, sink: io.BufferedIOBase) -> None:
        sink.write(struct.pack("<Q", self._n))
        for word in self._words:
            sink.write(struct.pack("<Q", word))

    @classmethod
    def read(cls, source: io.BufferedIOBase) -> "PlainBitvector":
        raw = source.read(8)
        if len(raw) != 8:
            raise MalformedEncodingError("truncated bitvector length")
        n = struct.unpack("<Q", raw)[0]
        n_words = (n + WORD_BITS - 1) // WORD_BITS
        payload = source.read(8 * n_words)
        if len(payload) != 8 * n_words:
            raise MalformedEncodingError("truncated bitvector payload")
        bv = cls()
        bv._words = list(struct.unpack(f"<{n_words}Q", payload)) if n_words else []
        bv._n = n
        if n % WORD_BITS and bv._words and bv._words[-1] >> (n % WORD_BITS):
            raise MalformedEncodingError("nonzero padding bits in bitvector")
        bv._build_directory()
        return bv

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlainBitvector):
            return NotImplemented
        return self._n == other._n and self._words == other._words


class SparseBitvector:
    """Elias-Fano encoded positions of set bits with rank/select support.

    The low ``low_width`` bits of each position are stored verbatim; the
    high parts are stored in unary in a plain bitvector.
    """

    def __init__(self, length: int, ones: Sequence[int]):
        self._n = length
        self._m = len(ones)
        prev = -1
        for p in ones:
            if p <= prev:
                raise ValueError("set-bit positions must be strictly increasing")
            prev = p
        if prev >= length:
            raise IndexError(f"set bit {prev} outside universe [0, {length})")
        if self._m:
            self._low_width = max(1, (length // self._m).bit_length() - 1)
        else:
            self._low_width = 1
        self._lows = [p & ((1 << self._low_width) - 1) for p in ones]
        n_buckets = (length >> self._low_width) + 1 if length else 1
        high_bits = [0] * (self._m + n_buckets)
        # Bucket h ends with a zero; ones of bucket h precede that zero.
        pos = 0
        idx = 0
        for h in range(n_buckets):
            while idx < self._m and (ones[idx] >> self._low_width) == h:
                high_bits[pos] = 1
                pos += 1
                idx += 1
            pos += 1  # bucket terminator (zero)
        self._high = PlainBitvector(high_bits)

    def __len__(self) -> int:
        return self._n

    @property
    def ones(self) -> int:
        return self._m

    @property
    def low_width(self) -> int:
        return self._low_width

    def select(self, i: int, b: int = 1) -> int:
        if b == 0:
            # Rare path, only used by tests: binary search over rank.
            total0 = self._n - self._m
            if not 1 <= i <= total0:
                raise ValueError(f"select rank {i} out of range [1, {total0}]")
            lo, hi = 0, self._n - 1
            while lo < hi:
                mid = (lo + hi) // 2
                if self.rank(mid + 1, 0) < i:
                    lo = mid + 1
                else:
                    hi = mid
            return lo
        if not 1 <= i <= self._m:
            raise ValueError(f"select rank {i} out of range [1, {self._m}]")
        high = self._high.select(i, 1) - (i - 1)
        return (high << self._low_width) | self._lows[i - 1]

    def rank(self, i: int, b: int = 1) -> int:
        if not 0 <= i <= self._n:
            raise IndexError(f"rank position {i} out of range [0, {self._n}]")
        r1 = self._rank1(i)
        return r1 if b else i - r1

    def _rank1(self, i: int) -> int:
        if self._m == 0 or i == 0:
            return 0
        if i >= self._n:
            return self._m
        h = i >> self._low_width
        # Ones in buckets < h: ones before the h-th bucket terminator.
        if h == 0:
            base = 0
        else:
            base = self._high.rank(self._high.select(h, 0), 1)
        r = base
        while r < self._m:
            p = (self.select(r + 1, 1))
            if p >= i:
                break
            r += 1
        return r

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self._n:
            raise IndexError(f"bit index {i} out of range [0, {self._n})")
        return self.rank(i + 1) - self.rank(i)

    def one_positions(self) -> Iterator[int]:
        for i in range(1, self._m + 1):
            yield self.select(i, 1)

    # -- serialization: (universe, ones count, packed lows, high part) --

    def write(self, sink: io.BufferedIOBase) -> None:
        sink.write(struct.pack("<QQ", self._n, self._m))
        packed = 0
        for k, low in enumerate(self._lows):
            packed |= low << (k * self._low_width)
        n_words = (self._m * self._low_width + WORD_BITS - 1) // WORD_BITS
        for w in range(n_words):
            sink.write(struct.pack("<Q", (packed >> (w * WORD_BITS)) & _WORD_MASK))
        self._high.write(sink)

    @classmethod
    def read(cls, source: io.BufferedIOBase) -> "SparseBitvector":
        raw = source.read(16)
        if len(raw) != 16:
            raise MalformedEncodingError("truncated sparse bitvector header")
        n, m = struct.unpack("<QQ", raw)
        bv = cls.__new__(cls)
        bv._n = n
        bv._m = m
        bv._low_width = max(1, (n // m).bit_length() - 1) if m else 1
        n_words = (m * bv._low_width + WORD_BITS - 1) // WORD_BITS
        payload = source.read(8 * n_words)
        if len(payload) != 8 * n_words:
            raise MalformedEncodingError("truncated sparse bitvector lows")
        packed = 0
        for w in range(n_words):
            packed |= struct.unpack("<Q", payload[8 * w:8 * w + 8])[0] << (w * WORD_BITS)
        mask = (1 << bv._low_width) - 1
        bv._lows = [(packed >> (k * bv._low_width)) & mask for k in range(m)]
        bv._high = PlainBitvector.read(source)
        return bv

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseBitvector):
            return NotImplemented
        return (self._n == other._n and self._m == other._m
                and self._lows == other._lows and self._high == other._high)


# -- 7-bit continuation byte code --
#
# Little-endian 7-bit chunks, least significant first; 0x80 marks that the
# encoding continues in the next byte.

def varint_encode(x: int) -> bytes:
    if x < 0:
        raise ValueError("cannot encode a negative integer")
    out = bytearray()
    while True:
        chunk = x & 0x7F
        x >>= 7
        if x:
            out.append(chunk | 0x80)
        else:
            out.append(chunk)
            return bytes(out)


def varint_decode(buf: bytes, offset: int = 0) -> tuple[int, int]:
    """Decode one integer starting at ``offset``; return (value, next offset)."""
    x = 0
    shift = 0
    while True:
        if offset >= len(buf):
            raise MalformedEncodingError("truncated varint: continuation past end of buffer")
        byte = buf[offset]
        offset += 1
        x |= (byte & 0x7F) << shift
        if not byte & 0x80:
            return x, offset
        shift += 7
