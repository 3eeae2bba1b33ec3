"""find/locate/extract and bidirectional search against the scan oracle."""

import random
from collections import Counter

import pytest

from conftest import CORPUS_A, build_index, random_collection
from gbwt import query
from gbwt.model import encode_oriented, reverse_path
from gbwt.oracle import BwtOracle
from gbwt.records import ENDMARKER


def all_window_patterns(paths, max_len=3):
    patterns = set()
    for path in paths:
        for width in range(1, max_len + 1):
            for i in range(len(path) - width + 1):
                patterns.add(path[i:i + width])
    return patterns


def check_against_oracle(index, paths, rng):
    oracle = BwtOracle(paths)
    patterns = all_window_patterns(paths)
    top = max(max(p) for p in paths)
    for _ in range(8):
        patterns.add(tuple(rng.randint(1, top + 3)
                           for _ in range(rng.randint(1, 3))))
    for pattern in patterns:
        state = query.find(index, pattern)
        assert state.size == oracle.find_count(pattern), pattern
        expected = oracle.locate(pattern)
        direct = query.locate_direct(index, state) if not state.empty else Counter()
        assert direct == expected, pattern
        assert query.locate_fast(index, state) == expected, pattern
    for j, path in enumerate(paths):
        assert query.extract(index, j) == path


@pytest.mark.parametrize("seed", range(5))
def test_queries_match_oracle(seed):
    rng = random.Random(seed)
    for _ in range(12):
        paths = random_collection(rng)
        index = build_index(paths, sample_rate=rng.choice([1, 2, 1024]))
        check_against_oracle(index, paths, rng)
        check_against_oracle(index.freeze(), paths, rng)


def test_find_conventions(corpus_a_frozen):
    # The empty pattern matches every path once.
    state = query.find(corpus_a_frozen, ())
    assert (state.node, state.size) == (ENDMARKER, 3)
    # The endmarker is not searchable, nor are out-of-range nodes.
    assert query.find(corpus_a_frozen, (0,)).empty
    assert query.find(corpus_a_frozen, (99,)).empty
    assert query.find(corpus_a_frozen, (2, 6)).empty


def test_locate_counts_repeated_occurrences():
    # Node 7 appears twice in text 0 and twice in text 2; walks that start
    # at different depths pass through shared rows and must all be counted.
    paths = [(7, 1, 7), (3, 3), (2, 7, 7)]
    index = build_index(paths, sample_rate=1024)
    oracle = BwtOracle(paths)
    for src in (index, index.freeze()):
        for pattern in [(7,), (3,), (7, 7)]:
            state = query.find(src, pattern)
            expected = oracle.locate(pattern)
            assert query.locate_direct(src, state) == expected
            assert query.locate_fast(src, state) == expected


def test_extract_bounds(corpus_a_frozen):
    with pytest.raises(IndexError):
        query.extract(corpus_a_frozen, 3)
    with pytest.raises(IndexError):
        query.extract(corpus_a_frozen, -1)


def test_lf_steps(corpus_a_dynamic):
    pos = query.Position(ENDMARKER, 0)
    stepped = query.lf(corpus_a_dynamic, pos, 1)
    assert stepped == query.Position(1, 0)
    with pytest.raises(ValueError):
        query.lf(corpus_a_dynamic, pos, ENDMARKER)


def encoded_corpus():
    return [tuple(encode_oriented(v, 0) for v in path) for path in CORPUS_A]


def bidirectional_index():
    paths = encoded_corpus()
    texts = []
    for p in paths:
        texts.append(p)
        texts.append(reverse_path(p))
    return build_index(texts, sample_rate=1, bidirectional=True), paths


def test_bidirectional_find_matches_plain_find():
    index, paths = bidirectional_index()
    patterns = all_window_patterns(paths, max_len=4)
    for pattern in patterns:
        state = query.bd_find(index, pattern)
        fwd = query.find(index, pattern)
        bwd = query.find(index, reverse_path(pattern))
        assert (state.forward, state.backward.size) == (fwd, bwd.size)
        if not state.empty:
            assert (state.backward.sp, state.backward.ep) == (bwd.sp, bwd.ep)


def test_bidirectional_backward_extension():
    index, paths = bidirectional_index()
    for pattern in all_window_patterns(paths, max_len=3):
        for lead in {p[i] for p in paths for i in range(len(p))}:
            grown = query.bd_extend_backward(index, query.bd_find(index, pattern), lead)
            direct = query.bd_find(index, (lead,) + pattern)
            assert grown == direct


def test_bidirectional_requires_flag(corpus_a_frozen):
    with pytest.raises(query.UnsupportedOperationError):
        query.bd_find(corpus_a_frozen, (2,))
    index, _ = bidirectional_index()
    with pytest.raises(ValueError):
        query.bd_find(index, ())
