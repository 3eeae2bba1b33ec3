"""Batch construction and merging against the naive oracle."""

import random

import pytest

from conftest import CORPUS_A, build_index, random_collection
from gbwt.dynamic import DynamicGBWT, MergeError, merge
from gbwt.oracle import BwtOracle
from gbwt.records import ENDMARKER


def expanded_body(index, v):
    body = []
    for w, length in index.record_view(v).symbol_runs():
        body.extend([w] * length)
    return body


def assert_matches_oracle(index, paths, sample_rate):
    oracle = BwtOracle(paths)
    expected = oracle.records()
    nodes = set(index.node_ids()) | {ENDMARKER}
    assert nodes == set(expected)
    for v, body in expected.items():
        assert expanded_body(index, v) == body, f"record {v}"
        for w in set(body):
            assert index.record_view(v).offset_of(w) == oracle.cumulative_rank(v, w)
        if v != ENDMARKER:
            assert index.record_view(v).samples == oracle.sampled_offsets(v, sample_rate)


def test_corpus_a_records(corpus_a_dynamic):
    assert corpus_a_dynamic.sequence_count == 3
    assert corpus_a_dynamic.total_size == 14
    assert_matches_oracle(corpus_a_dynamic, CORPUS_A, 1)
    # Record 4 sees node 5 once in earlier records, node 6 never.
    assert corpus_a_dynamic.record_view(4).edges == [(5, 1), (6, 0)]
    # The endmarker record lists each path's first node in text order.
    assert expanded_body(corpus_a_dynamic, ENDMARKER) == [1, 1, 1]


def test_empty_index_properties():
    index = DynamicGBWT()
    assert index.sequence_count == 0
    assert index.node_range == (1, 0)
    assert index.record_view(ENDMARKER).length == 0
    with pytest.raises(IndexError):
        index.record_view(3)


def test_insert_rejects_bad_texts():
    index = DynamicGBWT()
    with pytest.raises(ValueError):
        index.insert(())
    with pytest.raises(ValueError):
        index.insert((1, 0, 2))
    assert index.sequence_count == 0


def test_bad_sample_rate():
    with pytest.raises(ValueError):
        DynamicGBWT(sample_rate=0)


@pytest.mark.parametrize("seed", range(6))
def test_random_collections_match_oracle(seed):
    rng = random.Random(seed)
    for _ in range(25):
        paths = random_collection(rng)
        d = rng.choice([1, 2, 3, 1024])
        index = build_index(paths, sample_rate=d)
        assert_matches_oracle(index, paths, d)


def test_batch_partition_invariance():
    rng = random.Random(99)
    for _ in range(30):
        paths = random_collection(rng)
        whole = build_index(paths, sample_rate=2)
        pieces = DynamicGBWT(sample_rate=2)
        start = 0
        while start < len(paths):
            stop = rng.randint(start + 1, len(paths))
            pieces.insert_batch(paths[start:stop])
            start = stop
        assert pieces == whole
        one_by_one = DynamicGBWT(sample_rate=2)
        for p in paths:
            one_by_one.insert(p)
        assert one_by_one == whole


def test_merge_equals_joint_build():
    rng = random.Random(7)
    for _ in range(25):
        left_paths = [tuple(rng.randint(1, 6) for _ in range(rng.randint(1, 8)))
                      for _ in range(rng.randint(1, 4))]
        right_paths = [tuple(rng.randint(7, 12) for _ in range(rng.randint(1, 8)))
                       for _ in range(rng.randint(1, 4))]
        left = build_index(left_paths, sample_rate=2)
        right = build_index(right_paths, sample_rate=2)
        joint = build_index(left_paths + right_paths, sample_rate=2)
        assert merge(left, right) == joint
        # The right side may come frozen; views go through the same protocol.
        assert merge(left, right.freeze()) == joint


def test_merge_rejects_overlapping_ranges():
    left = build_index([(1, 2, 3)])
    right = build_index([(3, 4)])
    with pytest.raises(MergeError, match="overlap"):
        merge(left, right)


def test_merge_with_empty_side():
    index = build_index(CORPUS_A)
    empty = DynamicGBWT(sample_rate=1024)
    assert merge(empty, index) == index
    assert merge(index, empty) == index


def test_freeze_preserves_views(corpus_a_dynamic, corpus_a_frozen):
    for v in [ENDMARKER, *corpus_a_dynamic.node_ids()]:
        dyn = corpus_a_dynamic.record_view(v)
        frz = corpus_a_frozen.record_view(v)
        assert (dyn.edges, dyn.symbol_runs(), dyn.samples) == \
               (frz.edges, frz.symbol_runs(), frz.samples)
