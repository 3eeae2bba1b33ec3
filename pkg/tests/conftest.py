"""Shared fixtures: the small worked corpus and random collection makers."""

import random

import pytest

from gbwt.dynamic import DynamicGBWT

# Three haplotype paths over a nine-edge graph; small enough to check by
# hand, rich enough to exercise shared prefixes and branching records.
CORPUS_A = [(1, 2, 4, 6, 7), (1, 2, 5, 7), (1, 3, 4, 5, 7)]


def build_index(paths, sample_rate=1, bidirectional=False):
    index = DynamicGBWT(sample_rate=sample_rate, bidirectional=bidirectional)
    index.insert_batch(paths)
    return index


def random_collection(rng: random.Random, max_node=15, max_paths=8, max_len=12):
    """A throwaway path collection; cycles and duplicate paths welcome."""
    top = rng.randint(1, max_node)
    count = rng.randint(1, max_paths)
    paths = []
    for _ in range(count):
        length = rng.randint(1, max_len)
        paths.append(tuple(rng.randint(1, top) for _ in range(length)))
    if count > 1 and rng.random() < 0.2:
        paths[-1] = paths[0]
    return paths


@pytest.fixture
def corpus_a_dynamic():
    return build_index(CORPUS_A, sample_rate=1)


@pytest.fixture
def corpus_a_frozen(corpus_a_dynamic):
    return corpus_a_dynamic.freeze()
