"""Complement components, maximal path search, tries, and id restoration."""

import itertools
import random

import pytest

from conftest import CORPUS_A, build_index
from gbwt import unfold
from gbwt.model import Graph, encode_oriented, reverse_path


def graph_from_paths(paths, oriented=False):
    g = Graph(orientation_closed=oriented)
    for path in paths:
        g.add_node(path[0])
        for u, v in zip(path, path[1:]):
            g.add_edge(u, v)
    return g


def prune_nodes(graph, removed, oriented=False):
    drop = set(removed)

    def keep(v):
        return (v // 2 if oriented else v) not in drop

    pruned = Graph(orientation_closed=oriented)
    for v in graph.nodes:
        if keep(v):
            pruned.add_node(v)
    for u, v in graph.edges():
        if keep(u) and keep(v):
            pruned.add_edge(u, v)
    return pruned


@pytest.fixture
def pruned_corpus_a():
    graph = graph_from_paths(CORPUS_A)
    return graph, prune_nodes(graph, {4, 5, 6})


def test_components_on_pruned_corpus_a(pruned_corpus_a):
    graph, pruned = pruned_corpus_a
    components = unfold.complement_components(graph, pruned)
    assert len(components) == 1
    comp = components[0]
    assert comp.border == {2, 3, 7}
    assert comp.internal == {4, 5, 6}
    assert comp.nodes == {2, 3, 4, 5, 6, 7}


def test_nothing_pruned_gives_no_components():
    graph = graph_from_paths(CORPUS_A)
    assert unfold.complement_components(graph, graph) == []


def test_disjoint_pruned_regions_give_two_components():
    paths = [(1, 2, 3, 4), (10, 11, 12, 13)]
    graph = graph_from_paths(paths)
    pruned = prune_nodes(graph, {2, 11})
    components = unfold.complement_components(graph, pruned)
    assert len(components) == 2
    assert components[0].nodes == {1, 2, 3}
    assert components[1].nodes == {10, 11, 12}


def test_maximal_paths_on_corpus_a(pruned_corpus_a):
    graph, pruned = pruned_corpus_a
    index = build_index(CORPUS_A, sample_rate=4)
    comp = unfold.complement_components(graph, pruned)[0]
    found = unfold.maximal_paths(comp, index)
    assert [m.nodes for m in found] == [(2, 4, 6, 7), (2, 5, 7), (3, 4, 5, 7)]
    assert all(m.kind == unfold.BORDER_TO_BORDER for m in found)


def test_unsupported_component_yields_no_paths():
    # Node 8 exists in the graph but no indexed path ever visits it.
    paths = [(1, 2)]
    graph = graph_from_paths(paths)
    graph.add_edge(2, 8)
    index = build_index(paths)
    pruned = prune_nodes(graph, {8})
    comp = unfold.complement_components(graph, pruned)[0]
    assert unfold.maximal_paths(comp, index) == []


def test_build_unfolded_duplicates_and_splits(pruned_corpus_a):
    graph, pruned = pruned_corpus_a
    index = build_index(CORPUS_A, sample_rate=4)
    comp = unfold.complement_components(graph, pruned)[0]
    found = unfold.maximal_paths(comp, index)
    built = unfold.build_unfolded(found, comp, itertools.count(8))
    # Four duplicates: node 4 twice (two prefix branches), 5 and 6 once.
    assert sorted(built.mapping.values()) == [4, 4, 5, 6]
    # Borders 2, 3, 7 are reused, never duplicated.
    assert set(built.mapping.values()).isdisjoint({2, 3, 7})
    # One crossing edge per maximal path, joining prefix to suffix.
    assert len(built.crossing_edges) == 3
    # Suffix (5, 7) is shared between two paths through the suffix trie.
    assert built.suffix_trie[(7,)] == 7
    assert len([k for k in built.suffix_trie if k[-1] == 5]) == 1


def test_single_internal_node_path():
    paths = [(1, 5, 9)]
    graph = graph_from_paths(paths)
    index = build_index(paths)
    pruned = prune_nodes(graph, {5})
    comp = unfold.complement_components(graph, pruned)[0]
    found = unfold.maximal_paths(comp, index)
    assert [m.nodes for m in found] == [(1, 5, 9)]
    built = unfold.build_unfolded(found, comp, itertools.count(10))
    unfolded, mapping = unfold.apply_unfold(pruned, [built])
    assert mapping == {10: 5}
    assert unfolded.has_edge(1, 10) and unfolded.has_edge(10, 9)


def kmers(path, k):
    return {path[i:i + k] for i in range(len(path) - k + 1)}


def spellable(unfolded, mapping, kmer, oriented=False):
    frontier = [v for v in unfolded.nodes
                if unfold.restore_ids(unfolded, mapping, (v,), oriented)[0] == kmer[0]]
    for want in kmer[1:]:
        frontier = {w for v in frontier for w in unfolded.successors(v)
                    if unfold.restore_ids(unfolded, mapping, (w,), oriented)[0] == want}
        if not frontier:
            return False
    return True


def test_unfold_keeps_haplotype_windows_and_drops_recombination(pruned_corpus_a):
    graph, pruned = pruned_corpus_a
    index = build_index(CORPUS_A, sample_rate=4)
    unfolded, mapping = unfold.unfold(graph, pruned, index)
    for path in CORPUS_A:
        for k in range(2, len(path) + 1):
            for kmer in kmers(path, k):
                assert spellable(unfolded, mapping, kmer)
    # The recombinant switch 2,4 -> 5,7 must not be spellable.
    assert not spellable(unfolded, mapping, (2, 4, 5, 7))
    assert not spellable(unfolded, mapping, (1, 2, 4, 5))


def test_unfold_random_fixtures_lose_no_kmers():
    rng = random.Random(17)
    for _ in range(40):
        top = rng.randint(4, 10)
        haplotypes = []
        for _ in range(rng.randint(1, 5)):
            length = rng.randint(1, 9)
            haplotypes.append(tuple(encode_oriented(rng.randint(1, top),
                                                    rng.randint(0, 1))
                                    for _ in range(length)))
        graph = graph_from_paths(haplotypes, oriented=True)
        bases = sorted({v // 2 for v in graph.nodes})
        removed = set(rng.sample(bases, rng.randint(0, len(bases))))
        pruned = prune_nodes(graph, removed, oriented=True)
        texts = []
        for path in haplotypes:
            texts.append(path)
            texts.append(reverse_path(path))
        index = build_index(texts, sample_rate=8, bidirectional=True)
        unfolded, mapping = unfold.unfold(graph, pruned, index, oriented=True)
        for path in haplotypes:
            for k in (2, 3, 4):
                for kmer in kmers(path, k):
                    assert spellable(unfolded, mapping, kmer, oriented=True)


def test_canonical_orientation_dedupes_reversals():
    haplotypes = [tuple(encode_oriented(v, 0) for v in (1, 2, 3, 4))]
    texts = [haplotypes[0], reverse_path(haplotypes[0])]
    graph = graph_from_paths(haplotypes, oriented=True)
    pruned = prune_nodes(graph, {2, 3}, oriented=True)
    index = build_index(texts, sample_rate=4, bidirectional=True)
    comp = unfold.complement_components(graph, pruned, oriented=True)[0]
    found = unfold.maximal_paths(comp, index, oriented=True)
    nodes = [m.nodes for m in found]
    assert len(nodes) == 1
    forward = tuple(encode_oriented(v, 0) for v in (1, 2, 3, 4))
    assert nodes[0] in (forward, reverse_path(forward))


def test_reference_extends_dead_ends():
    haplotypes = [(2, 4)]
    reference = [(2, 4, 5, 7)]
    graph = graph_from_paths(reference)
    pruned = prune_nodes(graph, {4, 5})
    index = build_index(haplotypes)
    ref_index = build_index(reference)
    comp = unfold.complement_components(graph, pruned)[0]
    without = unfold.maximal_paths(comp, index)
    assert [m.nodes for m in without] == [(2, 4)]
    with_ref = unfold.maximal_paths(comp, index, reference_index=ref_index)
    assert [m.nodes for m in with_ref] == [(2, 4, 5, 7)]
    assert with_ref[0].kind == unfold.BORDER_TO_BORDER


def test_induced_graph_reads_record_headers(corpus_a_frozen):
    induced = unfold.induced_graph(corpus_a_frozen)
    expected = graph_from_paths(CORPUS_A)
    assert induced.nodes == expected.nodes
    assert list(induced.edges()) == list(expected.edges())


def test_restore_ids_behavior(pruned_corpus_a):
    graph, pruned = pruned_corpus_a
    index = build_index(CORPUS_A, sample_rate=4)
    unfolded, mapping = unfold.unfold(graph, pruned, index)
    duplicates = sorted(mapping)
    assert unfold.restore_ids(unfolded, mapping, duplicates) == \
        tuple(mapping[d] for d in duplicates)
    assert unfold.restore_ids(unfolded, mapping, (2, 7)) == (2, 7)
    with pytest.raises(unfold.MappingError):
        unfold.restore_ids(unfolded, mapping, (999,))


def test_mapping_file_round_trip(tmp_path):
    mapping = {12: 4, 9: 5, 30: 4}
    path = tmp_path / "dup.mapping"
    unfold.write_mapping(path, mapping)
    assert unfold.read_mapping(path) == mapping
    assert path.read_text().splitlines() == ["9\t5", "12\t4", "30\t4"]
    bad = tmp_path / "bad.mapping"
    bad.write_text("12\tx\n")
    with pytest.raises(unfold.MappingError):
        unfold.read_mapping(bad)


def test_unfold_is_deterministic(pruned_corpus_a):
    graph, pruned = pruned_corpus_a
    index = build_index(CORPUS_A, sample_rate=4)
    first = unfold.unfold(graph, pruned, index)
    second = unfold.unfold(graph, pruned, index)
    assert first[1] == second[1]
    assert list(first[0].edges()) == list(second[0].edges())
    assert first[0].nodes == second[0].nodes
