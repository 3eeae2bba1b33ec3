"""Haplotype-aware graph simplification by unfolding pruned regions.

Pruning removes nodes from a graph, breaking the paths of known
haplotypes that ran through them.  The unfolder rebuilds each removed
region as the set of paths the indexed haplotypes actually take,
duplicating internal nodes so that no recombinant paths are introduced.
The result is a simplified graph that still spells every haplotype
k-mer, together with a mapping from duplicate ids back to the originals.

Regions are recovered as connected components of the complement graph:
the edges of the haplotype-induced graph that the pruned graph no longer
has.  Nodes a component shares with the pruned graph form its border;
the rest are internal.  Within a component, maximal haplotype-supported
paths are found by searching the index, each path is split into a prefix
and a suffix, and the prefixes and reversed suffixes are stored in tries
so that shared ends are duplicated only once.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .model import ENDMARKER, FORWARD, Graph, encode_oriented, reverse_path
from .query import SearchState, extend, full_state


class MappingError(KeyError):
    """A node id could not be translated back to an original id."""


BORDER_TO_BORDER = "border-to-border"
BORDER_TO_DEAD_END = "border-to-dead-end"
FULLY_INTERNAL = "fully-internal"


def _base(v: int, oriented: bool) -> int:
    return v // 2 if oriented else v


def _make(base: int, orientation: int, oriented: bool) -> int:
    return encode_oriented(base, orientation) if oriented else base


def _orientation(v: int, oriented: bool) -> int:
    return v % 2 if oriented else FORWARD


def _reverse(path: Sequence[int], oriented: bool) -> tuple[int, ...]:
    if oriented:
        return reverse_path(path)
    return tuple(reversed(path))


def canonical_path(path: Sequence[int], oriented: bool = False) -> tuple[int, ...]:
    """The smaller of a path and its reversal, fixing one orientation."""
    path = tuple(path)
    return min(path, _reverse(path, oriented))


@dataclass
class ComplementComponent:
    """One connected region of edges present before pruning but not after.

    Node sets hold base (orientation-free) ids; the edge set keeps the
    index's node ids so that searches can follow exact orientations.
    """

    nodes: set[int]
    edges: set[tuple[int, int]]
    border: set[int]
    internal: set[int]
    _succ: dict[int, list[int]] | None = None

    def successors(self, v: int) -> list[int]:
        if self._succ is None:
            succ: dict[int, list[int]] = {}
            for u, w in self.edges:
                succ.setdefault(u, []).append(w)
            for lst in succ.values():
                lst.sort()
            self._succ = succ
        return self._succ.get(v, [])


@dataclass(frozen=True)
class MaximalPath:
    """A longest haplotype-supported path within one component."""

    nodes: tuple[int, ...]
    kind: str


@dataclass
class UnfoldedComponent:
    """The rebuilt form of one pruned region, ready to splice back in.

    Trie dictionaries map a label sequence from the trie root to the
    graph node chosen for the edge ending there; the suffix trie is
    keyed by reversed suffixes so that shared path endings collapse.
    """

    component: ComplementComponent
    mapping: dict[int, int] = field(default_factory=dict)
    new_nodes: set[int] = field(default_factory=set)
    edges: set[tuple[int, int]] = field(default_factory=set)
    crossing_edges: list[tuple[int, int]] = field(default_factory=list)
    prefix_trie: dict[tuple[int, ...], int] = field(default_factory=dict)
    suffix_trie: dict[tuple[int, ...], int] = field(default_factory=dict)


def complement_components(g_induced: Graph, g_pruned: Graph,
                          oriented: bool = False) -> list[ComplementComponent]:
    """Group the edges lost to pruning into connected components.

    Connectivity is taken over base nodes and ignores edge direction.
    Components come back ordered by their smallest member node.
    """
    lost = [(u, v) for u, v in g_induced.edges() if not g_pruned.has_edge(u, v)]
    if not lost:
        return []

    parent: dict[int, int] = {}

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(x: int, y: int) -> None:
        parent.setdefault(x, x)
        parent.setdefault(y, y)
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx

    for u, v in lost:
        union(_base(u, oriented), _base(v, oriented))

    pruned_bases = {_base(v, oriented) for v in g_pruned.nodes}
    grouped: dict[int, ComplementComponent] = {}
    for u, v in lost:
        root = find(_base(u, oriented))
        comp = grouped.get(root)
        if comp is None:
            comp = ComplementComponent(set(), set(), set(), set())
            grouped[root] = comp
        comp.edges.add((u, v))
        comp.nodes.add(_base(u, oriented))
        comp.nodes.add(_base(v, oriented))
    for comp in grouped.values():
        comp.border = comp.nodes & pruned_bases
        comp.internal = comp.nodes - comp.border
    return sorted(grouped.values(), key=lambda c: min(c.nodes))


def _path_start_state(index, v: int) -> SearchState:
    """Range of indexed paths whose first node is v."""
    whole = SearchState(ENDMARKER, 0, index.sequence_count - 1)
    return extend(index, whole, v)


def _search_maximal(component: ComplementComponent, index,
                    seeds: list[tuple[tuple[int, ...], SearchState]],
                    oriented: bool) -> Iterator[tuple[int, ...]]:
    """Expand search states along component edges, yielding finished paths.

    A path is finished when it returns to the border (kept only if it
    also started there) or when no supported extension remains.
    """
    stack = deque(seeds)
    while stack:
        path, state = stack.pop()
        last = path[-1]
        if len(path) >= 2 and _base(last, oriented) in component.border:
            if _base(path[0], oriented) in component.border:
                yield path
            continue
        extended = False
        for w in component.successors(last):
            nxt = extend(index, state, w)
            if not nxt.empty:
                stack.append((path + (w,), nxt))
                extended = True
        if not extended:
            if len(path) >= 2 or _base(path[0], oriented) in component.internal:
                yield path


def maximal_paths(component: ComplementComponent, index,
                  reference_index=None, oriented: bool = False) -> list[MaximalPath]:
    """All maximal haplotype-supported paths within one component.

    Searches start from every border node (any occurrence) and from
    every internal node as a path start.  Paths that do not run border
    to border are extended along reference paths when a reference index
    is supplied.  Each path is reported once, in its canonical
    orientation.
    """
    seeds: list[tuple[tuple[int, ...], SearchState]] = []
    for b in sorted(component.nodes):
        incarnations = (encode_oriented(b, 0), encode_oriented(b, 1)) if oriented else (b,)
        for v in incarnations:
            if b in component.border:
                state = full_state(index, v)
            else:
                state = _path_start_state(index, v)
            if not state.empty:
                seeds.append(((v,), state))

    out: set[tuple[int, ...]] = set()
    for path in _search_maximal(component, index, seeds, oriented):
        if reference_index is not None and _kind(path, component, oriented) != BORDER_TO_BORDER:
            for extended in _extend_with_reference(path, component, reference_index, oriented):
                out.add(canonical_path(extended, oriented))
        else:
            out.add(canonical_path(path, oriented))
    return [MaximalPath(p, _kind(p, component, oriented)) for p in sorted(out)]


def _kind(path: Sequence[int], component: ComplementComponent, oriented: bool) -> str:
    head = _base(path[0], oriented) in component.border
    tail = _base(path[-1], oriented) in component.border
    if head and tail:
        return BORDER_TO_BORDER
    if head or tail:
        return BORDER_TO_DEAD_END
    return FULLY_INTERNAL


def _extend_with_reference(path: Sequence[int], component: ComplementComponent,
                           reference_index, oriented: bool) -> list[tuple[int, ...]]:
    """Continue a dead-ended path along reference paths to the border.

    The canonical orientation of the path is re-searched in the
    reference index and extended with the same stopping rules, crossing
    the border at most once.  Without reference support the path is
    returned unchanged.
    """
    start = canonical_path(path, oriented)
    state = full_state(reference_index, start[0])
    for v in start[1:]:
        state = extend(reference_index, state, v)
    if state.empty:
        return [tuple(path)]
    results = list(_search_maximal(component, reference_index, [(start, state)], oriented))
    return results or [tuple(path)]


def build_unfolded(paths: Sequence[MaximalPath], component: ComplementComponent,
                   id_allocator: Iterator[int],
                   oriented: bool = False) -> UnfoldedComponent:
    """Turn a component's maximal paths into duplicate nodes and edges.

    Each path is cut into a prefix of floor(len/2) nodes and the
    remaining suffix.  Prefixes go into one trie, reversed suffixes into
    another, and every trie edge becomes a graph node: border nodes next
    to a trie root keep their existing id, everything else gets a fresh
    duplicate.  A crossing edge joins each prefix end to its suffix
    start.
    """
    unfolded = UnfoldedComponent(component)

    def node_for(trie: dict[tuple[int, ...], int], key: tuple[int, ...]) -> int:
        gid = trie.get(key)
        if gid is not None:
            return gid
        label = key[-1]
        base = _base(label, oriented)
        if len(key) == 1 and base in component.border:
            new_base = base
        else:
            new_base = next(id_allocator)
            unfolded.mapping[new_base] = base
            unfolded.new_nodes.add(new_base)
        gid = _make(new_base, _orientation(label, oriented), oriented)
        trie[key] = gid
        return gid

    for maximal in sorted(set(paths), key=lambda m: m.nodes):
        nodes = maximal.nodes
        cut = len(nodes) // 2
        prefix, suffix = nodes[:cut], nodes[cut:]

        prefix_end = None
        for i in range(len(prefix)):
            gid = node_for(unfolded.prefix_trie, prefix[:i + 1])
            if prefix_end is not None:
                unfolded.edges.add((prefix_end, gid))
            prefix_end = gid

        reversed_suffix = tuple(reversed(suffix))
        suffix_start = None
        for i in range(len(reversed_suffix)):
            gid = node_for(unfolded.suffix_trie, reversed_suffix[:i + 1])
            if suffix_start is not None:
                unfolded.edges.add((gid, suffix_start))
            suffix_start = gid

        if prefix_end is not None and suffix_start is not None:
            unfolded.edges.add((prefix_end, suffix_start))
            unfolded.crossing_edges.append((prefix_end, suffix_start))
    return unfolded


def apply_unfold(g_pruned: Graph, components: Sequence[UnfoldedComponent],
                 oriented: bool = False) -> tuple[Graph, dict[int, int]]:
    """Splice unfolded components into a copy of the pruned graph."""
    g_out = Graph(orientation_closed=g_pruned.orientation_closed)
    for v in g_pruned.nodes:
        g_out.add_node(v)
    for u, v in g_pruned.edges():
        g_out.add_edge(u, v)
    mapping: dict[int, int] = {}
    for unfolded in components:
        mapping.update(unfolded.mapping)
        for base in unfolded.new_nodes:
            g_out.add_node(_make(base, 0, oriented))
            if oriented:
                g_out.add_node(_make(base, 1, oriented))
        for u, v in unfolded.edges:
            g_out.add_edge(u, v)
    return g_out, mapping


def unfold(g_induced: Graph, g_pruned: Graph, index, reference_index=None,
           oriented: bool = False) -> tuple[Graph, dict[int, int]]:
    """Full pipeline: components, path search, tries, and splicing."""
    components = complement_components(g_induced, g_pruned, oriented)
    highest = 0
    for graph in (g_induced, g_pruned):
        for v in graph.nodes:
            highest = max(highest, _base(v, oriented))
    allocator = itertools.count(highest + 1)
    built = []
    for component in components:
        paths = maximal_paths(component, index, reference_index, oriented)
        built.append(build_unfolded(paths, component, allocator, oriented))
    return apply_unfold(g_pruned, built, oriented)


def induced_graph(index) -> Graph:
    """The graph induced by the indexed paths, read off the record headers."""
    graph = Graph()
    for v in index.node_ids():
        graph.add_node(v)
        for w, _ in index.record_view(v).edges:
            if w != ENDMARKER:
                graph.add_edge(v, w)
    return graph


def restore_ids(g_unfolded: Graph, mapping: dict[int, int],
                nodes: Sequence[int], oriented: bool = False) -> tuple[int, ...]:
    """Translate a node sequence over the unfolded graph to original ids."""
    out = []
    for v in nodes:
        base = _base(v, oriented)
        if base in mapping:
            original = mapping[base]
        elif g_unfolded.has_node(v):
            original = base
        else:
            raise MappingError(f"node {v} is neither a duplicate nor in the unfolded graph")
        out.append(_make(original, _orientation(v, oriented), oriented))
    return tuple(out)


def write_mapping(path, mapping: dict[int, int]) -> None:
    """Write duplicate-to-original pairs, one tab-separated line each."""
    with open(path, "w", encoding="ascii") as handle:
        for duplicate in sorted(mapping):
            handle.write(f"{duplicate}\t{mapping[duplicate]}\n")


def read_mapping(path) -> dict[int, int]:
    mapping: dict[int, int] = {}
    with open(path, "r", encoding="ascii") as handle:
        for lineno, line in enumerate(handle, start=1):
            line = line.strip()
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 2 or not all(p.isdigit() for p in parts):
                raise MappingError(f"malformed mapping line {lineno}: {line!r}")
            mapping[int(parts[0])] = int(parts[1])
    return mapping
