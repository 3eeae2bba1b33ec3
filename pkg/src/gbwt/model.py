"""Shared graph vocabulary: oriented node ids, paths, and graph containers.

Node id 0 is reserved for the endmarker that terminates every indexed
path.  A bidirected graph is simulated by giving every base node two
directed incarnations: base ``x`` maps to ``2x`` (forward) and ``2x + 1``
(reverse), so the two orientations of a node stay adjacent in id space.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

ENDMARKER = 0

FORWARD = 0
REVERSE = 1

Path = tuple[int, ...]


class ReservedIdError(ValueError):
    """Node id 0 is reserved for the endmarker."""


def encode_oriented(base: int, orientation: int) -> int:
    """Map (base node, orientation) to a single node id: 2*base + flip."""
    if base < 1:
        raise ReservedIdError(f"base node id must be >= 1, got {base}")
    if orientation not in (FORWARD, REVERSE):
        raise ValueError(f"orientation must be 0 (forward) or 1 (reverse), got {orientation}")
    return 2 * base + orientation


def decode_oriented(node: int) -> tuple[int, int]:
    """Inverse of encode_oriented."""
    if node < 2:
        raise ReservedIdError(f"node id {node} is not an encoded oriented node")
    return node // 2, node % 2


def flip(node: int) -> int:
    """The opposite orientation of an encoded oriented node."""
    if node < 2:
        raise ReservedIdError(f"node id {node} is not an encoded oriented node")
    return node ^ 1


def reverse_path(path: Sequence[int]) -> Path:
    """Traverse the opposite orientations in the opposite order."""
    return tuple(flip(v) for v in reversed(path))


@dataclass
class Graph:
    """Directed graph over a dense integer id range.

    Successor and predecessor lists are kept sorted.  When
    ``orientation_closed`` is set, every edge (u, v) is expected to have
    its mirror (flip(v), flip(u)) present as well; ``add_edge`` maintains
    this automatically.
    """

    orientation_closed: bool = False
    _nodes: set[int] = field(default_factory=set)
    _succ: dict[int, list[int]] = field(default_factory=dict)
    _pred: dict[int, list[int]] = field(default_factory=dict)

    def add_node(self, v: int) -> None:
        if v < 1:
            raise ReservedIdError(f"node id must be >= 1, got {v}")
        self._nodes.add(v)

    def add_edge(self, u: int, v: int) -> None:
        self.add_node(u)
        self.add_node(v)
        self._insert(u, v)
        if self.orientation_closed:
            self._insert(flip(v), flip(u))
            self._nodes.add(flip(u))
            self._nodes.add(flip(v))

    def _insert(self, u: int, v: int) -> None:
        succ = self._succ.setdefault(u, [])
        if v not in succ:
            succ.append(v)
            succ.sort()
        pred = self._pred.setdefault(v, [])
        if u not in pred:
            pred.append(u)
            pred.sort()

    @property
    def nodes(self) -> set[int]:
        return self._nodes

    def id_range(self) -> tuple[int, int]:
        """Dense [a, b] span of node ids; (1, 0) for an empty graph."""
        if not self._nodes:
            return (1, 0)
        return (min(self._nodes), max(self._nodes))

    def has_node(self, v: int) -> bool:
        return v in self._nodes

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._succ.get(u, ())

    def successors(self, v: int) -> list[int]:
        return self._succ.get(v, [])

    def predecessors(self, v: int) -> list[int]:
        return self._pred.get(v, [])

    def edges(self) -> Iterable[tuple[int, int]]:
        for u in sorted(self._succ):
            for v in self._succ[u]:
                yield (u, v)


def path_is_valid(graph: Graph, path: Sequence[int]) -> tuple[bool, str | None]:
    """Check that every node exists and every consecutive pair is an edge.

    Returns (True, None) on success, or (False, diagnostic) naming the
    first offending position.
    """
    for pos, v in enumerate(path):
        if not graph.has_node(v):
            return False, f"node {v} at step {pos} is not in the graph"
    for pos in range(len(path) - 1):
        if not graph.has_edge(path[pos], path[pos + 1]):
            return False, f"({path[pos]}, {path[pos + 1]}) at step {pos} is not an edge"
    return True, None
