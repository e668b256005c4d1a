"""Edge-list ingestion and the immutable undirected graph container.

The pipeline is ``load_edge_list -> simplify_undirected -> largest_connected_component``:
raw pairs (duplicates, self-loops, arbitrary integer labels) are reduced to
a simple undirected graph with dense node ids 0..n-1, then restricted to
its largest connected component. Original labels survive through the
``original_id`` / ``dense_id`` maps so results can be reported against the
source data.

Adjacency is stored as one sorted tuple of neighbor ids per node, which is
immutable, cheap to index from the walk kernels, and safe to share across
threads.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, Iterator

import numpy as np

__all__ = [
    "EdgeList",
    "EdgeListError",
    "DegreeStats",
    "Graph",
    "load_edge_list",
    "simplify_undirected",
    "largest_connected_component",
    "load_graph",
    "demo_graph",
    "uniform_neighbor",
    "is_connected",
    "resolve_dataset",
]

_COMMENT_PREFIXES = ("#", "%")  # SNAP and KONECT conventions


class EdgeListError(ValueError):
    """Malformed, empty, or degenerate edge-list input."""


@dataclass
class EdgeList:
    """Raw parse result: every (u, v) pair as written, plus the label set."""

    pairs: list[tuple[int, int]]
    ids: set[int]


@dataclass(frozen=True)
class DegreeStats:
    average_degree: float
    min_degree: int
    max_degree: int


class Graph:
    """Simple undirected graph over dense node ids.

    Instances are immutable after construction: no self-loops, no parallel
    edges, neighbor tuples sorted ascending. Build one through
    :func:`simplify_undirected` or :func:`load_graph` rather than directly.
    """

    __slots__ = (
        "node_count",
        "edge_count",
        "_adj",
        "_original_ids",
        "_dense_by_original",
        "_degrees",
        "__weakref__",
    )

    def __init__(self, adjacency: Iterable[Iterable[int]], original_ids: Iterable[int]):
        self._adj: list[tuple[int, ...]] = [tuple(nbrs) for nbrs in adjacency]
        self.node_count = len(self._adj)
        degree_total = sum(len(nbrs) for nbrs in self._adj)
        self.edge_count = degree_total // 2
        self._original_ids = np.asarray(list(original_ids), dtype=np.int64)
        if len(self._original_ids) != self.node_count:
            raise ValueError("one original id per node required")
        self._dense_by_original = {int(o): i for i, o in enumerate(self._original_ids)}
        self._degrees = np.array([len(nbrs) for nbrs in self._adj], dtype=np.int64)

    # -- structure ---------------------------------------------------------

    @property
    def adjacency(self) -> list[tuple[int, ...]]:
        """Per-node sorted neighbor tuples (do not mutate the list)."""
        return self._adj

    @property
    def degrees(self) -> np.ndarray:
        return self._degrees

    def degree(self, i: int) -> int:
        self._check_node(i)
        return len(self._adj[i])

    def neighbors(self, i: int) -> tuple[int, ...]:
        self._check_node(i)
        return self._adj[i]

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (u, v) with u < v, ascending."""
        for u, nbrs in enumerate(self._adj):
            for v in nbrs:
                if v > u:
                    yield (u, v)

    def _check_node(self, i: int) -> None:
        if not 0 <= i < self.node_count:
            raise IndexError(f"node {i} out of range [0, {self.node_count})")

    # -- labels ------------------------------------------------------------

    @property
    def original_ids(self) -> np.ndarray:
        return self._original_ids

    def original_id(self, dense: int) -> int:
        self._check_node(dense)
        return int(self._original_ids[dense])

    def dense_id(self, original: int) -> int:
        try:
            return self._dense_by_original[int(original)]
        except KeyError:
            raise KeyError(f"unknown original node id {original}") from None

    # -- statistics ---------------------------------------------------------

    @property
    def average_degree(self) -> float:
        return 2.0 * self.edge_count / self.node_count

    def degree_stats(self) -> DegreeStats:
        return DegreeStats(
            average_degree=self.average_degree,
            min_degree=int(self._degrees.min()),
            max_degree=int(self._degrees.max()),
        )

    # -- serialization -------------------------------------------------------

    def to_edge_list_text(self, summary_header: bool = False) -> str:
        """Render as sorted "u v" lines (dense ids), newline-terminated.

        The optional "nodes edges" summary header is written as a comment
        line so the output stays loadable by :func:`load_edge_list`.
        """
        lines = []
        if summary_header:
            lines.append(f"# {self.node_count} {self.edge_count}")
        lines.extend(f"{u} {v}" for u, v in self.edges())
        return "\n".join(lines) + "\n"

    def validate(self) -> None:
        """Raise ValueError if any structural invariant is broken."""
        for u, nbrs in enumerate(self._adj):
            if list(nbrs) != sorted(set(nbrs)):
                raise ValueError(f"neighbor list of {u} not sorted/deduplicated")
            if u in nbrs:
                raise ValueError(f"self-loop at node {u}")
            for v in nbrs:
                self._check_node(v)
                if u not in self._adj[v]:
                    raise ValueError(f"asymmetric edge ({u}, {v})")
        if int(self._degrees.sum()) != 2 * self.edge_count:
            raise ValueError("degree sum does not equal 2 * edge_count")

    def __repr__(self) -> str:
        return f"Graph(nodes={self.node_count}, edges={self.edge_count})"


# -- ingestion ----------------------------------------------------------------


def _open_lines(source) -> Iterator[str]:
    if isinstance(source, (str, Path)):
        with open(source, "rt", encoding="utf-8") as fh:
            yield from fh
        return
    if hasattr(source, "read"):
        for line in source:
            if isinstance(line, bytes):
                line = line.decode("utf-8")
            yield line
        return
    raise TypeError(f"unsupported edge-list source: {type(source).__name__}")


def load_edge_list(source: str | Path | IO) -> EdgeList:
    """Parse an edge-list text stream into raw (u, v) pairs.

    Each non-comment line carries two integer tokens separated by
    whitespace or a comma; lines starting with '#' or '%' are comments.
    Duplicates and self-loops are kept at this stage.
    """
    pairs: list[tuple[int, int]] = []
    ids: set[int] = set()
    for lineno, raw in enumerate(_open_lines(source), start=1):
        line = raw.strip()
        if not line or line.startswith(_COMMENT_PREFIXES):
            continue
        tokens = line.replace(",", " ").split()
        if len(tokens) != 2:
            raise EdgeListError(
                f"line {lineno}: expected two node ids, got {len(tokens)} tokens"
            )
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListError(f"line {lineno}: non-integer node id in {line!r}") from None
        pairs.append((u, v))
        ids.add(u)
        ids.add(v)
    if not pairs:
        raise EdgeListError("empty edge list: no (u, v) pairs found")
    return EdgeList(pairs=pairs, ids=ids)


def simplify_undirected(pairs: EdgeList | Iterable[tuple[int, int]]) -> Graph:
    """Reduce raw pairs to a simple undirected graph with dense ids.

    Drops self-loops and edge direction, merges duplicates, relabels the
    surviving nodes densely in ascending original-id order. Nodes that only
    appeared in self-loops disappear with them.
    """
    raw = pairs.pairs if isinstance(pairs, EdgeList) else pairs
    edges: set[tuple[int, int]] = set()
    for u, v in raw:
        if u == v:
            continue
        edges.add((u, v) if u < v else (v, u))
    if not edges:
        raise EdgeListError("no edges survive simplification (self-loops only?)")
    originals = sorted({x for edge in edges for x in edge})
    dense = {o: i for i, o in enumerate(originals)}
    adj: list[list[int]] = [[] for _ in originals]
    for u, v in edges:
        du, dv = dense[u], dense[v]
        adj[du].append(dv)
        adj[dv].append(du)
    return Graph((sorted(nbrs) for nbrs in adj), originals)


def largest_connected_component(g: Graph) -> Graph:
    """Restrict to the largest connected component, relabeled densely.

    Ties between equal-sized components go to the one containing the
    smallest original id.
    """
    n = g.node_count
    adj = g.adjacency
    comp_of = [-1] * n
    components: list[list[int]] = []
    for s in range(n):
        if comp_of[s] >= 0:
            continue
        comp_of[s] = len(components)
        members = [s]
        queue = deque((s,))
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if comp_of[v] < 0:
                    comp_of[v] = len(components)
                    members.append(v)
                    queue.append(v)
        components.append(members)
    if len(components) == 1:
        return g
    # dense ids ascend with original ids, so min(members) is the smallest original
    best = max(components, key=lambda m: (len(m), -min(m)))
    members = sorted(best)
    index = {old: new for new, old in enumerate(members)}
    adjacency = [tuple(index[v] for v in adj[old]) for old in members]
    originals = [g.original_id(old) for old in members]
    return Graph(adjacency, originals)


def load_graph(source: str | Path | IO, lcc: bool = True) -> Graph:
    """Full pipeline: parse, simplify, and (by default) keep the LCC."""
    g = simplify_undirected(load_edge_list(source))
    return largest_connected_component(g) if lcc else g


def demo_graph() -> Graph:
    """The five-node demo graph used throughout the docs and tests.

    Degree sequence (4, 2, 3, 3, 2) over original ids 1..5::

        2 - 1 - 5
        |  /|  /
        | / | /
        |/  |/
        4 - 3
    """
    return simplify_undirected(
        [(1, 2), (1, 3), (1, 4), (1, 5), (2, 4), (3, 4), (3, 5)]
    )


def uniform_neighbor(g: Graph, i: int, rng) -> int:
    """A neighbor of i drawn with probability 1/degree(i)."""
    nbrs = g.neighbors(i)
    return nbrs[rng.pick(len(nbrs))]


def is_connected(g: Graph, start: int = 0) -> bool:
    """Breadth-first reachability check from ``start``."""
    g._check_node(start)
    seen = bytearray(g.node_count)
    seen[start] = 1
    queue = deque((start,))
    count = 1
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = 1
                count += 1
                queue.append(v)
    return count == g.node_count


def resolve_dataset(name: str | Path) -> Path:
    """Find a dataset file: absolute/relative path first, then $WALKMIX_DATA_DIR."""
    p = Path(name)
    if p.exists():
        return p
    data_dir = os.environ.get("WALKMIX_DATA_DIR")
    if data_dir:
        candidate = Path(data_dir) / p
        if candidate.exists():
            return candidate
    raise FileNotFoundError(f"dataset not found: {name}")
