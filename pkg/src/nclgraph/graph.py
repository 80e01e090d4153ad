"""Immutable finite simple graphs with fast closed-neighborhood queries.

Vertices are always the dense integers ``0 .. vertex_count - 1``.  Adjacency
is stored as one bitmask per vertex, so the closed neighborhood of a vertex
is a single table lookup.  Graphs are value objects: they never change after
construction and are safe to share between threads or worker processes.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence, Tuple


class Graph:
    """A finite simple graph (symmetric, irreflexive adjacency).

    Instances are immutable.  ``Graph(n, edges)`` validates every endpoint,
    rejects self-loops and deduplicates the edge list; the order of the
    input edges is irrelevant.
    """

    __slots__ = ("_n", "_adj", "_closed")

    def __init__(self, vertex_count: int, edges: Iterable[Tuple[int, int]] = ()):
        if vertex_count < 0:
            raise ValueError(f"vertex count must be non-negative, got {vertex_count}")
        n = int(vertex_count)
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u} is not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._n = n
        self._adj = tuple(adj)
        self._closed = tuple(m | (1 << v) for v, m in enumerate(adj))

    @classmethod
    def _from_masks(cls, adj: Sequence[int]) -> "Graph":
        """Fast construction from prevalidated open-adjacency bitmasks."""
        g = object.__new__(cls)
        g._n = len(adj)
        g._adj = tuple(adj)
        g._closed = tuple(m | (1 << v) for v, m in enumerate(adj))
        return g

    # -- basic queries ----------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def adjacency_masks(self) -> Tuple[int, ...]:
        """Open-neighborhood bitmasks, one per vertex (bit v of mask u = edge uv)."""
        return self._adj

    @property
    def closed_masks(self) -> Tuple[int, ...]:
        """Closed-neighborhood bitmasks: ``adjacency_masks[v] | (1 << v)``."""
        return self._closed

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._adj[v].bit_count()

    def neighbors(self, v: int) -> frozenset:
        self._check_vertex(v)
        return frozenset(_bits(self._adj[v]))

    def closed_neighborhood(self, v: int) -> frozenset:
        """The set ``{v} | {u : uv is an edge}``; always contains ``v``."""
        self._check_vertex(v)
        return frozenset(_bits(self._closed[v]))

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def edges(self) -> Iterator[Tuple[int, int]]:
        """All edges as pairs ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u in range(self._n):
            rest = self._adj[u] >> (u + 1)
            for v in _bits(rest):
                yield (u, u + 1 + v)

    # -- derived graphs ----------------------------------------------------

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """The subgraph induced on ``vertices``, relabeled 0..k-1 in sorted order."""
        vs = sorted(set(vertices))
        for v in vs:
            self._check_vertex(v)
        index = {v: i for i, v in enumerate(vs)}
        adj = [0] * len(vs)
        for v in vs:
            for u in _bits(self._adj[v]):
                if u in index:
                    adj[index[v]] |= 1 << index[u]
        return Graph._from_masks(adj)

    def complement(self) -> "Graph":
        full = (1 << self._n) - 1
        return Graph._from_masks(
            [full & ~m & ~(1 << v) for v, m in enumerate(self._adj)]
        )

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(vertex_count={self._n}, edge_count={self.edge_count})"

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self._n):
            raise ValueError(f"vertex {v} outside 0..{self._n - 1}")


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def build_graph(vertex_count: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    """Build a graph from an explicit edge list (validated, deduplicated)."""
    return Graph(vertex_count, edges)


# -- edge-list text format -------------------------------------------------
#
# First line "n m", then m lines "u v" (0-indexed, whitespace separated).
# Anything after "#" on a line is a comment; blank lines are skipped.


def to_edgelist_text(g: Graph) -> str:
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_edgelist_text(text: str) -> Graph:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise ValueError("empty edge-list input")
    head = rows[0].split()
    if len(head) != 2:
        raise ValueError(f"header must be 'n m', got {rows[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ValueError(f"header must be two integers, got {rows[0]!r}") from None
    if m != len(rows) - 1:
        raise ValueError(f"header declares {m} edges but {len(rows) - 1} lines follow")
    edges = []
    for row in rows[1:]:
        parts = row.split()
        if len(parts) != 2:
            raise ValueError(f"edge line must be 'u v', got {row!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"edge line must be two integers, got {row!r}") from None
    return Graph(n, edges)
