"""Exact classical invariants and induced-pattern detectors.

Everything here is exact and deterministic: searches visit vertices in
ascending index order, so returned witnesses are reproducible.  The
detectors are exponential in the worst case and refuse graphs above a
configurable vertex cap (default ``DETECTOR_VERTEX_CAP``) instead of
silently taking forever.

Witness objects re-validate against the original graph through their own
``check`` methods, which share no code with the searches that produced them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from . import _kernels
from .errors import SizeCapError
from .graph import Graph, _bits

DETECTOR_VERTEX_CAP = 25


def _check_cap(g: Graph, vertex_cap: int, what: str) -> None:
    if g.vertex_count > vertex_cap:
        raise SizeCapError(
            f"{what} is an exponential search; graph has {g.vertex_count} "
            f"vertices, cap is {vertex_cap} (raise vertex_cap to override)"
        )


# ---------------------------------------------------------------------------
# witnesses
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HalfGraphWitness:
    """Vertex assignment exhibiting an induced half-graph of height n.

    ``a_vertices[i-1]`` and ``b_vertices[j-1]`` (1-indexed i, j) carry the
    cross edge exactly when ``i >= j``.  In the bipartite variant both parts
    are additionally independent sets.
    """

    a_vertices: Tuple[int, ...]
    b_vertices: Tuple[int, ...]

    @property
    def height(self) -> int:
        return len(self.a_vertices)

    def check(self, g: Graph, *, bipartite: bool = False) -> bool:
        a, b = self.a_vertices, self.b_vertices
        n = len(a)
        if len(b) != n or n == 0:
            return False
        if len(set(a) | set(b)) != 2 * n:
            return False
        for v in (*a, *b):
            if not 0 <= v < g.vertex_count:
                return False
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if g.has_edge(a[i - 1], b[j - 1]) != (i >= j):
                    return False
        if bipartite:
            for part in (a, b):
                for x in range(n):
                    for y in range(x + 1, n):
                        if g.has_edge(part[x], part[y]):
                            return False
        return True

    def to_json_dict(self) -> dict:
        return {"a_vertices": list(self.a_vertices), "b_vertices": list(self.b_vertices)}


@dataclass(frozen=True)
class MultipartiteWitness:
    """Disjoint vertex sets inducing a complete multipartite pattern."""

    parts: Tuple[Tuple[int, ...], ...]

    def check(self, g: Graph) -> bool:
        if not self.parts:
            return False
        size = len(self.parts[0])
        seen: set[int] = set()
        for part in self.parts:
            if len(part) != size:
                return False
            for v in part:
                if not 0 <= v < g.vertex_count or v in seen:
                    return False
                seen.add(v)
        for pi, part in enumerate(self.parts):
            for x in range(len(part)):
                for y in range(x + 1, len(part)):
                    if g.has_edge(part[x], part[y]):
                        return False
            for other in self.parts[pi + 1:]:
                for u in part:
                    for v in other:
                        if not g.has_edge(u, v):
                            return False
        return True

    def to_json_dict(self) -> dict:
        return {"parts": [list(p) for p in self.parts]}


# ---------------------------------------------------------------------------
# classical invariants
# ---------------------------------------------------------------------------


def max_clique(g: Graph, *, vertex_cap: int = DETECTOR_VERTEX_CAP) -> Tuple[int, ...]:
    """Vertices of one maximum clique (empty tuple for the empty graph)."""
    _check_cap(g, vertex_cap, "maximum clique")
    return tuple(_bits(_kernels.max_clique(g.adjacency_masks)))


def clique_number(g: Graph, *, vertex_cap: int = DETECTOR_VERTEX_CAP) -> int:
    return len(max_clique(g, vertex_cap=vertex_cap))


def chromatic_number(g: Graph, *, vertex_cap: int = DETECTOR_VERTEX_CAP) -> int:
    _check_cap(g, vertex_cap, "chromatic number")
    return _kernels.chromatic_number(g.adjacency_masks)


def density(g: Graph) -> Fraction:
    """Edge density |E| / (n choose 2), exact."""
    n = g.vertex_count
    if n < 2:
        raise ValueError(f"density needs at least 2 vertices, got {n}")
    return Fraction(g.edge_count, math.comb(n, 2))


# ---------------------------------------------------------------------------
# pattern detectors
# ---------------------------------------------------------------------------


def has_kmn_subgraph(
    g: Graph, m: int, n: int, *, vertex_cap: int = DETECTOR_VERTEX_CAP
) -> bool:
    """Whether disjoint sets A, B (|A|=m, |B|=n) with all cross edges exist.

    Not-necessarily-induced containment: edges inside A or B are irrelevant.
    Enumerates the smaller side with degree pruning; B is then any ``n``
    vertices of the common open neighborhood of A (which never meets A).
    """
    if m < 1 or n < 1:
        raise ValueError(f"both sides must be >= 1, got m={m}, n={n}")
    _check_cap(g, vertex_cap, "complete-bipartite subgraph search")
    a_size, b_need = min(m, n), max(m, n)
    total = g.vertex_count
    if a_size + b_need > total:
        return False
    adj = g.adjacency_masks

    def search(start: int, chosen: int, common: int) -> bool:
        if chosen == a_size:
            return common.bit_count() >= b_need
        for v in range(start, total):
            if adj[v].bit_count() < b_need:
                continue
            narrowed = common & adj[v]
            if narrowed.bit_count() >= b_need:
                if search(v + 1, chosen + 1, narrowed):
                    return True
        return False

    return search(0, 0, (1 << total) - 1)


def induced_multipartite(
    g: Graph, r: int, t: int, *, vertex_cap: int = DETECTOR_VERTEX_CAP
) -> Optional[MultipartiteWitness]:
    """First induced complete r-partite pattern with parts of size t, if any.

    Canonical search order (parts sorted internally, part leaders
    increasing) makes the returned witness deterministic.
    """
    if r < 1 or t < 1:
        raise ValueError(f"multipartite parameters must be >= 1, got r={r}, t={t}")
    _check_cap(g, vertex_cap, "induced multipartite search")
    total = g.vertex_count
    if r * t > total:
        return None
    adj = g.adjacency_masks
    full = (1 << total) - 1
    parts: list[list[int]] = []
    used = 0
    found: list[MultipartiteWitness] = []

    def start_part(cross: int, min_leader: int) -> bool:
        nonlocal used
        pool = cross & ~used & (full ^ ((1 << min_leader) - 1))
        for leader in _bits(pool):
            bit = 1 << leader
            parts.append([leader])
            used |= bit
            if grow(cross, adj[leader], full & ~adj[leader] & ~bit, leader):
                return True
            parts.pop()
            used &= ~bit
        return False

    def grow(cross: int, part_cross: int, anti: int, last: int) -> bool:
        nonlocal used
        cur = parts[-1]
        if len(cur) == t:
            if len(parts) == r:
                found.append(MultipartiteWitness(tuple(tuple(p) for p in parts)))
                return True
            return start_part(cross & part_cross, parts[-1][0] + 1)
        pool = cross & anti & ~used & (full ^ ((1 << (last + 1)) - 1))
        for v in _bits(pool):
            bit = 1 << v
            cur.append(v)
            used |= bit
            if grow(cross, part_cross & adj[v], anti & ~adj[v] & ~bit, v):
                return True
            cur.pop()
            used &= ~bit
        return False

    start_part(full, 0)
    return found[0] if found else None


def half_graph_height(
    g: Graph,
    *,
    bipartite_only: bool = False,
    cap: Optional[int] = None,
    vertex_cap: int = DETECTOR_VERTEX_CAP,
) -> Tuple[int, Optional[HalfGraphWitness]]:
    """Maximum height of an induced half-graph assignment, with a witness.

    General mode constrains only the cross edges (within-part edges are
    free); ``bipartite_only`` additionally requires both parts independent.
    With ``cap`` the search stops as soon as height ``cap`` is reached and
    reports ``min(true height, cap)`` -- obstruction checks only need
    threshold comparisons, not the exact height.
    """
    _check_cap(g, vertex_cap, "half-graph search")
    total = g.vertex_count
    adj = g.adjacency_masks
    limit = total // 2
    if cap is not None:
        if cap < 0:
            raise ValueError(f"cap must be non-negative, got {cap}")
        limit = min(limit, cap)
    best = 0
    best_witness: Optional[HalfGraphWitness] = None
    a_list: list[int] = []
    b_list: list[int] = []

    def extend(used: int, common_b: int, union_a: int, union_b: int) -> bool:
        nonlocal best, best_witness
        k = len(a_list)
        if k > best:
            best = k
            best_witness = HalfGraphWitness(tuple(a_list), tuple(b_list))
        if k == limit:
            return True
        x_pool = common_b & ~used
        if bipartite_only:
            x_pool &= ~union_a
        for x in _bits(x_pool):
            # b_k must touch a_k and miss every earlier a_i
            y_pool = adj[x] & ~used & ~union_a
            if bipartite_only:
                y_pool &= ~union_b
            for y in _bits(y_pool):
                a_list.append(x)
                b_list.append(y)
                done = extend(
                    used | (1 << x) | (1 << y),
                    common_b & adj[y],
                    union_a | adj[x],
                    union_b | adj[y],
                )
                a_list.pop()
                b_list.pop()
                if done:
                    return True
        return False

    if limit > 0:
        extend(0, (1 << total) - 1, 0, 0)
    return best, best_witness


def is_edge_stable(
    g: Graph, k: int, *, vertex_cap: int = DETECTOR_VERTEX_CAP
) -> bool:
    """True iff the graph has no induced half-graph of height >= k."""
    if k < 1:
        raise ValueError(f"stability threshold must be >= 1, got {k}")
    height, _ = half_graph_height(g, cap=k, vertex_cap=vertex_cap)
    return height < k
