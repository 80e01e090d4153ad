"""Generators for the graph families used throughout the package.

These cover the witness families that drive the obstruction machinery
(half-graphs, complete multipartite graphs, abstract marking graphs) plus
basic families (complete, edgeless, cycle) and a seeded random generator.

Half-graph of height n: vertices ``a_1..a_n, b_1..b_n`` with the cross edge
``a_i b_j`` present exactly when ``i >= j``.  The bipartite representative
has no edges inside either part; the general representative produced here
takes the a-side complete and the b-side empty (cross edges alone determine
the family, so any within-part pattern would qualify).

Marking graph for a surface of genus g with p punctures: an abstract model
of a maximal system of 3g-3+p disjoint curves ``c_1..c_k`` together with one
transversal ``t_i`` per curve, where ``t_i`` crosses ``c_i`` and misses every
other ``c_j``.  Vertices 0..k-1 are the curves, k..2k-1 the transversals;
curves are pairwise adjacent, ``c_i ~ t_j`` iff ``i != j``, and the
transversal-transversal adjacency is a caller choice (see ``gen_marking_graph``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

from .graph import Graph

_MASK64 = (1 << 64) - 1

ETA_MODES = ("none", "all", "path")


def gen_complete(n: int) -> Graph:
    if n < 0:
        raise ValueError("n must be non-negative")
    full = (1 << n) - 1
    return Graph._from_masks([full & ~(1 << v) for v in range(n)])


def gen_edgeless(n: int) -> Graph:
    if n < 0:
        raise ValueError("n must be non-negative")
    return Graph._from_masks([0] * n)


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(v, (v + 1) % n) for v in range(n)])


def gen_half_graph(n: int, *, bipartite: bool) -> Graph:
    """Half-graph of height n on 2n vertices (a_i = i-1, b_j = n+j-1, 1-indexed).

    ``bipartite=True`` gives the unique bipartite half-graph; otherwise the
    a-side is completed into a clique as a concrete non-bipartite
    representative.
    """
    if n < 1:
        raise ValueError(f"half-graph height must be >= 1, got {n}")
    edges = []
    for i in range(1, n + 1):
        for j in range(1, i + 1):  # cross edge iff i >= j
            edges.append((i - 1, n + j - 1))
    if not bipartite:
        edges.extend((i, k) for i in range(n) for k in range(i + 1, n))
    return Graph(2 * n, edges)


def gen_multipartite(r: int, t: int) -> Graph:
    """Complete r-partite graph with parts of size t (parts are consecutive runs)."""
    if r < 1 or t < 1:
        raise ValueError(f"multipartite parameters must be >= 1, got r={r}, t={t}")
    n = r * t
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if u // t != v // t:
                edges.append((u, v))
    return Graph(n, edges)


def gen_marking_graph(genus: int, punctures: int, eta_adjacency: str = "all") -> Graph:
    """Abstract marking graph on 2(3g-3+p) vertices.

    ``eta_adjacency`` fixes the adjacency among the transversals, which the
    geometric picture leaves open: ``"none"`` (pairwise crossing), ``"all"``
    (pairwise disjoint), or ``"path"`` (t_i crosses t_j exactly when
    ``|i - j| == 1``, i.e. adjacent iff ``|i - j| >= 2``).
    """
    _check_surface_params(genus, punctures)
    if eta_adjacency not in ETA_MODES:
        raise ValueError(f"eta_adjacency must be one of {ETA_MODES}, got {eta_adjacency!r}")
    k = 3 * genus - 3 + punctures
    edges = []
    for i in range(k):
        for j in range(i + 1, k):
            edges.append((i, j))  # curves pairwise disjoint
    for i in range(k):
        for j in range(k):
            if i != j:
                edges.append((i, k + j))  # transversal j misses curve i
    if eta_adjacency == "all":
        edges.extend((k + i, k + j) for i in range(k) for j in range(i + 1, k))
    elif eta_adjacency == "path":
        edges.extend(
            (k + i, k + j) for i in range(k) for j in range(i + 2, k)
        )
    return Graph(2 * k, edges)


def _check_surface_params(genus: int, punctures: int) -> None:
    if genus < 0 or punctures < 0:
        raise ValueError("genus and punctures must be non-negative")
    if 2 * genus + punctures <= 2:
        raise ValueError(
            f"surface (g={genus}, p={punctures}) is not hyperbolizable (need 2g+p > 2)"
        )
    if 3 * genus + punctures < 5:
        raise ValueError(
            f"surface (g={genus}, p={punctures}) has a degenerate curve graph "
            "(no edges); need 3g+p >= 5"
        )


def _splitmix64(state: int) -> tuple[int, int]:
    """One step of the SplitMix64 generator; returns (new_state, output)."""
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, z ^ (z >> 31)


def random_seed_stream(seed: int, count: int) -> list[int]:
    """The first ``count`` outputs of SplitMix64 seeded with ``seed``."""
    state = seed & _MASK64
    out = []
    for _ in range(count):
        state, z = _splitmix64(state)
        out.append(z)
    return out


def gen_random(n: int, edge_probability: Union[Fraction, int, str], seed: int) -> Graph:
    """Seeded Erdos-Renyi-style graph, bit-identical across runs and platforms.

    The generator is SplitMix64 (documented constants above); pairs (u, v)
    with u < v are visited in lexicographic order, one 64-bit draw per pair,
    and the edge is present iff the top 53 bits of the draw are below
    ``edge_probability * 2**53`` (exact rational comparison, no floats).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    p = Fraction(edge_probability)
    if not 0 <= p <= 1:
        raise ValueError(f"edge probability must be in [0, 1], got {p}")
    state = seed & _MASK64
    threshold = p.numerator << 53
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            state, z = _splitmix64(state)
            if (z >> 11) * p.denominator < threshold:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph._from_masks(adj)


_FAMILY_PARAMS: Mapping[str, tuple[str, ...]] = {
    "half_graph": ("n",),
    "bipartite_half_graph": ("n",),
    "multipartite": ("r", "t"),
    "marking": ("genus", "punctures", "eta_adjacency"),
    "complete": ("n",),
    "edgeless": ("n",),
    "cycle": ("n",),
    "random": ("n", "edge_probability", "seed"),
}


@dataclass(frozen=True)
class GraphFamilySpec:
    """A named generator family plus its parameters, validated on build."""

    family: str
    params: Mapping[str, object]

    def build(self) -> Graph:
        if self.family not in _FAMILY_PARAMS:
            raise ValueError(
                f"unknown family {self.family!r}; known: {sorted(_FAMILY_PARAMS)}"
            )
        expected = _FAMILY_PARAMS[self.family]
        given = set(self.params)
        optional = {"eta_adjacency"}
        missing = [k for k in expected if k not in given and k not in optional]
        extra = given - set(expected)
        if missing or extra:
            raise ValueError(
                f"family {self.family!r} takes parameters {expected}; "
                f"missing {missing}, unexpected {sorted(extra)}"
            )
        p = dict(self.params)
        if self.family == "half_graph":
            return gen_half_graph(int(p["n"]), bipartite=False)
        if self.family == "bipartite_half_graph":
            return gen_half_graph(int(p["n"]), bipartite=True)
        if self.family == "multipartite":
            return gen_multipartite(int(p["r"]), int(p["t"]))
        if self.family == "marking":
            return gen_marking_graph(
                int(p["genus"]), int(p["punctures"]), str(p.get("eta_adjacency", "all"))
            )
        if self.family == "complete":
            return gen_complete(int(p["n"]))
        if self.family == "edgeless":
            return gen_edgeless(int(p["n"]))
        if self.family == "cycle":
            return gen_cycle(int(p["n"]))
        return gen_random(int(p["n"]), Fraction(str(p["edge_probability"])), int(p["seed"]))
