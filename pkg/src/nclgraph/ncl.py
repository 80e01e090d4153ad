"""Exact nested complexity length (NCL) of a finite graph.

A sequence of distinct vertices ``b_1, ..., b_n`` is a *nested complexity
sequence* when every proper prefix has a witness: for each ``k < n`` some
vertex ``a_k`` whose closed neighborhood contains ``b_1..b_k`` but not
``b_{k+1}``.  NCL is the largest such ``n``.

Whether a vertex can extend a prefix depends only on the prefix's vertex
set ``S``: the candidates for a witness form the dominator set
``D(S) = intersection of N[b] over b in S``, a vertex ``v`` is a valid
extension iff ``D(S)`` is not contained in ``N[v]``, and then
``D(S + v) = D(S) & N[v]``.  ``ncl_exact`` memoizes over subsets on this
observation; ``ncl_naive`` is an independent transcription of the
definition over ordered sequences and shares no search code with it.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from . import _kernels
from .errors import SizeCapError
from .graph import Graph
from .invariants import has_kmn_subgraph

logger = logging.getLogger(__name__)

NCL_VERTEX_CAP = 24
NAIVE_VERTEX_CAP = 8


@dataclass(frozen=True)
class NestedComplexitySequence:
    """Certificate that NCL(G) >= len(b): the b-sequence plus its witnesses.

    ``a[k-1]`` witnesses the k-th prefix; witnesses may repeat and may
    coincide with b-vertices.  Serializes as ``{"b": [...], "a": [...]}``.
    """

    b: Tuple[int, ...]
    a: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.b)

    def to_json_dict(self) -> dict:
        return {"b": list(self.b), "a": list(self.a)}

    @classmethod
    def from_json_dict(cls, data: dict) -> "NestedComplexitySequence":
        try:
            b = tuple(int(x) for x in data["b"])
            a = tuple(int(x) for x in data["a"])
        except (KeyError, TypeError, ValueError):
            raise ValueError(
                'certificate must be {"b": [vertices...], "a": [vertices...]}'
            ) from None
        return cls(b, a)


@dataclass(frozen=True)
class BipartiteBoundResult:
    """An NCL upper bound from an absent complete-bipartite subgraph."""

    m: int
    n: int
    bound: int

    @classmethod
    def for_sides(cls, m: int, n: int) -> "BipartiteBoundResult":
        return cls(m, n, 2 ** (m + n + 1) - 2)


def ncl_exact(
    g: Graph, want_certificate: bool = False, *, vertex_cap: int = NCL_VERTEX_CAP
) -> Tuple[int, Optional[NestedComplexitySequence]]:
    """Exact NCL via subset dynamic programming (see the module docstring).

    The empty graph reports 0 (supremum over an empty set of sequences).
    The memo table is a dense byte array indexed by vertex subset, so the
    memory cost is ``2**n`` bytes; the default cap of 24 keeps that at
    16 MiB and can be overridden per call.
    """
    n = g.vertex_count
    if n == 0:
        return 0, None
    if n > vertex_cap:
        raise SizeCapError(
            f"NCL subset table needs 2**{n} bytes; cap is {vertex_cap} vertices "
            "(raise vertex_cap to override)"
        )
    if n > 20:
        logger.warning(
            "NCL on %d vertices allocates a %d MiB subset table", n, (1 << n) >> 20
        )
    closed = g.closed_masks
    table = _kernels.ncl_subset_table(closed)
    value = 1 + max(table[1 << v] for v in range(n))
    if not want_certificate:
        return value, None
    return value, _reconstruct(closed, table, value)


def _reconstruct(
    closed: Tuple[int, ...], table: bytearray, value: int
) -> NestedComplexitySequence:
    """Lexicographically least optimal b-sequence, with least witnesses."""
    n = len(closed)
    b: List[int] = []
    a: List[int] = []
    smask = 0
    dom = (1 << n) - 1
    remaining = value
    while remaining:
        for v in range(n):
            bit = 1 << v
            if smask & bit:
                continue
            # the first vertex needs no witness; extensions need an escape
            if smask and not dom & ~closed[v]:
                continue
            if table[smask | bit] == remaining - 1:
                if smask:
                    # least witness dominating the prefix but missing v
                    a.append(_lowest_bit(dom & ~closed[v]))
                b.append(v)
                smask |= bit
                dom &= closed[v]
                break
        else:  # pragma: no cover - the table always admits a continuation
            raise AssertionError("inconsistent NCL table")
        remaining -= 1
    return NestedComplexitySequence(tuple(b), tuple(a))


def _lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def ncl_naive(g: Graph) -> int:
    """Independent oracle: depth-first search over ordered vertex sequences.

    Extends a sequence by a vertex only after scanning all vertices for a
    witness, exactly as the definition reads.  Deliberately shares no code
    or representation with ``ncl_exact``.
    """
    n = g.vertex_count
    if n > NAIVE_VERTEX_CAP:
        raise SizeCapError(
            f"naive NCL enumeration is factorial; graph has {n} vertices, "
            f"cap is {NAIVE_VERTEX_CAP}"
        )
    if n == 0:
        return 0
    hoods = [g.closed_neighborhood(v) for v in range(n)]
    best = 0
    seq: List[int] = []
    members: set[int] = set()

    def extend() -> None:
        nonlocal best
        best = max(best, len(seq))
        for v in range(n):
            if v in members:
                continue
            if seq and not any(
                members <= hoods[w] and v not in hoods[w] for w in range(n)
            ):
                continue
            seq.append(v)
            members.add(v)
            extend()
            seq.pop()
            members.remove(v)

    extend()
    return best


def check_certificate(g: Graph, cert: NestedComplexitySequence) -> List[str]:
    """All violated clauses of the nested-complexity definition (empty = valid).

    Vertices outside the graph raise instead: an out-of-range certificate
    is malformed rather than merely invalid.
    """
    for v in (*cert.b, *cert.a):
        if not 0 <= v < g.vertex_count:
            raise ValueError(f"certificate vertex {v} outside 0..{g.vertex_count - 1}")
    problems = []
    if not cert.b:
        problems.append("b-sequence is empty")
        return problems
    if len(cert.a) != len(cert.b) - 1:
        problems.append(
            f"need exactly {len(cert.b) - 1} witnesses for {len(cert.b)} "
            f"b-vertices, got {len(cert.a)}"
        )
        return problems
    if len(set(cert.b)) != len(cert.b):
        problems.append("b-sequence repeats a vertex")
    closed = g.closed_masks
    for k in range(1, len(cert.b)):
        witness = cert.a[k - 1]
        hood = closed[witness]
        for i in range(k):
            if not hood >> cert.b[i] & 1:
                problems.append(
                    f"step {k}: b_{i + 1}={cert.b[i]} not in N[a_{k}={witness}]"
                )
        if hood >> cert.b[k] & 1:
            problems.append(
                f"step {k}: b_{k + 1}={cert.b[k]} must escape N[a_{k}={witness}]"
            )
    return problems


def verify_certificate(g: Graph, cert: NestedComplexitySequence) -> bool:
    """True iff every clause of the definition holds for this certificate."""
    return not check_certificate(g, cert)


def ncl_upper_bound_bipartite(
    g: Graph, search_limit: int = 6
) -> Optional[BipartiteBoundResult]:
    """Best NCL upper bound from a missing K_{m,n} subgraph.

    A graph with no K_{m,n} subgraph has NCL at most ``2**(m+n+1) - 2``.
    Scans all ``m + n <= search_limit`` (smaller sums give smaller bounds;
    ties go to smaller m) and returns the first absent pattern, or None if
    every explored pattern is present.
    """
    if search_limit < 2:
        raise ValueError(f"search_limit must be >= 2, got {search_limit}")
    for total in range(2, search_limit + 1):
        for m in range(1, total):
            n = total - m
            if not has_kmn_subgraph(g, m, n, vertex_cap=g.vertex_count):
                return BipartiteBoundResult.for_sides(m, n)
    return None
