"""Pure-Python reference kernels for the exponential searches.

These are the fallback twins of the compiled module ``_speedups``; both
implement exactly the same algorithms on the same bitmask representation,
so every caller-visible output (values, witness masks, subset tables) is
identical between backends.  Inputs are sequences of per-vertex adjacency
bitmasks as produced by :class:`nclgraph.graph.Graph`.
"""

from __future__ import annotations

from typing import Sequence

BACKEND = "pure"


def ncl_subset_table(closed: Sequence[int]) -> bytearray:
    """Subset-DP table for nested complexity length.

    ``table[S]`` is the maximum number of vertices that can still be appended
    to a sequence whose prefix occupies vertex set ``S`` (``255`` marks
    subsets the search never reached).  A vertex ``v`` extends a prefix with
    dominator set ``D`` (the common closed neighborhood of the prefix) iff
    some dominator escapes ``N[v]``, i.e. ``D & ~closed[v] != 0``; the new
    dominator set is then ``D & closed[v]``.  The value of a prefix depends
    only on its vertex set, which is what makes the memoization sound.
    """
    n = len(closed)
    if n == 0:
        return bytearray()
    table = bytearray(b"\xff") * (1 << n)
    full = (1 << n) - 1

    def walk(smask: int, dom: int) -> int:
        cached = table[smask]
        if cached != 255:
            return cached
        best = 0
        rest = full & ~smask
        while rest:
            low = rest & -rest
            rest ^= low
            v = low.bit_length() - 1
            if dom & ~closed[v]:
                got = 1 + walk(smask | low, dom & closed[v])
                if got > best:
                    best = got
        table[smask] = best
        return best

    for v in range(n):
        walk(1 << v, closed[v])
    return table


def max_clique(adj: Sequence[int]) -> int:
    """Bitmask of one maximum clique (deterministic; 0 for the empty graph).

    Branch and bound in the Bron-Kerbosch style with pivoting: the pivot is
    the vertex of P|X covering most of P (ties to the lowest index), only
    non-neighbors of the pivot are branched on, and branches that cannot
    beat the incumbent are cut.
    """
    n = len(adj)
    best_mask = 0
    best_size = 0

    def expand(r_mask: int, r_size: int, p_mask: int, x_mask: int) -> None:
        nonlocal best_mask, best_size
        if not p_mask and not x_mask:
            if r_size > best_size:
                best_size = r_size
                best_mask = r_mask
            return
        if r_size + p_mask.bit_count() <= best_size:
            return
        pivot = -1
        pivot_cover = -1
        scan = p_mask | x_mask
        while scan:
            low = scan & -scan
            scan ^= low
            u = low.bit_length() - 1
            cover = (p_mask & adj[u]).bit_count()
            if cover > pivot_cover:
                pivot_cover = cover
                pivot = u
        branch = p_mask & ~adj[pivot]
        while branch:
            low = branch & -branch
            branch ^= low
            v = low.bit_length() - 1
            expand(r_mask | low, r_size + 1, p_mask & adj[v], x_mask & adj[v])
            p_mask ^= low
            x_mask |= low
            if r_size + p_mask.bit_count() <= best_size:
                return

    if n:
        expand(0, 0, (1 << n) - 1, 0)
    return best_mask


def chromatic_number(adj: Sequence[int]) -> int:
    """Exact chromatic number via saturation-ordered branch and bound.

    Branches on the uncolored vertex with the most distinctly-colored
    neighbors (ties by degree, then lowest index); tries every used color
    plus at most one fresh color.  The initial incumbent comes from the
    greedy pass of the same ordering, and a maximum clique gives the lower
    cutoff.
    """
    n = len(adj)
    if n == 0:
        return 0
    lower = max_clique(adj).bit_count()
    colors = [0] * n  # 0 = uncolored, colors are 1..k
    best = _greedy_saturation_bound(adj)
    if lower == best:
        return best

    def seen_colors(neighbors: int) -> int:
        # bit (c - 1) set iff some neighbor carries color c
        seen = 0
        scan = neighbors
        while scan:
            low = scan & -scan
            scan ^= low
            c = colors[low.bit_length() - 1]
            if c:
                seen |= 1 << (c - 1)
        return seen

    def select() -> int:
        pick = -1
        key = (-1, -1)
        for v in range(n):
            if colors[v]:
                continue
            cand = (seen_colors(adj[v]).bit_count(), adj[v].bit_count())
            if cand > key:
                key = cand
                pick = v
        return pick

    def solve(colored: int, used: int) -> None:
        nonlocal best
        if used >= best:
            return
        if colored == n:
            best = used
            return
        v = select()
        neighbor_colors = seen_colors(adj[v])
        limit = min(used + 1, best - 1)
        for c in range(1, limit + 1):
            if neighbor_colors >> (c - 1) & 1:
                continue
            colors[v] = c
            solve(colored + 1, max(used, c))
            colors[v] = 0
            if best <= lower:
                return

    solve(0, 0)
    return best


def _greedy_saturation_bound(adj: Sequence[int]) -> int:
    n = len(adj)
    colors = [0] * n
    used = 0

    def seen_colors(neighbors: int) -> int:
        seen = 0
        scan = neighbors
        while scan:
            low = scan & -scan
            scan ^= low
            c = colors[low.bit_length() - 1]
            if c:
                seen |= 1 << (c - 1)
        return seen

    for _ in range(n):
        pick = -1
        key = (-1, -1)
        for v in range(n):
            if colors[v]:
                continue
            cand = (seen_colors(adj[v]).bit_count(), adj[v].bit_count())
            if cand > key:
                key = cand
                pick = v
        neighbor_colors = seen_colors(adj[pick])
        c = 1
        while neighbor_colors >> (c - 1) & 1:
            c += 1
        colors[pick] = c
        used = max(used, c)
    return used
