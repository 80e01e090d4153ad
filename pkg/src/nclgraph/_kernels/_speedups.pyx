# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: the hot exponential searches on bitmask adjacency.

Each function is the exact algorithmic twin of ``nclgraph._kernels.pure``
(same branching rules, same tie-breaking), so values, witness masks and
subset tables are bit-identical between backends.  Width limits: the
nested-complexity table uses 32-bit subset masks (at most 28 vertices),
the clique/coloring searches 64-bit masks (at most 64 vertices).
"""

BACKEND = "compiled"

ctypedef unsigned int u32
ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctz(unsigned int) nogil
    int __builtin_ctzll(unsigned long long) nogil


# ---------------------------------------------------------------------------
# nested complexity length: subset dynamic program
# ---------------------------------------------------------------------------

cdef int _ncl_walk(u32 smask, u32 dom, u32* cl, u32 full,
                   unsigned char* tbl) noexcept nogil:
    cdef unsigned char cached = tbl[smask]
    if cached != 255:
        return cached
    cdef int best = 0
    cdef int v, got
    cdef u32 rest = full & ~smask
    cdef u32 low
    while rest:
        low = rest & (~rest + 1)
        rest ^= low
        v = __builtin_ctz(low)
        if dom & ~cl[v]:
            got = 1 + _ncl_walk(smask | low, dom & cl[v], cl, full, tbl)
            if got > best:
                best = got
    tbl[smask] = <unsigned char>best
    return best


def ncl_subset_table(closed):
    """Subset-DP table; see the pure twin for the recurrence."""
    cdef int n = len(closed)
    if n == 0:
        return bytearray()
    if n > 28:
        raise ValueError(f"compiled kernel limited to 28 vertices, got {n}")
    cdef u32 cl[28]
    cdef int i
    for i in range(n):
        cl[i] = closed[i]
    table = bytearray(b"\xff") * (1 << n)
    cdef unsigned char[::1] view = table
    cdef unsigned char* tbl = &view[0]
    cdef u32 full = <u32>((1 << n) - 1)
    for i in range(n):
        _ncl_walk(<u32>(1 << i), cl[i], cl, full, tbl)
    return table


# ---------------------------------------------------------------------------
# maximum clique: branch and bound with pivoting
# ---------------------------------------------------------------------------

cdef void _mc_expand(u64 r_mask, int r_size, u64 p_mask, u64 x_mask,
                     u64* a, u64* best_mask, int* best_size) noexcept nogil:
    cdef u64 scan, low, branch
    cdef int u, v, cover, pivot, pivot_cover
    if p_mask == 0 and x_mask == 0:
        if r_size > best_size[0]:
            best_size[0] = r_size
            best_mask[0] = r_mask
        return
    if r_size + __builtin_popcountll(p_mask) <= best_size[0]:
        return
    pivot = -1
    pivot_cover = -1
    scan = p_mask | x_mask
    while scan:
        low = scan & (~scan + 1)
        scan ^= low
        u = __builtin_ctzll(low)
        cover = __builtin_popcountll(p_mask & a[u])
        if cover > pivot_cover:
            pivot_cover = cover
            pivot = u
    branch = p_mask & ~a[pivot]
    while branch:
        low = branch & (~branch + 1)
        branch ^= low
        v = __builtin_ctzll(low)
        _mc_expand(r_mask | low, r_size + 1, p_mask & a[v], x_mask & a[v],
                   a, best_mask, best_size)
        p_mask ^= low
        x_mask |= low
        if r_size + __builtin_popcountll(p_mask) <= best_size[0]:
            return


def max_clique(adj):
    """Bitmask of one maximum clique (deterministic, same as the pure twin)."""
    cdef int n = len(adj)
    if n > 64:
        raise ValueError(f"compiled kernel limited to 64 vertices, got {n}")
    if n == 0:
        return 0
    cdef u64 a[64]
    cdef int i
    for i in range(n):
        a[i] = adj[i]
    cdef u64 best_mask = 0
    cdef int best_size = 0
    cdef u64 full = (<u64>1 << n) - 1 if n < 64 else <u64>0 - 1
    _mc_expand(0, 0, full, 0, a, &best_mask, &best_size)
    return int(best_mask)


# ---------------------------------------------------------------------------
# chromatic number: saturation-ordered branch and bound
# ---------------------------------------------------------------------------

cdef u64 _seen_colors(u64 neighbors, int* colors) noexcept nogil:
    # bit (c - 1) set iff some neighbor carries color c
    cdef u64 scan = neighbors, low, seen = 0
    cdef int c
    while scan:
        low = scan & (~scan + 1)
        scan ^= low
        c = colors[__builtin_ctzll(low)]
        if c:
            seen |= <u64>1 << (c - 1)
    return seen


cdef int _greedy_bound(u64* a, int n) noexcept nogil:
    cdef int colors[64]
    cdef int i, v, pick, c, used
    cdef int sat, deg, best_sat, best_deg
    cdef u64 neighbor_colors
    for i in range(n):
        colors[i] = 0
    used = 0
    for i in range(n):
        pick = -1
        best_sat = -1
        best_deg = -1
        for v in range(n):
            if colors[v]:
                continue
            sat = __builtin_popcountll(_seen_colors(a[v], colors))
            deg = __builtin_popcountll(a[v])
            if sat > best_sat or (sat == best_sat and deg > best_deg):
                best_sat = sat
                best_deg = deg
                pick = v
        neighbor_colors = _seen_colors(a[pick], colors)
        c = 1
        while neighbor_colors >> (c - 1) & 1:
            c += 1
        colors[pick] = c
        if c > used:
            used = c
    return used


cdef void _chrom_solve(int colored, int used, u64* a, int n, int* colors,
                       int lower, int* best) noexcept nogil:
    cdef int v, pick, c, limit
    cdef int sat, deg, best_sat, best_deg
    cdef u64 neighbor_colors
    if used >= best[0]:
        return
    if colored == n:
        best[0] = used
        return
    pick = -1
    best_sat = -1
    best_deg = -1
    for v in range(n):
        if colors[v]:
            continue
        sat = __builtin_popcountll(_seen_colors(a[v], colors))
        deg = __builtin_popcountll(a[v])
        if sat > best_sat or (sat == best_sat and deg > best_deg):
            best_sat = sat
            best_deg = deg
            pick = v
    neighbor_colors = _seen_colors(a[pick], colors)
    limit = used + 1
    if best[0] - 1 < limit:
        limit = best[0] - 1
    for c in range(1, limit + 1):
        if neighbor_colors >> (c - 1) & 1:
            continue
        colors[pick] = c
        _chrom_solve(colored + 1, used if used >= c else c, a, n, colors, lower, best)
        colors[pick] = 0
        if best[0] <= lower:
            return


def chromatic_number(adj):
    """Exact chromatic number (same search as the pure twin)."""
    cdef int n = len(adj)
    if n > 64:
        raise ValueError(f"compiled kernel limited to 64 vertices, got {n}")
    if n == 0:
        return 0
    cdef u64 a[64]
    cdef int i
    for i in range(n):
        a[i] = adj[i]
    cdef u64 clique_mask = max_clique(adj)
    cdef int lower = __builtin_popcountll(clique_mask)
    cdef int best = _greedy_bound(a, n)
    if lower == best:
        return best
    cdef int colors[64]
    for i in range(n):
        colors[i] = 0
    _chrom_solve(0, 0, a, n, colors, lower, &best)
    return best
