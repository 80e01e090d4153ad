"""Independent brute-force oracles for cross-checking the fast searches.

Everything here enumerates naively over itertools and never touches the
package's bitmask search code, so agreement is meaningful evidence.
"""

from itertools import combinations, permutations

from nclgraph import Graph


def brute_clique_number(g: Graph) -> int:
    n = g.vertex_count
    for size in range(n, 0, -1):
        for vs in combinations(range(n), size):
            if all(g.has_edge(u, v) for u, v in combinations(vs, 2)):
                return size
    return 0


def brute_chromatic_number(g: Graph) -> int:
    n = g.vertex_count
    if n == 0:
        return 0

    def colorable(k: int) -> bool:
        colors = [-1] * n

        def assign(v: int) -> bool:
            if v == n:
                return True
            for c in range(k):
                if all(colors[u] != c for u in range(v) if g.has_edge(u, v)):
                    colors[v] = c
                    if assign(v + 1):
                        return True
                    colors[v] = -1
            return False

        return assign(0)

    k = 1
    while not colorable(k):
        k += 1
    return k


def brute_has_kmn(g: Graph, m: int, n: int) -> bool:
    total = g.vertex_count
    for a_set in combinations(range(total), m):
        rest = [v for v in range(total) if v not in a_set]
        for b_set in combinations(rest, n):
            if all(g.has_edge(u, v) for u in a_set for v in b_set):
                return True
    return False


def brute_induced_multipartite_exists(g: Graph, r: int, t: int) -> bool:
    """Check via the complement: an induced complete r-partite pattern with
    parts of size t means the complement induced on those vertices is a
    disjoint union of r cliques of size t."""
    total = g.vertex_count
    for vs in combinations(range(total), r * t):
        comp = g.induced_subgraph(vs).complement()
        if _is_union_of_cliques(comp, r, t):
            return True
    return False


def _is_union_of_cliques(comp: Graph, r: int, t: int) -> bool:
    n = comp.vertex_count
    seen = set()
    parts = 0
    for v in range(n):
        if v in seen:
            continue
        stack = [v]
        component = set()
        while stack:
            u = stack.pop()
            if u in component:
                continue
            component.add(u)
            stack.extend(comp.neighbors(u) - component)
        if len(component) != t:
            return False
        if any(
            not comp.has_edge(x, y) for x, y in combinations(sorted(component), 2)
        ):
            return False
        seen |= component
        parts += 1
    return parts == r


def brute_half_graph_height(g: Graph, bipartite: bool) -> int:
    n = g.vertex_count
    for h in range(n // 2, 0, -1):
        for picked in permutations(range(n), 2 * h):
            a, b = picked[:h], picked[h:]
            ok = all(
                g.has_edge(a[i], b[j]) == (i >= j)
                for i in range(h)
                for j in range(h)
            )
            if ok and bipartite:
                ok = all(
                    not g.has_edge(p[x], p[y])
                    for p in (a, b)
                    for x in range(h)
                    for y in range(x + 1, h)
                )
            if ok:
                return h
    return 0
