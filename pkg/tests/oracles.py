"""Slow reference implementations used to freeze and cross-check expected values.

Nothing here imports the search or verification code it is compared against.
"""

from itertools import combinations


def pascal(n, k):
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row[k] if k <= n else 0


def colex_order(n, m):
    return sorted(combinations(range(1, n + 1), m), key=lambda c: c[::-1])


def naive_design_ok(t, v, blocks, lam):
    """Return (ok, first bad t-subset in colex order, its count)."""
    bsets = [set(b) for b in blocks]
    for ts in colex_order(v, t):
        count = sum(1 for b in bsets if set(ts) <= b)
        if count != lam:
            return False, ts, count
    return True, None, None


def edge_list(g):
    return [(u, v) for u in range(g.vertex_count) for v in range(u + 1, g.vertex_count) if (g.adjacency[u] >> v) & 1]


def brute_mis(g):
    """All maximal independent sets by checking every vertex subset."""
    n = g.vertex_count
    edges = edge_list(g)
    nbrs = [set() for _ in range(n)]
    for u, v in edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    out = []
    for mask in range(1, 1 << n):
        members = [v for v in range(n) if mask >> v & 1]
        if any(v in nbrs[u] for u, v in combinations(members, 2)):
            continue
        if all(mask >> w & 1 or nbrs[w] & set(members) for w in range(n)):
            out.append(tuple(members))
    return sorted(out)


def set_partitions(n):
    """Restricted growth strings of length n: every coloring up to renaming colors."""
    if n == 0:
        yield ()
        return
    a = [0] * n

    def rec(i, top):
        if i == n:
            yield tuple(a)
            return
        for c in range(top + 2):
            a[i] = c
            yield from rec(i + 1, max(top, c))

    yield from rec(1, 0)


def definitional_fall(n, nbrs, colors):
    k = max(colors) + 1
    for v in range(n):
        if any(colors[u] == colors[v] for u in nbrs[v]):
            return False
        if len({colors[v]} | {colors[u] for u in nbrs[v]}) != k:
            return False
    return True


def naive_fall_spectrum(g):
    n = g.vertex_count
    nbrs = [set() for _ in range(n)]
    for u, v in edge_list(g):
        nbrs[u].add(v)
        nbrs[v].add(u)
    return sorted({max(c) + 1 for c in set_partitions(n) if definitional_fall(n, nbrs, c)})


def independent_sets(g):
    """Every nonempty independent set, by extension from the largest member."""
    n = g.vertex_count
    out = []

    def rec(current, allowed, start):
        for v in range(start, n):
            if allowed >> v & 1:
                nxt = current + [v]
                out.append(tuple(nxt))
                rec(nxt, allowed & ~g.adjacency[v], v + 1)

    rec([], (1 << n) - 1, 0)
    return out
