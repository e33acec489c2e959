"""Independent reference implementations used to cross-check the package.

Everything here is deliberately written against plain dict/list structures,
separate from the package's array kernels, so agreement between the two is
meaningful.  Slow is fine; these run on small graphs only.
"""

import heapq
import itertools
import math

import numpy as np

EPS_REL = 1e-9


def dist_above(dist, bound, exact):
    """Same comparison convention as the package: exact for integer weights."""
    if exact:
        return dist > bound
    return dist > bound * (1.0 + EPS_REL)


def adjacency_dict(edges):
    adj = {}
    for u, v, w in edges:
        adj.setdefault(u, []).append((v, w, (u, v)))
        adj.setdefault(v, []).append((u, w, (u, v)))
    return adj


def masked_dist(n, edges, s, t, blocked_vertices=(), blocked_edges=()):
    """Plain heapq Dijkstra s-t distance with faults removed."""
    bv = set(blocked_vertices)
    be = {(min(a, b), max(a, b)) for a, b in blocked_edges}
    if s in bv or t in bv:
        return math.inf
    if s == t:
        return 0.0
    adj = adjacency_dict(edges)
    dist = {s: 0.0}
    heap = [(0.0, s)]
    seen = set()
    while heap:
        d, x = heapq.heappop(heap)
        if x in seen:
            continue
        seen.add(x)
        if x == t:
            return d
        for y, w, key in adj.get(x, []):
            if y in bv or key in be or y in seen:
                continue
            nd = d + w
            if nd < dist.get(y, math.inf):
                dist[y] = nd
                heapq.heappush(heap, (nd, y))
    return math.inf


def distance_matrix(n, edges, blocked_vertices=(), blocked_edges=()):
    """Floyd-Warshall all-pairs matrix; faulted vertex rows/columns are inf."""
    bv = set(blocked_vertices)
    be = {(min(a, b), max(a, b)) for a, b in blocked_edges}
    d = np.full((n, n), math.inf)
    for i in range(n):
        if i not in bv:
            d[i, i] = 0.0
    for u, v, w in edges:
        if u in bv or v in bv or (u, v) in be:
            continue
        if w < d[u, v]:
            d[u, v] = d[v, u] = w
    for m in range(n):
        np.minimum(d, d[:, m : m + 1] + d[m : m + 1, :], out=d)
    return d


def witness_bruteforce(n, edges, u, v, bound, f, mode, exact):
    """First fault set (sizes ascending, lexicographic members) beating ``bound``.

    The universe is unrestricted: all vertices except the endpoints, or every
    edge currently present.  Returns a sorted tuple of members, or None.
    """
    if mode == "vertex":
        universe = [x for x in range(n) if x != u and x != v]
    else:
        universe = sorted((a, b) for a, b, _ in edges)
    for size in range(f + 1):
        for combo in itertools.combinations(universe, size):
            if mode == "vertex":
                dist = masked_dist(n, edges, u, v, blocked_vertices=combo)
            else:
                dist = masked_dist(n, edges, u, v, blocked_edges=combo)
            if dist_above(dist, bound, exact):
                return combo
    return None


def ft_greedy_bruteforce(n, edges, k, f, mode):
    """Reference greedy run; returns (accepted edge list, witness list)."""
    exact = all(float(w).is_integer() for _, _, w in edges)
    order = sorted(edges, key=lambda e: (e[2], e[0], e[1]))
    kept = []
    witnesses = []
    for u, v, w in order:
        found = witness_bruteforce(n, kept, u, v, k * w, f, mode, exact)
        witnesses.append(found)
        if found is not None:
            kept.append((u, v, w))
    return kept, witnesses


def cycles_by_enumeration(n, edges, max_edges):
    """All simple cycles with at most ``max_edges`` edges, as vertex tuples.

    Canonical form: smallest vertex first, second element smaller than last.
    """
    adj = {}
    for u, v, _ in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    found = set()

    def walk(start, path, on_path):
        last = path[-1]
        for y in sorted(adj.get(last, ())):
            if y == start and len(path) >= 3:
                if path[1] < path[-1]:
                    found.add(tuple(path))
                continue
            if y <= start or y in on_path or len(path) == max_edges:
                continue
            on_path.add(y)
            path.append(y)
            walk(start, path, on_path)
            path.pop()
            on_path.remove(y)

    for s in range(n):
        walk(s, [s], {s})
    return sorted(found, key=lambda c: (len(c), c))


def girth_by_enumeration(n, edges):
    cycles = cycles_by_enumeration(n, edges, n)
    return float(min((len(c) for c in cycles), default=math.inf))
