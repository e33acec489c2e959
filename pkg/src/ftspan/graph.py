"""Weighted undirected simple graphs with fault-aware shortest-path queries.

Vertices are dense integer ids ``0..n-1``.  Edges carry positive float
weights; parallel edges and self-loops are rejected.  Graphs are immutable
after construction.
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import kernels

INFINITE = math.inf

EPS_REL = 1e-9


class FaultMode(Enum):
    """Whether a fault set removes vertices or edges."""

    VERTEX = "vertex"
    EDGE = "edge"


class GraphFormatError(ValueError):
    """Raised for malformed edge-list input."""


def _norm_edge(u, v):
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class FaultSet:
    """A set of vertices or edges to delete, |members| bounded by the caller's f.

    Vertex members are ids; edge members are ``(u, v)`` tuples with ``u < v``.
    """

    mode: FaultMode
    members: frozenset

    @staticmethod
    def vertices(ids):
        return FaultSet(FaultMode.VERTEX, frozenset(int(x) for x in ids))

    @staticmethod
    def edges(pairs):
        return FaultSet(FaultMode.EDGE, frozenset(_norm_edge(int(u), int(v)) for u, v in pairs))

    @staticmethod
    def empty(mode=FaultMode.VERTEX):
        return FaultSet(mode, frozenset())

    def __len__(self):
        return len(self.members)

    def sorted_members(self):
        return tuple(sorted(self.members))


class Graph:
    """Immutable weighted undirected simple graph."""

    __slots__ = ("n", "edges", "_index", "_adj", "_integral", "_kernel_adj")

    def __init__(self, n, edges):
        n = int(n)
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen = {}
        norm = []
        for u, v, w in edges:
            u = int(u)
            v = int(v)
            w = float(w)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (math.isfinite(w) and w > 0):
                raise ValueError(f"edge ({u},{v}) has non-positive weight {w}")
            key = _norm_edge(u, v)
            if key in seen:
                raise ValueError(f"duplicate edge ({key[0]},{key[1]})")
            seen[key] = True
            norm.append((key[0], key[1], w))
        norm.sort(key=lambda e: (e[0], e[1]))
        self.n = n
        self.edges = tuple(norm)
        self._index = {(u, v): i for i, (u, v, _) in enumerate(norm)}
        adj = [[] for _ in range(n)]
        for i, (u, v, w) in enumerate(norm):
            adj[u].append((v, w, i))
            adj[v].append((u, w, i))
        for lst in adj:
            lst.sort()
        self._adj = adj
        self._integral = all(w == int(w) for _, _, w in norm)
        self._kernel_adj = None

    @property
    def m(self):
        return len(self.edges)

    @property
    def has_integer_weights(self):
        """True when every weight is integral, so distance sums are exact."""
        return self._integral

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def has_edge(self, u, v):
        return _norm_edge(u, v) in self._index

    def edge_id(self, u, v):
        return self._index[_norm_edge(u, v)]

    def weight(self, u, v):
        return self.edges[self.edge_id(u, v)][2]

    def neighbors(self, u):
        return [v for v, _, _ in self._adj[u]]

    def degree(self, u):
        return len(self._adj[u])

    def adjacency(self, u):
        """List of (neighbor, weight, edge_id), sorted by neighbor id."""
        return self._adj[u]

    def kernel_adjacency(self):
        if self._kernel_adj is None:
            self._kernel_adj = kernels.Adjacency.from_edges(self.n, self.edges)
        return self._kernel_adj

    def edge_subgraph(self, pairs):
        """Subgraph on the same vertex set keeping only the given edges."""
        picked = []
        for u, v in pairs:
            i = self._index.get(_norm_edge(u, v))
            if i is None:
                raise ValueError(f"edge ({u},{v}) not in graph")
            picked.append(self.edges[i])
        return Graph(self.n, picked)

    def induced_subgraph(self, vertices):
        """Induced subgraph; returns (graph, old_ids) with sorted relabeling."""
        old_ids = sorted(set(int(v) for v in vertices))
        for v in old_ids:
            if not 0 <= v < self.n:
                raise ValueError(f"vertex {v} out of range")
        relabel = {v: i for i, v in enumerate(old_ids)}
        keep = set(old_ids)
        edges = [
            (relabel[u], relabel[v], w)
            for u, v, w in self.edges
            if u in keep and v in keep
        ]
        return Graph(len(old_ids), edges), old_ids

    def is_subgraph_of(self, other):
        """True when vertex sets match and every edge appears in ``other`` with equal weight."""
        if self.n != other.n:
            return False
        for u, v, w in self.edges:
            i = other._index.get((u, v))
            if i is None or other.edges[i][2] != w:
                return False
        return True

    def validate_faults(self, faults):
        if faults is None:
            return
        if faults.mode is FaultMode.VERTEX:
            for x in faults.members:
                if not (isinstance(x, int) and 0 <= x < self.n):
                    raise ValueError(f"fault vertex {x!r} out of range")
        else:
            for pair in faults.members:
                u, v = pair
                if not (0 <= u < v < self.n):
                    raise ValueError(f"fault edge {pair!r} malformed")

    def fault_masks(self, faults):
        """uint8 (vertex_mask, edge_mask) arrays for the kernels; None when empty.

        Edge faults naming edges absent from this graph are ignored: deleting
        a non-edge is a no-op, which lets fault sets drawn from a supergraph
        be applied to subgraphs.
        """
        if faults is None or not faults.members:
            return None, None
        self.validate_faults(faults)
        if faults.mode is FaultMode.VERTEX:
            vmask = np.zeros(self.n, dtype=np.uint8)
            for x in faults.members:
                vmask[x] = 1
            return vmask, None
        emask = np.zeros(max(1, self.m), dtype=np.uint8)
        for pair in faults.members:
            i = self._index.get(pair)
            if i is not None:
                emask[i] = 1
        return None, emask


def dist_greater(a, b, exact):
    """Strict ``a > b`` under the weight-comparison convention.

    Exact comparison when all weights are integers (sums stay exact in
    float64); otherwise a relative tolerance absorbs roundoff.
    """
    if exact:
        return a > b
    return a > b * (1.0 + EPS_REL)


def comparison_cutoff(bound, exact):
    """Largest distance still treated as ``<= bound`` by :func:`dist_greater`."""
    if exact:
        return bound
    return bound * (1.0 + EPS_REL)


def shortest_path_dist(g, s, t, faults=None):
    """Exact shortest-path distance in ``g`` minus ``faults``.

    Returns inf when disconnected or when a vertex fault removes ``s`` or ``t``.
    """
    if not (0 <= s < g.n and 0 <= t < g.n):
        raise ValueError(f"endpoint out of range: s={s}, t={t}")
    vmask, emask = g.fault_masks(faults)
    if faults is not None and faults.mode is FaultMode.VERTEX and (
        s in faults.members or t in faults.members
    ):
        return INFINITE
    ws = kernels.Workspace(g.n, max(1, g.m))
    found, dist, _, _ = ws.st_search(g.kernel_adjacency(), s, t, None, vmask, emask)
    return dist if found else INFINITE


def girth(g):
    """Length (edge count) of a shortest cycle; inf for forests.

    BFS from every vertex; the first non-tree edge seen from a root on a
    shortest cycle closes that cycle exactly, so the minimum over roots is
    exact.  Weights are ignored.
    """
    from collections import deque

    best = INFINITE
    level = [-1] * g.n
    parent = [-1] * g.n
    for r in range(g.n):
        for i in range(g.n):
            level[i] = -1
        level[r] = 0
        parent[r] = -1
        q = deque([r])
        while q:
            x = q.popleft()
            if 2 * level[x] >= best:
                break
            for y, _, _ in g._adj[x]:
                if level[y] == -1:
                    level[y] = level[x] + 1
                    parent[y] = x
                    q.append(y)
                elif y != parent[x] and parent[y] != x:
                    cand = level[x] + level[y] + 1
                    if cand < best:
                        best = cand
    return best


def enumerate_short_cycles(g, max_edges):
    """All simple cycles with at most ``max_edges`` edges, each listed once.

    Cycles are vertex tuples starting at their minimum id and oriented toward
    the smaller of its two cycle neighbors; the result is sorted by
    (length, vertex sequence).
    """
    if max_edges < 3:
        raise ValueError("cycles need at least 3 edges")
    cycles = []
    adj = g._adj
    on_path = [False] * g.n
    path = []

    def extend(x, start):
        for y, _, _ in adj[x]:
            if y == start:
                if len(path) >= 3 and path[1] < path[-1]:
                    cycles.append(tuple(path))
            elif y > start and not on_path[y] and len(path) < max_edges:
                on_path[y] = True
                path.append(y)
                extend(y, start)
                path.pop()
                on_path[y] = False

    for v in range(g.n):
        on_path[v] = True
        path.append(v)
        extend(v, v)
        path.pop()
        on_path[v] = False
    cycles.sort(key=lambda c: (len(c), c))
    return cycles


def product_vertex(u, x, n2):
    """Row-major product vertex id for factor coordinates (u, x)."""
    return u * n2 + x


def product_coords(p, n2):
    """Inverse of :func:`product_vertex`."""
    return divmod(p, n2)


def cartesian_product(g1, g2):
    """Cartesian product: move along one factor at a time, inheriting that edge's weight."""
    n2 = g2.n
    edges = []
    for u in range(g1.n):
        for x, y, w in g2.edges:
            edges.append((product_vertex(u, x, n2), product_vertex(u, y, n2), w))
    for u, v, w in g1.edges:
        for x in range(n2):
            edges.append((product_vertex(u, x, n2), product_vertex(v, x, n2), w))
    return Graph(g1.n * n2, edges)


def tensor_product(g1, g2):
    """Tensor product: move along both factors at once; weights multiply."""
    n2 = g2.n
    edges = []
    for u, v, w1 in g1.edges:
        for x, y, w2 in g2.edges:
            edges.append((product_vertex(u, x, n2), product_vertex(v, y, n2), w1 * w2))
            edges.append((product_vertex(u, y, n2), product_vertex(v, x, n2), w1 * w2))
    return Graph(g1.n * n2, edges)


def moore_bound(n, k):
    """Asymptotic edge-count ceiling n^(1 + 1/floor(k/2)) for girth above k."""
    n = int(n)
    k = int(k)
    if n < 1:
        raise ValueError("n must be positive")
    if k < 2:
        raise ValueError("k must be at least 2")
    return float(n) ** (1.0 + 1.0 / (k // 2))


def _format_weight(w):
    return repr(w)


def dump_graph(g):
    """Serialize to the edge-list format; inverse of :func:`parse_graph`."""
    lines = [f"p {g.n} {g.m}"]
    for u, v, w in g.edges:
        lines.append(f"e {u} {v} {_format_weight(w)}")
    return "\n".join(lines) + "\n"


def parse_graph(text):
    """Parse the edge-list format::

        p <n> <m>
        e <u> <v> <w>

    ``#`` starts a comment line.  Duplicate edges and self-loops are errors.
    """
    n = None
    m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        if tok[0] == "p":
            if n is not None:
                raise GraphFormatError(f"line {lineno}: duplicate header")
            if len(tok) != 3:
                raise GraphFormatError(f"line {lineno}: header needs 'p <n> <m>'")
            try:
                n, m = int(tok[1]), int(tok[2])
            except ValueError as exc:
                raise GraphFormatError(f"line {lineno}: bad header numbers") from exc
        elif tok[0] == "e":
            if n is None:
                raise GraphFormatError(f"line {lineno}: edge before header")
            if len(tok) != 4:
                raise GraphFormatError(f"line {lineno}: edge needs 'e <u> <v> <w>'")
            try:
                u, v, w = int(tok[1]), int(tok[2]), float(tok[3])
            except ValueError as exc:
                raise GraphFormatError(f"line {lineno}: bad edge fields") from exc
            edges.append((u, v, w))
        else:
            raise GraphFormatError(f"line {lineno}: unknown record {tok[0]!r}")
    if n is None:
        raise GraphFormatError("missing 'p' header line")
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(edges)}")
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


def load_graph(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def save_graph(g, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_graph(g))
