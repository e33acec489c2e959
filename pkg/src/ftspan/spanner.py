"""Greedy spanner construction, classic and fault-tolerant.

Edges are scanned in canonical order (weight, then endpoint ids).  The
fault-tolerant rule keeps an edge (u, v) exactly when some fault set F with
|F| <= f pushes the current u-v distance above k*w(u, v); the returned F is
the first qualifying set under iterative deepening over subset sizes with
lexicographic order inside each size, which makes runs reproducible.
"""

from dataclasses import dataclass

import numpy as np

from . import kernels
from .graph import (
    FaultMode,
    FaultSet,
    Graph,
    comparison_cutoff,
)


@dataclass(frozen=True)
class SpannerParams:
    """Stretch k >= 1, fault budget f >= 0, and the fault flavor."""

    k: float
    f: int
    mode: FaultMode = FaultMode.VERTEX

    def __post_init__(self):
        if not self.k >= 1:
            raise ValueError(f"stretch must be >= 1, got {self.k}")
        if self.f < 0:
            raise ValueError(f"fault budget must be >= 0, got {self.f}")


@dataclass(frozen=True)
class EdgeDecision:
    """One greedy step: the edge in canonical order and its verdict.

    ``witness`` is a sorted tuple of fault members for accepted edges
    (vertex ids, or (a, b) edge pairs) and None for rejected ones.
    """

    u: int
    v: int
    w: float
    accepted: bool
    witness: tuple | None


@dataclass(frozen=True)
class GreedyTrace:
    """Full decision log of one greedy run; replaying it rebuilds the spanner."""

    mode: FaultMode
    k: float
    f: int
    n: int
    decisions: tuple

    def accepted_edges(self):
        return [(d.u, d.v, d.w) for d in self.decisions if d.accepted]

    def replay(self):
        return Graph(self.n, self.accepted_edges())

    def to_text(self):
        lines = [
            f"# ftspan-trace mode={self.mode.name} k={self.k!r} f={self.f} n={self.n}"
        ]
        for d in self.decisions:
            if d.accepted:
                members = " ".join(_format_member(m, self.mode) for m in d.witness)
                suffix = f" ACCEPT F: {members}".rstrip() if members else " ACCEPT F:"
                lines.append(f"{d.u} {d.v} {d.w!r}{suffix}")
            else:
                lines.append(f"{d.u} {d.v} {d.w!r} REJECT")
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_text(text):
        header = None
        decisions = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                if header is None and "ftspan-trace" in line:
                    header = _parse_trace_header(line, lineno)
                continue
            if header is None:
                raise ValueError(f"line {lineno}: trace body before header")
            tok = line.split()
            if len(tok) < 4:
                raise ValueError(f"line {lineno}: malformed trace line")
            u, v, w = int(tok[0]), int(tok[1]), float(tok[2])
            verdict = tok[3]
            if verdict == "REJECT":
                if len(tok) != 4:
                    raise ValueError(f"line {lineno}: REJECT takes no fault set")
                decisions.append(EdgeDecision(u, v, w, False, None))
            elif verdict == "ACCEPT":
                if len(tok) < 5 or tok[4] != "F:":
                    raise ValueError(f"line {lineno}: ACCEPT needs an 'F:' field")
                mode = header["mode"]
                members = tuple(sorted(_parse_member(m, mode, lineno) for m in tok[5:]))
                decisions.append(EdgeDecision(u, v, w, True, members))
            else:
                raise ValueError(f"line {lineno}: unknown verdict {verdict!r}")
        if header is None:
            raise ValueError("missing ftspan-trace header comment")
        return GreedyTrace(
            mode=header["mode"],
            k=header["k"],
            f=header["f"],
            n=header["n"],
            decisions=tuple(decisions),
        )

    def save(self, path):
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_text())

    @staticmethod
    def load(path):
        with open(path, "r", encoding="utf-8") as fh:
            return GreedyTrace.from_text(fh.read())


def _format_member(m, mode):
    if mode is FaultMode.VERTEX:
        return str(m)
    return f"{m[0]}-{m[1]}"


def _parse_member(tok, mode, lineno):
    try:
        if mode is FaultMode.VERTEX:
            return int(tok)
        a, b = tok.split("-")
        a, b = int(a), int(b)
        return (a, b) if a < b else (b, a)
    except ValueError as exc:
        raise ValueError(f"line {lineno}: bad fault member {tok!r}") from exc


def _parse_trace_header(line, lineno):
    fields = {}
    for part in line.lstrip("#").split():
        if "=" in part:
            key, val = part.split("=", 1)
            fields[key] = val
    try:
        return {
            "mode": FaultMode[fields["mode"]],
            "k": float(fields["k"]),
            "f": int(fields["f"]),
            "n": int(fields["n"]),
        }
    except KeyError as exc:
        raise ValueError(f"line {lineno}: trace header missing {exc}") from exc


@dataclass(frozen=True)
class SpannerResult:
    graph: Graph
    trace: GreedyTrace


def canonical_edge_order(g):
    """Edges sorted by (weight, min endpoint, max endpoint)."""
    return sorted(g.edges, key=lambda e: (e[2], e[0], e[1]))


class _SearchState:
    """Growable spanner adjacency plus reusable witness-search buffers."""

    def __init__(self, n, edge_capacity, mode, exact):
        cap = max(1, edge_capacity)
        self.n = n
        self.mode = mode
        self.exact = exact
        self.adj = kernels.Adjacency(n, cap)
        self.ws = kernels.Workspace(n, cap)
        self.vmask = np.zeros(n, dtype=np.uint8)
        self.emask = np.zeros(cap, dtype=np.uint8)
        self.du = np.full(n, np.inf)
        self.dv = np.full(n, np.inf)
        self.edge_list = []

    def add_edge(self, u, v, w):
        self.edge_list.append((u, v, w))
        return self.adj.add_edge(u, v, w)

    def _set_mask(self, member_id, value):
        if self.mode is FaultMode.VERTEX:
            self.vmask[member_id] = value
        else:
            self.emask[member_id] = value

    def _search(self, u, v, use_h, want_path, cutoff):
        h = self.dv if use_h else None
        return self.ws.st_search(
            self.adj, u, v, h, self.vmask, self.emask, cutoff, want_path
        )

    def _path_members(self, verts, eids):
        if self.mode is FaultMode.VERTEX:
            return verts[1:-1]
        return eids

    def find_witness(self, u, v, bound, f):
        """First qualifying fault set for edge (u, v), or None.

        Search order: subset sizes ascending, subsets of the candidate list in
        lexicographic order.  Candidates are restricted to vertices (edges) on
        some u-v path of weight <= bound; any qualifying set keeps a qualifying
        core inside that restriction, so the verdict is unaffected.
        """
        cutoff = comparison_cutoff(bound, self.exact)
        found, _, _, _ = self.ws.st_search(self.adj, u, v, None, None, None, cutoff, False)
        if not found:
            return ()
        if f <= 0:
            return None

        du = self.ws.sssp(self.adj, u, None, None, cutoff, self.du)
        dv = self.ws.sssp(self.adj, v, None, None, cutoff, self.dv)
        if self.mode is FaultMode.VERTEX:
            keys = [
                x
                for x in range(self.n)
                if x != u and x != v and du[x] + dv[x] <= cutoff
            ]
            ids = keys
        else:
            sel = []
            for e, (x, y, w) in enumerate(self.edge_list):
                if du[x] + w + dv[y] <= cutoff or du[y] + w + dv[x] <= cutoff:
                    sel.append(((x, y), e))
            sel.sort()
            keys = [kv[0] for kv in sel]
            ids = [kv[1] for kv in sel]

        # Greedy disjoint short paths: more than f of them rules every fault
        # set out; their count also lower-bounds any witness size.
        masked = []
        count = 0
        reject = False
        while True:
            ok, _, verts, eids = self._search(u, v, True, True, cutoff)
            if not ok:
                break
            count += 1
            if count > f:
                reject = True
                break
            for mid in self._path_members(verts, eids):
                self._set_mask(mid, 1)
                masked.append(mid)
        for mid in masked:
            self._set_mask(mid, 0)
        if reject:
            return None

        for size in range(max(count, 1), min(f, len(keys)) + 1):
            witness = self._lex_first(u, v, cutoff, keys, ids, size)
            if witness is not None:
                return tuple(witness)
        return None

    def _disjoint_exceeds(self, u, v, cutoff, limit):
        """True when > limit pairwise-disjoint short u-v paths survive current masks."""
        masked = []
        count = 0
        while count <= limit:
            ok, _, verts, eids = self._search(u, v, True, True, cutoff)
            if not ok:
                break
            count += 1
            for mid in self._path_members(verts, eids):
                self._set_mask(mid, 1)
                masked.append(mid)
        for mid in masked:
            self._set_mask(mid, 0)
        return count > limit

    def _lex_first(self, u, v, cutoff, keys, ids, size):
        """Lexicographically first size-``size`` candidate subset killing all short paths.

        Every qualifying subset must hit each surviving short path, so
        branches past the last on-path candidate are pruned, and a branch
        whose residual graph still carries more disjoint short paths than
        unpicked slots is abandoned.  Prunes only drop non-qualifying
        subtrees, so the lexicographic-first answer is unchanged.
        """
        ncand = len(keys)
        chosen = []

        def short_path_members():
            ok, _, verts, eids = self._search(u, v, True, True, cutoff)
            if not ok:
                return None
            return set(self._path_members(verts, eids))

        def rec(start, path_set):
            if path_set is None:
                # current picks already qualify; pad to exact size
                need = size - len(chosen)
                if ncand - start >= need:
                    chosen.extend(keys[start : start + need])
                    return True
                return False
            remaining = size - len(chosen)
            if remaining == 0 or ncand - start < remaining:
                return False
            maxh = -1
            for i in range(ncand - 1, start - 1, -1):
                if ids[i] in path_set:
                    maxh = i
                    break
            if maxh == -1:
                return False
            if remaining == 1:
                for i in range(start, maxh + 1):
                    if ids[i] not in path_set:
                        continue
                    self._set_mask(ids[i], 1)
                    ok, _, _, _ = self._search(u, v, True, False, cutoff)
                    self._set_mask(ids[i], 0)
                    if not ok:
                        chosen.append(keys[i])
                        return True
                return False
            if self._disjoint_exceeds(u, v, cutoff, remaining):
                return False
            for i in range(start, maxh + 1):
                mid = ids[i]
                self._set_mask(mid, 1)
                chosen.append(keys[i])
                child = short_path_members() if mid in path_set else path_set
                if rec(i + 1, child):
                    self._set_mask(mid, 0)
                    return True
                chosen.pop()
                self._set_mask(mid, 0)
            return False

        return list(chosen) if rec(0, short_path_members()) else None


def _state_for_graph(h, mode):
    state = _SearchState(h.n, max(1, h.m), mode, h.has_integer_weights)
    for u, v, w in h.edges:
        state.add_edge(u, v, w)
    return state


def fault_witness(h, u, v, bound, f, mode=FaultMode.VERTEX):
    """A fault set F, |F| <= f, with dist(h - F, u, v) > bound; None if none exists.

    In VERTEX mode the endpoints are excluded from F.  The result is the
    first qualifying set under iterative deepening with lexicographic
    candidate order, so identical inputs give identical witnesses.
    """
    if not (0 <= u < h.n and 0 <= v < h.n) or u == v:
        raise ValueError(f"invalid endpoints ({u}, {v})")
    if bound <= 0:
        raise ValueError("bound must be positive")
    if f < 0:
        raise ValueError("fault budget must be >= 0")
    witness = _state_for_graph(h, mode).find_witness(u, v, bound, f)
    if witness is None:
        return None
    if mode is FaultMode.VERTEX:
        return FaultSet.vertices(witness)
    return FaultSet.edges(witness)


def ft_greedy_spanner(g, params):
    """Fault-tolerant greedy spanner of ``g`` under ``params``.

    Scans edges in canonical order and keeps an edge exactly when a fault
    witness for it exists against the partial spanner built so far.
    """
    state = _SearchState(g.n, g.m, params.mode, g.has_integer_weights)
    decisions = []
    accepted = []
    for u, v, w in canonical_edge_order(g):
        witness = state.find_witness(u, v, params.k * w, params.f)
        if witness is None:
            decisions.append(EdgeDecision(u, v, w, False, None))
        else:
            state.add_edge(u, v, w)
            accepted.append((u, v, w))
            decisions.append(EdgeDecision(u, v, w, True, witness))
    trace = GreedyTrace(
        mode=params.mode,
        k=float(params.k),
        f=params.f,
        n=g.n,
        decisions=tuple(decisions),
    )
    return SpannerResult(graph=Graph(g.n, accepted), trace=trace)


def greedy_spanner(g, k):
    """Classic greedy k-spanner; agrees edge-for-edge with the f=0 FT run."""
    if not k >= 1:
        raise ValueError(f"stretch must be >= 1, got {k}")
    exact = g.has_integer_weights
    adj = kernels.Adjacency(g.n, max(1, g.m))
    ws = kernels.Workspace(g.n, max(1, g.m))
    decisions = []
    accepted = []
    for u, v, w in canonical_edge_order(g):
        cutoff = comparison_cutoff(k * w, exact)
        found, _, _, _ = ws.st_search(adj, u, v, None, None, None, cutoff, False)
        if found:
            decisions.append(EdgeDecision(u, v, w, False, None))
        else:
            adj.add_edge(u, v, w)
            accepted.append((u, v, w))
            decisions.append(EdgeDecision(u, v, w, True, ()))
    trace = GreedyTrace(
        mode=FaultMode.VERTEX, k=float(k), f=0, n=g.n, decisions=tuple(decisions)
    )
    return SpannerResult(graph=Graph(g.n, accepted), trace=trace)
