"""Blocking sets: extraction from greedy traces, coverage checks, subsampling.

A blocking pair ties a fault member to a kept edge: in VERTEX mode a pair
(x, e) is a vertex plus an edge, in EDGE mode a pair (e', e) is two distinct
edges.  A blocking set covers a cycle when the cycle contains every element
of some pair.  When all cycles of at most L edges are covered, deleting the
paired edges of the pairs that survive a vertex subsample leaves a graph of
girth above L; the subsampling experiment exercises that argument end to end.
"""

import math
from dataclasses import dataclass

import numpy as np

from .graph import FaultMode, Graph, enumerate_short_cycles, girth


@dataclass(frozen=True)
class BlockingSet:
    """Ordered collection of blocking pairs of one kind.

    VERTEX pairs are ``(x, (u, v))``; EDGE pairs are ``((a, b), (u, v))``
    with both edges distinct.  Order reflects extraction order and is
    preserved by the text format.
    """

    mode: FaultMode
    pairs: tuple

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def to_text(self):
        lines = [f"# ftspan-blocking mode={self.mode.name}"]
        for first, edge in self.pairs:
            if self.mode is FaultMode.VERTEX:
                lines.append(f"b {first} {edge[0]} {edge[1]}")
            else:
                lines.append(f"B {first[0]} {first[1]} {edge[0]} {edge[1]}")
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_text(text):
        mode = None
        pairs = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                if mode is None and "ftspan-blocking" in line:
                    for part in line.lstrip("#").split():
                        if part.startswith("mode="):
                            try:
                                mode = FaultMode[part.split("=", 1)[1]]
                            except KeyError as exc:
                                raise ValueError(
                                    f"line {lineno}: unknown blocking mode"
                                ) from exc
                continue
            if mode is None:
                raise ValueError(f"line {lineno}: blocking body before header")
            tok = line.split()
            if tok[0] == "b" and mode is FaultMode.VERTEX and len(tok) == 4:
                x, u, v = int(tok[1]), int(tok[2]), int(tok[3])
                pairs.append((x, (min(u, v), max(u, v))))
            elif tok[0] == "B" and mode is FaultMode.EDGE and len(tok) == 5:
                a, b, u, v = (int(t) for t in tok[1:])
                pairs.append(((min(a, b), max(a, b)), (min(u, v), max(u, v))))
            else:
                raise ValueError(f"line {lineno}: malformed blocking line {line!r}")
        if mode is None:
            raise ValueError("missing ftspan-blocking header comment")
        return BlockingSet(mode=mode, pairs=tuple(pairs))

    def save(self, path):
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_text())

    @staticmethod
    def load(path):
        with open(path, "r", encoding="utf-8") as fh:
            return BlockingSet.from_text(fh.read())


def extract_blocking_set(trace):
    """Blocking pairs read off a greedy trace: one per (fault member, kept edge).

    Accepted edges with empty witnesses contribute nothing, so an f=0 trace
    yields the empty blocking set.  Pair count is at most f times the number
    of kept edges.
    """
    pairs = []
    for d in trace.decisions:
        if not d.accepted:
            continue
        for member in d.witness:
            pairs.append((member, (d.u, d.v)))
    return BlockingSet(mode=trace.mode, pairs=tuple(pairs))


@dataclass(frozen=True)
class BlockingReport:
    ok: bool
    uncovered_cycle: tuple | None
    cycles_checked: int


def verify_blocking_set(h, blocking, max_len):
    """Check that every cycle of ``h`` with at most ``max_len`` edges is covered.

    A cycle is covered when it contains all elements of some pair.  Returns
    the first uncovered cycle in (length, vertex tuple) order, if any.
    Pairs that name edges absent from ``h`` are input errors.
    """
    for first, edge in blocking.pairs:
        if not h.has_edge(*edge):
            raise ValueError(f"blocking pair names absent edge {edge}")
        if blocking.mode is FaultMode.VERTEX:
            if not 0 <= first < h.n:
                raise ValueError(f"blocking pair names invalid vertex {first}")
        elif not h.has_edge(*first):
            raise ValueError(f"blocking pair names absent edge {first}")

    cycles = enumerate_short_cycles(h, max_len)
    for cycle in cycles:
        vset = set(cycle)
        eset = set()
        for i, u in enumerate(cycle):
            v = cycle[(i + 1) % len(cycle)]
            eset.add((min(u, v), max(u, v)))
        covered = False
        for first, edge in blocking.pairs:
            if edge not in eset:
                continue
            if blocking.mode is FaultMode.VERTEX:
                if first in vset:
                    covered = True
                    break
            elif first in eset:
                covered = True
                break
        if not covered:
            return BlockingReport(ok=False, uncovered_cycle=cycle, cycles_checked=len(cycles))
    return BlockingReport(ok=True, uncovered_cycle=None, cycles_checked=len(cycles))


def sample_size(n, f):
    """Vertices kept by one subsample round: ceil(n / (2f))."""
    if f < 1:
        raise ValueError("subsampling needs a fault budget of at least 1")
    return math.ceil(n / (2 * f))


def survival_probability(n, r, arity):
    """Chance that ``arity`` fixed distinct vertices all land in an r-subset."""
    if arity > r:
        return 0.0
    p = 1.0
    for j in range(arity):
        p *= (r - j) / (n - j)
    return p


def _pair_vertices(pair, mode):
    first, edge = pair
    if mode is FaultMode.VERTEX:
        return {first, edge[0], edge[1]}
    return {first[0], first[1], edge[0], edge[1]}


@dataclass(frozen=True)
class SubsampleOutcome:
    trial: int
    seed: int
    sampled: tuple
    edges_induced: int
    pairs_surviving: int
    edges_final: int
    girth_final: float
    girth_ok: bool


def subsample_once(h, blocking, f, max_len, seed, trial=0):
    """One subsample round: keep ceil(n/(2f)) vertices, drop surviving pairs' edges.

    A pair survives when every vertex it mentions is sampled; each surviving
    pair deletes its paired edge (both edges in EDGE mode) from the induced
    subgraph.  When ``blocking`` covers all cycles of at most ``max_len``
    edges, the pruned graph provably has girth above ``max_len``.
    """
    r = sample_size(h.n, f)
    rng = np.random.default_rng(seed)
    sampled = tuple(sorted(int(x) for x in rng.permutation(h.n)[:r]))
    inset = set(sampled)

    induced = [(u, v, w) for u, v, w in h.edges if u in inset and v in inset]
    removed = set()
    pairs_surviving = 0
    for pair in blocking.pairs:
        if _pair_vertices(pair, blocking.mode) <= inset:
            pairs_surviving += 1
            first, edge = pair
            removed.add(edge)
            if blocking.mode is FaultMode.EDGE:
                removed.add(first)
    final = [(u, v, w) for u, v, w in induced if (u, v) not in removed]
    g_final = girth(Graph(h.n, final))
    return SubsampleOutcome(
        trial=trial,
        seed=seed,
        sampled=sampled,
        edges_induced=len(induced),
        pairs_surviving=pairs_surviving,
        edges_final=len(final),
        girth_final=g_final,
        girth_ok=g_final > max_len,
    )


@dataclass(frozen=True)
class SubsampleReport:
    """Aggregate of repeated subsample rounds plus their expectations.

    ``expected_edges_induced`` and ``expected_pairs_surviving`` are exact
    hypergeometric means; ``degenerate_sample`` flags rounds too small for
    any pair to survive (fewer sampled vertices than a pair mentions).
    """

    n: int
    r: int
    f: int
    max_len: int
    outcomes: tuple
    expected_edges_induced: float
    expected_pairs_surviving: float
    degenerate_sample: bool

    @property
    def trials(self):
        return len(self.outcomes)

    @property
    def girth_ok_count(self):
        return sum(1 for o in self.outcomes if o.girth_ok)

    @property
    def mean_edges_induced(self):
        return sum(o.edges_induced for o in self.outcomes) / max(1, self.trials)

    @property
    def mean_pairs_surviving(self):
        return sum(o.pairs_surviving for o in self.outcomes) / max(1, self.trials)

    @property
    def mean_edges_final(self):
        return sum(o.edges_final for o in self.outcomes) / max(1, self.trials)

    def to_csv(self):
        lines = [
            f"# ftspan-subsample n={self.n} r={self.r} f={self.f} L={self.max_len} trials={self.trials}",
            f"# girth_ok={self.girth_ok_count}/{self.trials}"
            f" degenerate_sample={self.degenerate_sample}",
            f"# mean_edges_induced={self.mean_edges_induced!r}"
            f" expected_edges_induced={self.expected_edges_induced!r}",
            f"# mean_pairs_surviving={self.mean_pairs_surviving!r}"
            f" expected_pairs_surviving={self.expected_pairs_surviving!r}",
            f"# mean_edges_final={self.mean_edges_final!r}",
            "trial,seed,edges_induced,pairs_surviving,edges_final,girth_ok",
        ]
        for o in self.outcomes:
            lines.append(
                f"{o.trial},{o.seed},{o.edges_induced},{o.pairs_surviving},"
                f"{o.edges_final},{int(o.girth_ok)}"
            )
        return "\n".join(lines) + "\n"


def subsample_experiment(h, blocking, f, max_len, trials, seed=0):
    """Run ``trials`` subsample rounds with per-trial seeds seed*1000003 + t.

    The blocking set is checked for full coverage up front, since the girth
    guarantee on pruned samples only holds for covering sets.
    """
    cover = verify_blocking_set(h, blocking, max_len)
    if not cover.ok:
        raise ValueError(
            f"blocking set leaves a cycle of <= {max_len} edges uncovered: "
            f"{cover.uncovered_cycle}"
        )
    r = sample_size(h.n, f)
    outcomes = []
    for t in range(trials):
        trial_seed = seed * 1_000_003 + t
        outcomes.append(subsample_once(h, blocking, f, max_len, trial_seed, trial=t))
    exp_edges = h.m * survival_probability(h.n, r, 2)
    exp_pairs = sum(
        survival_probability(h.n, r, len(_pair_vertices(p, blocking.mode)))
        for p in blocking.pairs
    )
    min_pair = min(
        (len(_pair_vertices(p, blocking.mode)) for p in blocking.pairs),
        default=3,
    )
    return SubsampleReport(
        n=h.n,
        r=r,
        f=f,
        max_len=max_len,
        outcomes=tuple(outcomes),
        expected_edges_induced=exp_edges,
        expected_pairs_surviving=exp_pairs,
        degenerate_sample=r < min_pair,
    )
