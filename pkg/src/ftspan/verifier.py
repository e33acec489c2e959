"""Brute-force stretch verification under fault sets.

For each fault set F the check is: for every vertex pair (s, t),
dist(H - F, s, t) <= k * dist(G - F, s, t).  Pairs made unreachable in G - F
impose no constraint; pairs reachable in G - F but not in H - F are
violations with infinite stretch.

Edge fault sets are enumerated over the spanner's edges only: removing an
edge of G that is not in H leaves H - F unchanged while the comparison
threshold can only grow, so such fault sets never add violations and never
raise the worst stretch.
"""

import itertools
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import kernels
from .graph import EPS_REL, FaultMode, FaultSet
from .spanner import SpannerParams


class VerifyMethod(Enum):
    EXHAUSTIVE = "exhaustive"
    SAMPLED = "sampled"


class BudgetExceededError(RuntimeError):
    """Raised instead of starting a verification that would exceed the budget."""

    def __init__(self, estimate, budget):
        self.estimate = estimate
        self.budget = budget
        super().__init__(
            f"estimated {estimate} pair checks exceed budget {budget}; "
            f"raise --budget or use sampled verification"
        )


@dataclass(frozen=True)
class StretchReport:
    """Verdict of one verification run.

    ``worst_pair`` and ``witness_faults`` pin down the first maximizer in
    enumeration order (fault sets by size then lexicographic member order,
    pairs row-major), so reports are reproducible.  ``exhaustive`` is False
    for sampled runs, whose OK verdict is only evidence, not proof.
    """

    ok: bool
    worst_stretch: float
    worst_pair: tuple | None
    witness_faults: FaultSet | None
    exhaustive: bool
    checked_fault_sets: int

    def to_line(self):
        status = "OK" if self.ok else "FAIL"
        members = ""
        if self.witness_faults is not None:
            if self.witness_faults.mode is FaultMode.VERTEX:
                members = ",".join(str(m) for m in self.witness_faults.sorted_members())
            else:
                members = ",".join(f"{a}-{b}" for a, b in self.witness_faults.sorted_members())
        pair = "" if self.worst_pair is None else f"{self.worst_pair[0]},{self.worst_pair[1]}"
        return f"{status} stretch={self.worst_stretch!r} F={members} pair={pair}"


def _fault_universe(g, h, mode):
    if mode is FaultMode.VERTEX:
        return list(range(g.n))
    return [(u, v) for u, v, _ in h.edges]


def exhaustive_fault_set_count(g, h, params):
    """Number of fault sets an exhaustive run enumerates (sizes 0..f)."""
    universe = len(_fault_universe(g, h, params.mode))
    top = min(params.f, universe)
    return sum(math.comb(universe, i) for i in range(top + 1))


def estimate_exhaustive_cost(g, h, params):
    """Rough pair-check count: fault sets times n^2 distance comparisons."""
    return exhaustive_fault_set_count(g, h, params) * g.n * g.n


class _MaskedAllPairs:
    """All-pairs distances for one graph under a togglable fault mask."""

    def __init__(self, graph, mode):
        self.graph = graph
        self.mode = mode
        self.adj = graph.kernel_adjacency()
        self.ws = kernels.Workspace(graph.n, max(1, graph.m))
        self.vmask = np.zeros(graph.n, dtype=np.uint8)
        self.emask = np.zeros(max(1, graph.m), dtype=np.uint8)
        self.dist = np.empty((graph.n, graph.n))
        self._touched = []

    def set_faults(self, members):
        if self.mode is FaultMode.VERTEX:
            for m in members:
                self.vmask[m] = 1
                self._touched.append(m)
        else:
            for pair in members:
                e = self.graph.edge_id(*pair)
                if e is not None:
                    self.emask[e] = 1
                    self._touched.append(e)

    def clear_faults(self):
        mask = self.vmask if self.mode is FaultMode.VERTEX else self.emask
        for m in self._touched:
            mask[m] = 0
        self._touched.clear()

    def compute(self):
        for s in range(self.graph.n):
            self.ws.sssp(self.adj, s, self.vmask, self.emask, math.inf, self.dist[s])
        return self.dist


def verify_ft_spanner(
    g,
    h,
    params,
    method=VerifyMethod.EXHAUSTIVE,
    samples=1000,
    seed=0,
    budget=10**9,
):
    """Check the fault-tolerant stretch guarantee of ``h`` against ``g``.

    EXHAUSTIVE enumerates every fault set of size 0..f; SAMPLED checks the
    empty set plus ``samples`` uniform draws of size exactly min(f, universe).
    Raises BudgetExceededError before starting a run whose estimated cost
    exceeds ``budget`` pair checks.
    """
    if h.n != g.n:
        raise ValueError(f"vertex counts differ: spanner {h.n} vs input {g.n}")
    if not h.is_subgraph_of(g):
        raise ValueError("spanner is not a subgraph of the input graph")
    universe = _fault_universe(g, h, params.mode)
    exhaustive = method is VerifyMethod.EXHAUSTIVE
    if exhaustive:
        estimate = estimate_exhaustive_cost(g, h, params)
    else:
        estimate = (samples + 1) * g.n * g.n
    if estimate > budget:
        raise BudgetExceededError(estimate, budget)

    if exhaustive:
        top = min(params.f, len(universe))
        fault_iter = itertools.chain.from_iterable(
            itertools.combinations(universe, size) for size in range(top + 1)
        )
    else:
        rng = np.random.default_rng(seed)
        size = min(params.f, len(universe))

        def _sampled():
            yield ()
            for _ in range(samples):
                picks = rng.permutation(len(universe))[:size]
                yield tuple(sorted(universe[i] for i in picks))

        fault_iter = _sampled()

    dg = _MaskedAllPairs(g, params.mode)
    dh = _MaskedAllPairs(h, params.mode)
    exact = g.has_integer_weights
    k = params.k

    ok = True
    worst = -math.inf
    worst_pair = None
    worst_members = None
    checked = 0
    for members in fault_iter:
        dg.set_faults(members)
        dh.set_faults(members)
        DG = dg.compute()
        DH = dh.compute()
        dg.clear_faults()
        dh.clear_faults()
        checked += 1
        threshold = k * DG if exact else k * DG * (1.0 + EPS_REL)
        with np.errstate(invalid="ignore"):
            if np.any(DH > threshold):
                ok = False
            ratio = DH / DG
        top_ratio = np.nanmax(ratio) if not np.all(np.isnan(ratio)) else math.nan
        if not math.isnan(top_ratio) and top_ratio > worst:
            s, t = np.argwhere(ratio == top_ratio)[0]
            worst = float(top_ratio)
            worst_pair = (int(s), int(t))
            worst_members = members

    if worst_pair is None:
        worst = 1.0
        witness = None
    elif params.mode is FaultMode.VERTEX:
        witness = FaultSet.vertices(worst_members)
    else:
        witness = FaultSet.edges(worst_members)
    return StretchReport(
        ok=ok,
        worst_stretch=worst,
        worst_pair=worst_pair,
        witness_faults=witness,
        exhaustive=exhaustive,
        checked_fault_sets=checked,
    )


def verify_spanner(g, h, k, budget=10**9):
    """Fault-free stretch check: dist_H <= k * dist_G for every pair."""
    params = SpannerParams(k=float(k), f=0, mode=FaultMode.VERTEX)
    return verify_ft_spanner(g, h, params, VerifyMethod.EXHAUSTIVE, budget=budget)
