"""Graph families, random instances, and lower-bound product constructions."""

import math
from dataclasses import dataclass

import numpy as np

from .blocking import BlockingSet, verify_blocking_set
from .graph import (
    FaultMode,
    Graph,
    cartesian_product,
    girth,
    product_coords,
    tensor_product,
)

PRODUCT_KINDS = ("cartesian", "tensor")
READINGS = ("shared-endpoint", "same-base-edge")


def complete_graph(n):
    return Graph(n, [(i, j, 1.0) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n):
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, (i + 1) % n, 1.0) for i in range(n)])


def path_graph(n):
    return Graph(n, [(i, i + 1, 1.0) for i in range(n - 1)])


def petersen_graph():
    outer = [(i, (i + 1) % 5, 1.0) for i in range(5)]
    spokes = [(i, i + 5, 1.0) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5, 1.0) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def biclique(a, b):
    """Complete bipartite graph with sides 0..a-1 and a..a+b-1."""
    if a < 1 or b < 1:
        raise ValueError("biclique sides must be at least 1")
    return Graph(a + b, [(i, a + j, 1.0) for i in range(a) for j in range(b)])


def random_graph(n, p, seed=0, weight_range=None):
    """G(n, p) with unit weights, or uniform weights from ``weight_range``.

    The topology depends only on (n, p, seed): edge coins are drawn for every
    pair first, weights afterwards, so unit and weighted variants of the same
    seed share their edge set.
    """
    if not 0 <= p <= 1:
        raise ValueError(f"edge probability must be in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    picked = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    if weight_range is None:
        edges = [(i, j, 1.0) for i, j in picked]
    else:
        lo, hi = weight_range
        if not 0 < lo <= hi:
            raise ValueError(f"bad weight range ({lo}, {hi})")
        edges = [(i, j, float(rng.uniform(lo, hi))) for i, j in picked]
    return Graph(n, edges)


def reweight(g, lo, hi, seed=0):
    """Same topology as ``g`` with fresh uniform weights from [lo, hi)."""
    if not 0 < lo <= hi:
        raise ValueError(f"bad weight range ({lo}, {hi})")
    rng = np.random.default_rng(seed)
    return Graph(g.n, [(u, v, float(rng.uniform(lo, hi))) for u, v, _ in g.edges])


def _random_cubic(n, rng):
    """One draw of the 3-regular pairing model; None when not simple."""
    stubs = rng.permutation(3 * n)
    edges = set()
    for i in range(0, 3 * n, 2):
        u, v = int(stubs[i]) // 3, int(stubs[i + 1]) // 3
        if u == v:
            return None
        key = (min(u, v), max(u, v))
        if key in edges:
            return None
        edges.add(key)
    return Graph(n, [(u, v, 1.0) for u, v in sorted(edges)])


def high_girth_graph(n, girth_target, seed=0, attempts=200):
    """Best-effort graph on n vertices with girth >= ``girth_target``.

    Tries random 3-regular graphs first (denser bases make stronger lower
    bound instances) and falls back to the n-cycle, whose girth is n.  The
    achieved girth is returned alongside the graph; callers must check it,
    since the target is not always reached.
    """
    if n < 3:
        raise ValueError(f"need at least 3 vertices, got {n}")
    if n == 10 and girth_target <= 5:
        return petersen_graph(), 5.0
    best = None
    best_girth = -math.inf
    if n % 2 == 0 and n >= 4:
        rng = np.random.default_rng(seed)
        for _ in range(attempts):
            g = _random_cubic(n, rng)
            if g is None:
                continue
            gg = girth(g)
            if gg > best_girth:
                best, best_girth = g, gg
            if gg >= girth_target:
                return g, gg
    if n >= girth_target or best is None:
        return cycle_graph(n), float(n)
    return best, best_girth


def multiplier_for_budget(f):
    """Biclique sized from the fault budget: sides ceil(h/2), floor(h/2), h = f//2."""
    if f < 4:
        raise ValueError(f"product construction needs f >= 4, got {f}")
    h = f // 2
    return biclique((h + 1) // 2, h // 2)


@dataclass(frozen=True)
class LowerBoundInstance:
    """One product construction together with its claimed blocking set.

    ``blocking_verified`` says whether the claimed pairs cover every cycle of
    at most ``blocking_length`` edges in the product; ``size_bound_ok`` says
    whether the claimed set respects the f * |E| size budget.  The audit
    verdict is their conjunction.
    """

    base: Graph
    multiplier: Graph
    product: Graph
    f: int
    product_kind: str
    reading: str
    blocking: BlockingSet
    blocking_length: int
    blocking_verified: bool
    size_bound_ok: bool

    @property
    def verdict(self):
        return "PASS" if self.blocking_verified and self.size_bound_ok else "FAIL"


def _claimed_blocking(base, multiplier, product, product_kind, reading):
    """Pairs of product edges over the same base edge, per reading.

    The strict reading additionally requires the paired edges to share a
    product vertex; the relaxed one pairs any two co-projecting edges.
    """
    n2 = multiplier.n
    fibers = {}
    for u, v, _ in product.edges:
        bu, _ = product_coords(u, n2)
        bv, _ = product_coords(v, n2)
        if bu == bv:
            continue
        key = (min(bu, bv), max(bu, bv))
        fibers.setdefault(key, []).append((u, v))
    pairs = []
    for key in sorted(fibers):
        fiber = fibers[key]
        for i in range(len(fiber)):
            for j in range(i + 1, len(fiber)):
                e1, e2 = fiber[i], fiber[j]
                if reading == "shared-endpoint" and not set(e1) & set(e2):
                    continue
                pairs.append((min(e1, e2), max(e1, e2)))
    return BlockingSet(mode=FaultMode.EDGE, pairs=tuple(sorted(set(pairs))))


def lower_bound_product(base, f, product_kind="cartesian", reading="same-base-edge"):
    """Product instance for fault budget ``f`` with its claimed blocking set.

    The base should have girth above the blocking length being probed; the
    multiplier is the budget-sized biclique.  The claimed blocking set pairs
    product edges lying over the same base edge (see ``_claimed_blocking``)
    and is checked against all cycles of at most girth(base) - 1 edges.
    """
    if product_kind not in PRODUCT_KINDS:
        raise ValueError(f"unknown product kind {product_kind!r}")
    if reading not in READINGS:
        raise ValueError(f"unknown reading {reading!r}")
    multiplier = multiplier_for_budget(f)
    combine = cartesian_product if product_kind == "cartesian" else tensor_product
    product = combine(base, multiplier)
    blocking = _claimed_blocking(base, multiplier, product, product_kind, reading)
    base_girth = girth(base)
    if math.isinf(base_girth):
        raise ValueError("base graph is acyclic; its girth gives no blocking length")
    blocking_length = int(base_girth) - 1
    report = verify_blocking_set(product, blocking, blocking_length)
    return LowerBoundInstance(
        base=base,
        multiplier=multiplier,
        product=product,
        f=f,
        product_kind=product_kind,
        reading=reading,
        blocking=blocking,
        blocking_length=blocking_length,
        blocking_verified=report.ok,
        size_bound_ok=len(blocking) <= f * product.m,
    )


def concluding_remark_audit(base=None, f=4):
    """All four (product kind, reading) instances for the audit table."""
    if base is None:
        base = cycle_graph(6)
    return tuple(
        lower_bound_product(base, f, kind, reading)
        for kind in PRODUCT_KINDS
        for reading in READINGS
    )
