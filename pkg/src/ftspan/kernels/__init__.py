"""Shortest-path kernels with a compiled fast path and a pure-Python fallback.

The compiled module is picked at import time when available; setting the
environment variable ``FTSPAN_PURE=1`` forces the pure-Python implementation.
Both implementations return bit-identical distances and reachability verdicts.
"""

import importlib
import os

import numpy as np

from . import _fallback

_speedups = None
if os.environ.get("FTSPAN_PURE", "").strip() in ("", "0"):
    try:
        _speedups = importlib.import_module("._speedups", __name__)
    except ImportError:
        _speedups = None

_impl = _speedups if _speedups is not None else _fallback
IMPLEMENTATION = "cython" if _speedups is not None else "python"

Workspace = _impl.Workspace


def available_implementations():
    """Map of importable kernel implementations, keyed by name."""
    impls = {"python": _fallback}
    if _speedups is not None:
        impls["cython"] = _speedups
    return impls


class Adjacency:
    """Growable linked-list adjacency over dense vertex ids 0..n-1.

    Arcs are stored twice (one per direction) in flat arrays so both kernel
    implementations can walk them without touching Python objects.  Edge ids
    are assigned in insertion order and index the edge-fault mask arrays.
    """

    __slots__ = ("n", "head", "nxt", "to", "eid", "wt", "arc_count", "edge_count")

    def __init__(self, n, edge_capacity):
        cap = 2 * max(1, int(edge_capacity))
        self.n = int(n)
        self.head = np.full(self.n, -1, dtype=np.int32)
        self.nxt = np.empty(cap, dtype=np.int32)
        self.to = np.empty(cap, dtype=np.int32)
        self.eid = np.empty(cap, dtype=np.int32)
        self.wt = np.empty(cap, dtype=np.float64)
        self.arc_count = 0
        self.edge_count = 0

    @property
    def edge_capacity(self):
        return len(self.nxt) // 2

    def add_edge(self, u, v, w):
        """Insert an undirected edge and return its edge id."""
        if self.arc_count + 2 > len(self.nxt):
            self._grow()
        e = self.edge_count
        for a, b in ((u, v), (v, u)):
            i = self.arc_count
            self.nxt[i] = self.head[a]
            self.to[i] = b
            self.eid[i] = e
            self.wt[i] = w
            self.head[a] = i
            self.arc_count += 1
        self.edge_count += 1
        return e

    def _grow(self):
        for name in ("nxt", "to", "eid", "wt"):
            old = getattr(self, name)
            new = np.empty(2 * len(old), dtype=old.dtype)
            new[: len(old)] = old
            setattr(self, name, new)

    @classmethod
    def from_edges(cls, n, edges):
        adj = cls(n, len(edges))
        for u, v, w in edges:
            adj.add_edge(u, v, w)
        return adj
