"""Pure-Python shortest-path kernels (heapq Dijkstra / A*).

Reference implementation for the compiled module in ``_speedups.pyx``.  The
two must agree bit-for-bit on distances and on reachability verdicts; paths
may differ when several shortest paths tie.
"""

import heapq
import math

import numpy as np

INF = math.inf


class Workspace:
    """Reusable search state sized for one graph.

    Fault sets are passed as optional uint8 mask arrays (``vmask`` over vertex
    ids, ``emask`` over edge ids); masked entries are skipped at traversal
    time, so no graph copies are made per query.
    """

    def __init__(self, n, edge_capacity):
        self.n = int(n)

    def sssp(self, adj, src, vmask=None, emask=None, cutoff=INF, out=None):
        """Distances from ``src``; entries beyond ``cutoff`` (or masked) are inf."""
        if out is None:
            out = np.full(adj.n, INF)
        else:
            out[:] = INF
        if vmask is not None and vmask[src]:
            return out
        head, nxt, to, eid, wt = adj.head, adj.nxt, adj.to, adj.eid, adj.wt
        best = {src: 0.0}
        done = set()
        heap = [(0.0, src)]
        while heap:
            d, x = heapq.heappop(heap)
            if x in done:
                continue
            if d > cutoff:
                break
            done.add(x)
            out[x] = d
            a = head[x]
            while a != -1:
                y = to[a]
                if (
                    y not in done
                    and (vmask is None or not vmask[y])
                    and (emask is None or not emask[eid[a]])
                ):
                    nd = d + wt[a]
                    if nd <= cutoff and nd < best.get(y, INF):
                        best[y] = nd
                        heapq.heappush(heap, (nd, y))
                a = nxt[a]
        return out

    def st_search(self, adj, s, t, h=None, vmask=None, emask=None, cutoff=INF, want_path=False):
        """Shortest s-t path no heavier than ``cutoff``.

        Returns ``(found, dist, verts, eids)``.  ``dist`` is exact when found
        and inf otherwise.  ``h`` is an optional admissible heuristic array
        (distances toward ``t`` on the unfaulted graph); inf entries prune.
        """
        if vmask is not None and (vmask[s] or vmask[t]):
            return (False, INF, None, None)
        if s == t:
            return (True, 0.0, [s] if want_path else None, [] if want_path else None)
        head, nxt, to, eid, wt = adj.head, adj.nxt, adj.to, adj.eid, adj.wt
        f0 = 0.0 if h is None else h[s]
        if f0 > cutoff:
            return (False, INF, None, None)
        g = {s: 0.0}
        pred = {}
        done = set()
        heap = [(f0, s)]
        while heap:
            fx, x = heapq.heappop(heap)
            if x in done:
                continue
            if fx > cutoff:
                break
            done.add(x)
            if x == t:
                if not want_path:
                    return (True, g[x], None, None)
                verts = [t]
                eids = []
                while verts[-1] != s:
                    pv, pe = pred[verts[-1]]
                    verts.append(pv)
                    eids.append(pe)
                verts.reverse()
                eids.reverse()
                return (True, g[t], verts, eids)
            gx = g[x]
            a = head[x]
            while a != -1:
                y = to[a]
                if (
                    y not in done
                    and (vmask is None or not vmask[y])
                    and (emask is None or not emask[eid[a]])
                ):
                    ng = gx + wt[a]
                    nf = ng if h is None else ng + h[y]
                    if nf <= cutoff and ng < g.get(y, INF):
                        g[y] = ng
                        if want_path:
                            pred[y] = (x, eid[a])
                        heapq.heappush(heap, (nf, y))
                a = nxt[a]
        return (False, INF, None, None)
