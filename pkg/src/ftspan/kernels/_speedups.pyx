# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled shortest-path kernels; semantics mirror ``_fallback`` exactly."""

import numpy as np

from libc.stdint cimport int32_t, int64_t, uint8_t

cdef double INF = float("inf")


cdef class Workspace:
    """Reusable Dijkstra/A* state: stamped arrays avoid per-query clears."""

    cdef double[::1] g
    cdef int64_t[::1] gstamp
    cdef int64_t[::1] dstamp
    cdef int32_t[::1] pred_v
    cdef int32_t[::1] pred_e
    cdef double[::1] hkey
    cdef int32_t[::1] hid
    cdef int64_t epoch
    cdef Py_ssize_t n_cap
    cdef Py_ssize_t heap_cap

    def __init__(self, n, edge_capacity):
        cdef Py_ssize_t nn = max(1, int(n))
        self.n_cap = nn
        self.heap_cap = 2 * max(1, int(edge_capacity)) + nn + 8
        self.g = np.empty(nn, dtype=np.float64)
        self.gstamp = np.zeros(nn, dtype=np.int64)
        self.dstamp = np.zeros(nn, dtype=np.int64)
        self.pred_v = np.empty(nn, dtype=np.int32)
        self.pred_e = np.empty(nn, dtype=np.int32)
        self.hkey = np.empty(self.heap_cap, dtype=np.float64)
        self.hid = np.empty(self.heap_cap, dtype=np.int32)
        self.epoch = 0

    cdef void _ensure(self, Py_ssize_t n, Py_ssize_t arcs):
        if n > self.n_cap:
            self.n_cap = n
            self.g = np.empty(n, dtype=np.float64)
            self.gstamp = np.zeros(n, dtype=np.int64)
            self.dstamp = np.zeros(n, dtype=np.int64)
            self.pred_v = np.empty(n, dtype=np.int32)
            self.pred_e = np.empty(n, dtype=np.int32)
            self.epoch = 0
        if arcs + n + 8 > self.heap_cap:
            self.heap_cap = arcs + n + 8
            self.hkey = np.empty(self.heap_cap, dtype=np.float64)
            self.hid = np.empty(self.heap_cap, dtype=np.int32)

    cdef inline void _push(self, Py_ssize_t* size, double key, int32_t v):
        cdef Py_ssize_t i = size[0]
        cdef Py_ssize_t p
        size[0] += 1
        while i > 0:
            p = (i - 1) >> 1
            if self.hkey[p] <= key:
                break
            self.hkey[i] = self.hkey[p]
            self.hid[i] = self.hid[p]
            i = p
        self.hkey[i] = key
        self.hid[i] = v

    cdef inline int32_t _pop(self, Py_ssize_t* size, double* key):
        cdef int32_t top = self.hid[0]
        cdef double kout = self.hkey[0]
        cdef Py_ssize_t n = size[0] - 1
        cdef double last = self.hkey[n]
        cdef int32_t lastid = self.hid[n]
        cdef Py_ssize_t i = 0
        cdef Py_ssize_t c
        size[0] = n
        while True:
            c = 2 * i + 1
            if c >= n:
                break
            if c + 1 < n and self.hkey[c + 1] < self.hkey[c]:
                c += 1
            if self.hkey[c] >= last:
                break
            self.hkey[i] = self.hkey[c]
            self.hid[i] = self.hid[c]
            i = c
        self.hkey[i] = last
        self.hid[i] = lastid
        key[0] = kout
        return top

    def sssp(self, adj, src, vmask=None, emask=None, double cutoff=INF, out=None):
        """Distances from ``src``; entries beyond ``cutoff`` (or masked) are inf."""
        cdef int32_t[::1] head = adj.head
        cdef int32_t[::1] nxt = adj.nxt
        cdef int32_t[::1] to = adj.to
        cdef int32_t[::1] eid = adj.eid
        cdef double[::1] wt = adj.wt
        cdef Py_ssize_t n = adj.n
        self._ensure(n, adj.arc_count)

        if out is None:
            out = np.full(n, INF)
        else:
            out[:] = INF
        cdef double[::1] dist = out

        cdef uint8_t[::1] vm
        cdef uint8_t[::1] em
        cdef bint has_vm = vmask is not None
        cdef bint has_em = emask is not None
        if has_vm:
            vm = vmask
        if has_em:
            em = emask

        cdef int32_t s = src
        if has_vm and vm[s]:
            return out

        self.epoch += 1
        cdef int64_t ep = self.epoch
        cdef Py_ssize_t hsize = 0
        cdef double d, nd
        cdef int32_t x, y
        cdef Py_ssize_t a

        self.g[s] = 0.0
        self.gstamp[s] = ep
        self._push(&hsize, 0.0, s)
        while hsize > 0:
            x = self._pop(&hsize, &d)
            if self.dstamp[x] == ep:
                continue
            if d > cutoff:
                break
            self.dstamp[x] = ep
            dist[x] = d
            a = head[x]
            while a != -1:
                y = to[a]
                if self.dstamp[y] != ep:
                    if not (has_vm and vm[y]) and not (has_em and em[eid[a]]):
                        nd = d + wt[a]
                        if nd <= cutoff and (self.gstamp[y] != ep or nd < self.g[y]):
                            self.g[y] = nd
                            self.gstamp[y] = ep
                            self._push(&hsize, nd, y)
                a = nxt[a]
        return out

    def st_search(self, adj, s, t, h=None, vmask=None, emask=None, double cutoff=INF,
                  bint want_path=False):
        """Shortest s-t path no heavier than ``cutoff``; see fallback docstring."""
        cdef int32_t[::1] head = adj.head
        cdef int32_t[::1] nxt = adj.nxt
        cdef int32_t[::1] to = adj.to
        cdef int32_t[::1] eid = adj.eid
        cdef double[::1] wt = adj.wt
        cdef Py_ssize_t n = adj.n
        self._ensure(n, adj.arc_count)

        cdef uint8_t[::1] vm
        cdef uint8_t[::1] em
        cdef double[::1] hh
        cdef bint has_vm = vmask is not None
        cdef bint has_em = emask is not None
        cdef bint has_h = h is not None
        if has_vm:
            vm = vmask
        if has_em:
            em = emask
        if has_h:
            hh = h

        cdef int32_t ss = s
        cdef int32_t tt = t
        if has_vm and (vm[ss] or vm[tt]):
            return (False, INF, None, None)
        if ss == tt:
            return (True, 0.0, [ss] if want_path else None, [] if want_path else None)

        cdef double f0 = hh[ss] if has_h else 0.0
        if f0 > cutoff:
            return (False, INF, None, None)

        self.epoch += 1
        cdef int64_t ep = self.epoch
        cdef Py_ssize_t hsize = 0
        cdef double fx, gx, ng, nf
        cdef int32_t x, y
        cdef Py_ssize_t a

        self.g[ss] = 0.0
        self.gstamp[ss] = ep
        self._push(&hsize, f0, ss)
        while hsize > 0:
            x = self._pop(&hsize, &fx)
            if self.dstamp[x] == ep:
                continue
            if fx > cutoff:
                break
            self.dstamp[x] = ep
            if x == tt:
                if not want_path:
                    return (True, self.g[x], None, None)
                verts = [tt]
                eids = []
                y = tt
                while y != ss:
                    eids.append(self.pred_e[y])
                    y = self.pred_v[y]
                    verts.append(y)
                verts.reverse()
                eids.reverse()
                return (True, self.g[tt], verts, eids)
            gx = self.g[x]
            a = head[x]
            while a != -1:
                y = to[a]
                if self.dstamp[y] != ep:
                    if not (has_vm and vm[y]) and not (has_em and em[eid[a]]):
                        ng = gx + wt[a]
                        nf = ng + hh[y] if has_h else ng
                        if nf <= cutoff and (self.gstamp[y] != ep or ng < self.g[y]):
                            self.g[y] = ng
                            self.gstamp[y] = ep
                            if want_path:
                                self.pred_v[y] = x
                                self.pred_e[y] = eid[a]
                            self._push(&hsize, nf, y)
                a = nxt[a]
        return (False, INF, None, None)
