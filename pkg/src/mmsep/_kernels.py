"""Loop kernels behind the distance and flow machinery.

The two hot paths of the toolkit are single/multi-source Dijkstra sweeps
(every Riesz field needs two, every scan needs hundreds) and Dinic max-flow
on node-split networks (every min-cut energy, modulus and capacity call).
Both are written as plain array loops so the exact same function bodies run
either jit-compiled by numba or interpreted:

* default: numba ``@njit(cache=True, nogil=True)`` wrappers
* ``MMS_NO_NUMBA=1`` in the environment (or numba missing): interpreted

Results are identical in both modes; the flag exists for debugging and for
measuring the speedup (see benchmarks/bench_kernels.py).
"""

from __future__ import annotations

import os

import numpy as np

INF = np.inf

# Residual capacities below this are treated as exhausted. Augmentations
# subtract the exact bottleneck value, so saturated arcs hit 0.0 exactly;
# the epsilon only guards accumulated reverse-arc round-off.
FLOW_EPS = 1e-12


def _dijkstra_multi(indptr, nbr, elen, sources):
    """Distances from the nearest of ``sources`` to every vertex.

    CSR adjacency (indptr, nbr, elen), nonnegative lengths. Ties in the
    heap break toward the smaller vertex index, which makes the visit
    order (and hence any downstream ordering built on it) deterministic.
    """
    n = indptr.shape[0] - 1
    dist = np.full(n, INF)
    done = np.zeros(n, np.uint8)
    # Binary heap over (distance, vertex); one slot per relaxation.
    cap = indptr[n] + sources.shape[0] + 1
    hd = np.empty(cap, np.float64)
    hv = np.empty(cap, np.int64)
    size = 0
    for k in range(sources.shape[0]):
        s = sources[k]
        if dist[s] > 0.0:
            dist[s] = 0.0
            hd[size] = 0.0
            hv[size] = s
            size += 1
            j = size - 1
            while j > 0:
                p = (j - 1) >> 1
                if hd[p] > hd[j] or (hd[p] == hd[j] and hv[p] > hv[j]):
                    hd[p], hd[j] = hd[j], hd[p]
                    hv[p], hv[j] = hv[j], hv[p]
                    j = p
                else:
                    break
    while size > 0:
        d0 = hd[0]
        v0 = hv[0]
        size -= 1
        hd[0] = hd[size]
        hv[0] = hv[size]
        i = 0
        while True:
            l = 2 * i + 1
            r = l + 1
            m = i
            if l < size and (hd[l] < hd[m] or (hd[l] == hd[m] and hv[l] < hv[m])):
                m = l
            if r < size and (hd[r] < hd[m] or (hd[r] == hd[m] and hv[r] < hv[m])):
                m = r
            if m == i:
                break
            hd[i], hd[m] = hd[m], hd[i]
            hv[i], hv[m] = hv[m], hv[i]
            i = m
        if done[v0] == 1:
            continue  # stale heap entry
        done[v0] = 1
        for e in range(indptr[v0], indptr[v0 + 1]):
            w = nbr[e]
            nd = d0 + elen[e]
            if nd < dist[w]:
                dist[w] = nd
                hd[size] = nd
                hv[size] = w
                size += 1
                j = size - 1
                while j > 0:
                    p = (j - 1) >> 1
                    if hd[p] > hd[j] or (hd[p] == hd[j] and hv[p] > hv[j]):
                        hd[p], hd[j] = hd[j], hd[p]
                        hv[p], hv[j] = hv[j], hv[p]
                        j = p
                    else:
                        break
    return dist


def _dinic(arc_to, arc_cap, adj_ptr, adj_arc, s, t):
    """Max flow on a directed arc list; arc i and i^1 are residual partners.

    ``arc_cap`` is mutated into the residual capacities. Returns the flow
    value. Level graph BFS plus iterative blocking-flow DFS; each
    augmentation zeroes at least one arc exactly, so the float loop
    terminates like the integer one.
    """
    n = adj_ptr.shape[0] - 1
    level = np.empty(n, np.int64)
    it = np.empty(n, np.int64)
    q = np.empty(n, np.int64)
    stack_v = np.empty(n + 1, np.int64)
    stack_e = np.empty(n + 1, np.int64)
    total = 0.0
    while True:
        for i in range(n):
            level[i] = -1
        level[s] = 0
        q[0] = s
        qh = 0
        qt = 1
        while qh < qt:
            v = q[qh]
            qh += 1
            for k in range(adj_ptr[v], adj_ptr[v + 1]):
                a = adj_arc[k]
                w = arc_to[a]
                if arc_cap[a] > FLOW_EPS and level[w] < 0:
                    level[w] = level[v] + 1
                    q[qt] = w
                    qt += 1
        if level[t] < 0:
            break
        for i in range(n):
            it[i] = adj_ptr[i]
        while True:
            sp = 0
            stack_v[0] = s
            found = False
            while sp >= 0:
                v = stack_v[sp]
                if v == t:
                    found = True
                    break
                advanced = False
                while it[v] < adj_ptr[v + 1]:
                    a = adj_arc[it[v]]
                    w = arc_to[a]
                    if arc_cap[a] > FLOW_EPS and level[w] == level[v] + 1:
                        stack_e[sp] = a
                        sp += 1
                        stack_v[sp] = w
                        advanced = True
                        break
                    it[v] += 1
                if not advanced:
                    level[v] = -2  # dead end for this phase
                    sp -= 1
                    if sp >= 0:
                        it[stack_v[sp]] += 1
            if not found:
                break
            aug = INF
            for i in range(sp):
                a = stack_e[i]
                if arc_cap[a] < aug:
                    aug = arc_cap[a]
            for i in range(sp):
                a = stack_e[i]
                arc_cap[a] -= aug
                arc_cap[a ^ 1] += aug
            total += aug
    return total


def _numba_enabled() -> bool:
    if os.environ.get("MMS_NO_NUMBA", "0") == "1":
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


USING_NUMBA = _numba_enabled()

if USING_NUMBA:
    from numba import njit

    dijkstra_multi = njit(cache=True, nogil=True)(_dijkstra_multi)
    dinic_maxflow = njit(cache=True, nogil=True)(_dinic)
else:
    dijkstra_multi = _dijkstra_multi
    dinic_maxflow = _dinic


def kernel_mode() -> str:
    """'numba' or 'python', for provenance headers and the benchmark."""
    return "numba" if USING_NUMBA else "python"
