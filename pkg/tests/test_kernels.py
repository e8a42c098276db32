"""The jit-compiled and interpreted kernels must agree exactly."""

import itertools
import json
import os
import subprocess
import sys

import numpy as np
import pytest

from mmsep._kernels import (USING_NUMBA, _dijkstra_multi, _dinic,
                            dijkstra_multi, dinic_maxflow, kernel_mode)


def test_mode_string_matches_flag():
    assert kernel_mode() == ("numba" if USING_NUMBA else "python")


def random_csr(rng, n):
    """Connected undirected CSR with random positive lengths."""
    edges = [(rng.integers(0, i), i) for i in range(1, n)]
    for _ in range(rng.integers(0, n)):
        u, v = rng.choice(n, size=2, replace=False)
        edges.append((min(u, v), max(u, v)))
    edges = sorted(set((int(u), int(v)) for u, v in edges))
    lens = rng.uniform(0.5, 2.0, size=len(edges))
    deg = np.zeros(n, dtype=np.int64)
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(deg, out=indptr[1:])
    nbr = np.empty(indptr[n], dtype=np.int64)
    elen = np.empty(indptr[n], dtype=np.float64)
    cur = indptr[:-1].copy()
    for (u, v), ln in zip(edges, lens):
        nbr[cur[u]], elen[cur[u]] = v, ln
        cur[u] += 1
        nbr[cur[v]], elen[cur[v]] = u, ln
        cur[v] += 1
    return indptr, nbr, elen


def test_dijkstra_both_modes_identical():
    rng = np.random.default_rng(7)
    for _ in range(10):
        n = int(rng.integers(5, 30))
        indptr, nbr, elen = random_csr(rng, n)
        src = np.array([int(rng.integers(0, n))], dtype=np.int64)
        jit = dijkstra_multi(indptr, nbr, elen, src)
        ref = _dijkstra_multi(indptr, nbr, elen, src)
        np.testing.assert_array_equal(jit, ref)


def test_dijkstra_against_floyd_warshall():
    rng = np.random.default_rng(11)
    for _ in range(6):
        n = int(rng.integers(4, 12))
        indptr, nbr, elen = random_csr(rng, n)
        full = np.full((n, n), np.inf)
        np.fill_diagonal(full, 0.0)
        for v in range(n):
            for e in range(indptr[v], indptr[v + 1]):
                full[v, nbr[e]] = min(full[v, nbr[e]], elen[e])
        for k in range(n):
            full = np.minimum(full, full[:, k, None] + full[None, k, :])
        for s in range(n):
            got = dijkstra_multi(indptr, nbr, elen,
                                 np.array([s], dtype=np.int64))
            np.testing.assert_allclose(got, full[s], rtol=1e-12)


def test_dijkstra_multi_source_is_min_of_singles():
    rng = np.random.default_rng(3)
    indptr, nbr, elen = random_csr(rng, 20)
    srcs = np.array([2, 11, 17], dtype=np.int64)
    multi = dijkstra_multi(indptr, nbr, elen, srcs)
    singles = np.minimum.reduce([
        dijkstra_multi(indptr, nbr, elen, np.array([s], dtype=np.int64))
        for s in srcs
    ])
    np.testing.assert_array_equal(multi, singles)


def arc_network(n, arcs):
    """Directed arc list [(u, v, cap)] in the kernel's paired layout."""
    arc_to = np.empty(2 * len(arcs), dtype=np.int64)
    arc_cap = np.empty(2 * len(arcs), dtype=np.float64)
    tails = []
    for k, (u, v, c) in enumerate(arcs):
        arc_to[2 * k], arc_cap[2 * k] = v, c
        arc_to[2 * k + 1], arc_cap[2 * k + 1] = u, 0.0
        tails.extend([u, v])
    deg = np.zeros(n, dtype=np.int64)
    for t in tails:
        deg[t] += 1
    adj_ptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(deg, out=adj_ptr[1:])
    adj_arc = np.empty(adj_ptr[n], dtype=np.int64)
    cur = adj_ptr[:-1].copy()
    for a, t in enumerate(tails):
        adj_arc[cur[t]] = a
        cur[t] += 1
    return arc_to, arc_cap, adj_ptr, adj_arc


def min_cut_brute(n, arcs, s, t):
    best = np.inf
    others = [v for v in range(n) if v not in (s, t)]
    for k in range(len(others) + 1):
        for side in itertools.combinations(others, k):
            src_side = {s, *side}
            cut = sum(c for u, v, c in arcs
                      if u in src_side and v not in src_side)
            best = min(best, cut)
    return best


def random_arcs(rng, n):
    arcs = []
    for u in range(n):
        for v in range(n):
            if u != v and rng.random() < 0.4:
                arcs.append((u, v, float(rng.uniform(0.5, 3.0))))
    return arcs


def test_dinic_matches_brute_min_cut():
    rng = np.random.default_rng(19)
    for _ in range(12):
        n = int(rng.integers(4, 8))
        arcs = random_arcs(rng, n)
        net = arc_network(n, arcs)
        flow = dinic_maxflow(net[0], net[1].copy(), net[2], net[3], 0, n - 1)
        assert flow == pytest.approx(min_cut_brute(n, arcs, 0, n - 1),
                                     abs=1e-9)


def test_dinic_both_modes_identical():
    rng = np.random.default_rng(23)
    for _ in range(8):
        n = int(rng.integers(4, 9))
        arcs = random_arcs(rng, n)
        net = arc_network(n, arcs)
        a = dinic_maxflow(net[0], net[1].copy(), net[2], net[3], 0, n - 1)
        b = _dinic(net[0], net[1].copy(), net[2], net[3], 0, n - 1)
        assert a == b


CHILD_SCRIPT = """
import json
import numpy as np
from mmsep._kernels import kernel_mode
from mmsep.energies import min_cut_energy, modulus_connecting
from mmsep.poincare import pi_scan
from mmsep.riesz import riesz_potential
from mmsep.spaces import gen_grid, gen_path

p5 = gen_path(5)
g4 = gen_grid(4)
rep = pi_scan(g4, [("0,0", "3,3")], L=2.0, seed=1)
print(json.dumps({
    "mode": kernel_mode(),
    "p5_cut": min_cut_energy(p5, "v0", "v4", L=1.0).value,
    "p5_mod": modulus_connecting(p5, "v0", "v4",
                                 riesz_potential(p5, "v0", "v4", 1.0))[0],
    "g4_cut": rep.rows[0].c_cut,
    "g4_fn": rep.rows[0].c_fn,
}))
"""


def test_pure_python_fallback_agrees():
    env = dict(os.environ, MMS_NO_NUMBA="1")
    proc = subprocess.run([sys.executable, "-c", CHILD_SCRIPT],
                          capture_output=True, text=True, env=env,
                          timeout=300)
    assert proc.returncode == 0, proc.stderr
    child = json.loads(proc.stdout)
    assert child["mode"] == "python"

    from mmsep.energies import min_cut_energy, modulus_connecting
    from mmsep.poincare import pi_scan
    from mmsep.riesz import riesz_potential
    from mmsep.spaces import gen_grid, gen_path

    p5 = gen_path(5)
    g4 = gen_grid(4)
    rep = pi_scan(g4, [("0,0", "3,3")], L=2.0, seed=1)
    assert child["p5_cut"] == min_cut_energy(p5, "v0", "v4", L=1.0).value
    assert child["p5_mod"] == modulus_connecting(
        p5, "v0", "v4", riesz_potential(p5, "v0", "v4", 1.0))[0]
    assert child["g4_cut"] == rep.rows[0].c_cut
    assert child["g4_fn"] == rep.rows[0].c_fn
