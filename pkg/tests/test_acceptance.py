"""Release gate: the numbered end-to-end checks the toolkit must pass.

Each test pins its tolerance and wall-clock budget. Budgets assume warm
kernels; the session-scoped conftest fixture absorbs jit compilation.
"""

import sys
import time

import numpy as np
import pytest

from mmsep.energies import (brute_force_cut_infimum, energy_report,
                            min_cut_energy, modulus_connecting)
from mmsep.graph import ahlfors_exponent, sphere_growth
from mmsep.poincare import (coarea_check, default_function_suite, pi_scan,
                            quantize_levels)
from mmsep.poincare import test_function as make_function
from mmsep.riesz import riesz_mass_check, riesz_potential
from mmsep.spaces import gen_carpet, gen_dumbbell, gen_grid, gen_path

from _families import chain_instances, diameter_poles, random_instance

REL_TOL = 1e-9


def rel_close(a, b, tol=REL_TOL):
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def timed():
    start = time.monotonic()
    return lambda: time.monotonic() - start


def test_c01_flow_equals_enumeration():
    elapsed = timed()
    checked = 0
    for seed in range(30):
        g = random_instance(seed, n_lo=6, n_hi=14)
        x, y, hops = diameter_poles(g)
        if hops < 3:
            continue
        flow = min_cut_energy(g, x, y, L=2.0).value
        brute, _ = brute_force_cut_infimum(g, x, y, L=2.0)
        assert rel_close(flow, brute), (seed, flow, brute)
        checked += 1
    assert checked >= 20
    assert elapsed() < 10.0


def test_c02_duality_on_every_test_graph(grid16):
    elapsed = timed()
    graphs = [
        (gen_path(5), "v0", "v4", 1.0),
        (gen_path(64), "v0", "v63", 2.0),
        (gen_grid(8), "0,0", "7,7", 2.0),
        (grid16, "0,0", "15,15", 2.0),
        (gen_carpet(2), "0,0", "8,8", 2.0),
        (gen_carpet(3), "0,0", "26,26", 2.0),
        (gen_dumbbell(4, 3), "a0,0", "b3,3", 2.0),
    ]
    for seed in range(10):
        g = random_instance(seed)
        x, y, hops = diameter_poles(g)
        if hops >= 3:
            graphs.append((g, x, y, 2.0))
    for g, x, y, L in graphs:
        field = riesz_potential(g, x, y, L)
        cut = min_cut_energy(g, x, y, L=L, field=field).value
        mod, _ = modulus_connecting(g, x, y, field)
        assert rel_close(mod, cut), (g.n, x, y, mod, cut)
    assert elapsed() < 30.0


def test_c03_canonical_fixture(path5):
    elapsed = timed()
    field = riesz_potential(path5, "v0", "v4", 1.0)
    assert field.R.tolist() == [0.0, 2.5, 2.0, 2.5, 0.0]
    wit = min_cut_energy(path5, "v0", "v4", L=1.0)
    assert wit.value == 2.0
    assert wit.omega == frozenset({"v0", "v1", "v2"})
    rep = energy_report(path5, "v0", "v4", {"v0", "v1", "v2"}, L=1.0, p=1.0)
    assert (rep.bp, rep.bp_r, rep.bc, rep.bmc, rep.mod1) == \
        (2.25, 2.25, 2.5, 2.5, 2.0)
    assert elapsed() < 1.0


@pytest.fixture(scope="module")
def chain_reports():
    reports = []
    for g, ss, field in chain_instances(200):
        reports.append(energy_report(g, field.x, field.y, ss.omega,
                                     L=field.L, p=1.0))
    return reports


def test_c04_perimeter_capacity_minkowski_chain(chain_reports):
    elapsed = timed()
    assert len(chain_reports) == 200
    for rep in chain_reports:
        assert rep.bp_r <= 2.0 * rep.bc + REL_TOL, rep
        assert rep.bc <= rep.bmc + REL_TOL, rep
    assert elapsed() < 60.0


def test_c05_factor_two_perimeter_gauges(chain_reports):
    for rep in chain_reports:
        assert 0.5 * rep.bp_r - REL_TOL <= rep.bp <= 2.0 * rep.bp_r + REL_TOL, rep


def test_c06_coarea_all_kinds_hundred_functions(grid16):
    elapsed = timed()
    checked = 0
    for g in (grid16, gen_path(64)):
        fns = []
        seed = 0
        while len(fns) < 50:
            for u in default_function_suite(g, seed=seed):
                q = make_function(g, quantize_levels(u.values, 8),
                                  label=f"{u.label}:q8|s{seed}")
                if not q.is_constant():
                    fns.append(q)
                if len(fns) == 50:
                    break
            seed += 1
        for u in fns:
            for kind in ("BV", "codH1", "minkowski"):
                cr = coarea_check(g, u, kind=kind)
                assert cr.passed, (g.n, kind, u.label, cr.lhs, cr.rhs)
                checked += 1
    assert checked == 300
    assert elapsed() < 60.0


def hop_separated_pairs(g, count, min_lattice_hop=3, seed=77):
    rng = np.random.default_rng(seed)
    pairs, seen = [], set()
    while len(pairs) < count:
        a, b = (int(v) for v in rng.choice(g.n, size=2, replace=False))
        key = (min(a, b), max(a, b))
        if key in seen:
            continue
        seen.add(key)
        (ai, aj) = map(int, g.ids[a].split(","))
        (bi, bj) = map(int, g.ids[b].split(","))
        if abs(ai - bi) + abs(aj - bj) < min_lattice_hop:
            continue
        pairs.append((g.ids[a], g.ids[b]))
    return pairs


def test_c07_pointwise_bound_never_beats_two_over_cut(grid16):
    suite = default_function_suite(grid16, seed=77)
    assert len(suite) >= 10
    rep = pi_scan(grid16, hop_separated_pairs(grid16, 20), L=2.0,
                  function_suite=suite)
    assert rep.n_pairs == 20
    for row in rep.rows:
        assert row.passed, row
        assert row.c_fn <= 2.0 / row.c_cut + 1e-12, row


def test_c08_truncated_mass_bound_everywhere(path5, grid16):
    spaces = [path5, gen_path(64), gen_grid(8), grid16, gen_carpet(1),
              gen_carpet(2), gen_carpet(3), gen_dumbbell(4, 3)]
    for g in spaces:
        x, y, _ = diameter_poles(g)
        pairs = [(x, y)]
        rng = np.random.default_rng(5)
        for _ in range(2):
            a, b = (g.ids[int(v)]
                    for v in rng.choice(g.n, size=2, replace=False))
            pairs.append((a, b))
        for a, b in pairs:
            mc = riesz_mass_check(g, a, b, L=2.0)
            assert mc.ok, (g.n, a, b, mc.total_mass, mc.bound)
    # The canonical pole pair, under the tightest truncation.
    mc = riesz_mass_check(path5, "v0", "v4", L=1.0)
    assert mc.ok and mc.total_mass == 7.0


def test_c09_grid_cut_constant_is_stable():
    elapsed = timed()
    mins = []
    for n in (8, 16, 32):
        g = gen_grid(n)
        pairs = [("0,0", f"{n-1},{n-1}"),
                 (f"{n//2},0", f"{n//2},{n-1}"),
                 (f"0,{n//2}", f"{n-1},{n//2}")]
        mins.append(min(min_cut_energy(g, x, y, L=2.0).value
                        for x, y in pairs))
    assert min(mins) > 0
    assert max(mins) / min(mins) <= 4.0, mins
    assert elapsed() < 300.0


def test_c10_carpet_cut_constant_degenerates():
    elapsed = timed()
    mins = []
    for level in range(1, 5):
        g = gen_carpet(level)
        side = 3 ** level
        pairs = [("0,0", f"{side-1},{side-1}"),
                 (f"0,{side-1}", f"{side-1},0")]
        mins.append(min(min_cut_energy(g, x, y, L=2.0).value
                        for x, y in pairs))
    for a, b in zip(mins, mins[1:]):
        assert b < a, mins
    s, _ = ahlfors_exponent(gen_carpet(4))
    assert 1.893 - 0.15 <= s <= 1.893 + 0.15, s
    assert elapsed() < 300.0


def test_c11_sphere_growth_two_sided():
    rows = sphere_growth(gen_grid(32), "15,15", 2.0, radii=range(4, 13))
    assert [r for r, _ in rows] == list(range(4, 13))
    ratios = [ratio for _, ratio in rows]
    assert min(ratios) > 0
    assert max(ratios) / min(ratios) <= 4.0, ratios


def test_c12_primary_suite_is_standalone():
    # Nothing in the library may pull in the plotting layer.
    assert not any(name == "plots" or name.startswith("plots.")
                   for name in sys.modules)
    for name, mod in list(sys.modules.items()):
        if name == "mmsep" or name.startswith("mmsep."):
            assert "plots" not in (getattr(mod, "__file__", "") or ""), name
