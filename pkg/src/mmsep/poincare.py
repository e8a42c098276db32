"""Poincaré-type function inequalities and their cut-side duals.

Checks three things about a space: the pointwise inequality relating
|u(x) - u(y)| to the lip-energy against the pole pair's induced measure,
the local mean-oscillation inequality on balls, and coarea bounds tying
level-set boundary energies to the lip integral. pi_scan aggregates the
pointwise check over pole pairs and compares each function constant to
the 2/cut bound.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import errors
from .energies import codim_hausdorff, min_cut_energy, minkowski_content
from .graph import MetricMeasureGraph
from .riesz import RieszField, riesz_potential

# Factor absorbed by every coarea comparison: vertex energies see both
# endpoints of a cut edge, the lip integral sees each vertex once.
COAREA_SLACK = {"BV": 2.0, "codH1": 8.0, "minkowski": 2.0}


@dataclass(frozen=True)
class TestFunction:
    """A vertex function with its local slope field.

    lip[v] is the steepest incident difference quotient max |du|/len; it
    vanishes exactly where the function is constant on the closed
    neighborhood.
    """

    label: str
    values: np.ndarray
    lip: np.ndarray

    def is_constant(self) -> bool:
        return bool((self.lip == 0.0).all())


def test_function(g: MetricMeasureGraph, values, label: str = "") -> TestFunction:
    """Wrap per-vertex values (map or array) with the computed slope field."""
    u = g.values_array(values)
    if not np.isfinite(u).all():
        raise errors.BadParam(f"function {label!r} has non-finite values")
    rate = np.abs(u[g.edge_u] - u[g.edge_v]) / g.edge_len
    lip = np.zeros(g.n)
    np.maximum.at(lip, g.edge_u, rate)
    np.maximum.at(lip, g.edge_v, rate)
    return TestFunction(label=label, values=u, lip=lip)


def ptpi_ratio(g: MetricMeasureGraph, u: TestFunction, x: str, y: str,
               L: float = 2.0, field: RieszField | None = None) -> float:
    """|u(x) - u(y)| divided by the lip integral against the induced measure.

    Returns 0 when the poles agree on u, and +inf when the denominator
    vanishes while the numerator does not.
    """
    xi, yi = g.vertex(x), g.vertex(y)
    if xi == yi:
        raise errors.SamePoles(f"poles must differ, got {x!r} twice")
    if field is None:
        field = riesz_potential(g, x, y, L)
    num = abs(float(u.values[xi]) - float(u.values[yi]))
    if num == 0.0:
        return 0.0
    den = float((u.lip * field.riesz_m).sum())
    if den == 0.0:
        return math.inf
    return num / den


def local_poincare_check(g: MetricMeasureGraph, center: str, r: float,
                         lam: float, u: TestFunction) -> float:
    """Mean oscillation on B_r over r times the mean slope on B_{lam r}."""
    ci = g.vertex(center)
    if r <= 0 or not math.isfinite(r):
        raise errors.EmptyBall(f"ball radius must be positive, got {r}")
    if lam < 1:
        raise errors.BadParam(f"enlargement factor must be >= 1, got {lam}")
    dist = g.distance_field(ci).dist
    ball = dist < r
    mass = float(g.m[ball].sum())
    if mass <= 0.0:
        raise errors.EmptyBall(f"ball of radius {r} at {center!r} has measure 0")
    mean = float((u.values[ball] * g.m[ball]).sum()) / mass
    osc = float((np.abs(u.values[ball] - mean) * g.m[ball]).sum()) / mass
    wide = dist < lam * r
    wide_mass = float(g.m[wide].sum())
    slope = float((u.lip[wide] * g.m[wide]).sum()) / wide_mass
    if slope == 0.0:
        return 0.0 if osc == 0.0 else math.inf
    return osc / (r * slope)


@dataclass(frozen=True)
class CoareaResult:
    kind: str
    lhs: float
    rhs: float
    slack: float
    passed: bool


def _edge_perimeter(g: MetricMeasureGraph, inside: np.ndarray,
                    w: np.ndarray) -> float:
    cross = inside[g.edge_u] != inside[g.edge_v]
    u, v = g.edge_u[cross], g.edge_v[cross]
    return float(((w[u] + w[v]) / (2.0 * g.edge_len[cross])).sum())


def _vertex_boundary(g: MetricMeasureGraph, inside: np.ndarray) -> list[str]:
    cross = inside[g.edge_u] != inside[g.edge_v]
    idx = set(g.edge_u[cross].tolist()) | set(g.edge_v[cross].tolist())
    return [g.ids[v] for v in sorted(idx)]


def coarea_check(g: MetricMeasureGraph, u: TestFunction, weight=None,
                 kind: str = "BV") -> CoareaResult:
    """Cavalieri sum of level-set boundary energies vs the lip integral.

    lhs sums, over the realized level values t (ascending, right-continuous
    sets {u >= t}), the kind's boundary energy times the gap below t; rhs is
    the weighted lip integral. Passing means lhs <= slack * rhs.
    """
    if kind not in COAREA_SLACK:
        raise errors.BadParam(f"kind must be one of {sorted(COAREA_SLACK)}, "
                              f"got {kind!r}")
    if u.is_constant():
        raise errors.ConstantFunction(f"{u.label or 'function'} is constant")
    w = g.m if weight is None else np.asarray(weight, dtype=np.float64)
    levels = np.unique(u.values)
    lhs = 0.0
    for k in range(1, levels.size):
        t = levels[k]
        inside = u.values >= t
        if kind == "BV":
            e = _edge_perimeter(g, inside, w)
        elif kind == "codH1":
            e = codim_hausdorff(g, _vertex_boundary(g, inside), ball_weight=w)
        else:
            ids = [g.ids[v] for v in np.nonzero(inside)[0]]
            e = minkowski_content(g, ids, weights=w, p=1.0)
        lhs += e * float(t - levels[k - 1])
    rhs = float((u.lip * w).sum())
    slack = COAREA_SLACK[kind]
    return CoareaResult(kind=kind, lhs=lhs, rhs=rhs, slack=slack,
                        passed=lhs <= slack * rhs + 1e-12)


# -- the scan -----------------------------------------------------------------

@dataclass(frozen=True)
class ScanRow:
    pair_id: int
    x: str
    y: str
    L: float
    c_cut: float
    c_fn: float
    bound_2_over_ccut: float
    passed: bool


@dataclass(frozen=True)
class ScanReport:
    rows: tuple[ScanRow, ...]
    min_c_cut: float
    max_c_fn: float
    n_pairs: int
    seed: int


def default_function_suite(g: MetricMeasureGraph, seed: int = 0,
                           n_centers: int = 4, n_random: int = 4,
                           sweeps: int = 3) -> list[TestFunction]:
    """Deterministic test functions: distances, truncated distances, and
    random values smoothed by neighborhood averaging sweeps."""
    rng = np.random.default_rng(seed)
    centers = sorted(rng.choice(g.n, size=min(g.n, n_centers), replace=False).tolist())
    suite = []
    for c in centers:
        d = g.distance_field(c).dist
        suite.append(test_function(g, d, label=f"dist:{g.ids[c]}"))
        r = float(d.max()) / 2.0
        suite.append(test_function(g, np.minimum(d, r), label=f"trunc:{g.ids[c]}"))
    for k in range(n_random):
        vals = rng.uniform(0.0, 1.0, size=g.n)
        for _ in range(sweeps):
            acc = vals.copy()
            np.add.at(acc, g.edge_u, vals[g.edge_v])
            np.add.at(acc, g.edge_v, vals[g.edge_u])
            deg = np.ones(g.n)
            np.add.at(deg, g.edge_u, 1.0)
            np.add.at(deg, g.edge_v, 1.0)
            vals = acc / deg
        suite.append(test_function(g, vals, label=f"smooth:{k}"))
    return suite


def quantize_levels(values: np.ndarray, n_levels: int = 8) -> np.ndarray:
    """Snap values onto n_levels evenly spaced levels over their range.

    Keeps coarea level sums small without changing the function's shape;
    a constant input comes back unchanged.
    """
    if n_levels < 2:
        raise errors.BadParam(f"need at least 2 levels, got {n_levels}")
    lo, hi = float(values.min()), float(values.max())
    if hi == lo:
        return np.asarray(values, dtype=np.float64).copy()
    steps = np.round((values - lo) / (hi - lo) * (n_levels - 1))
    return lo + steps * (hi - lo) / (n_levels - 1)


def pi_scan(g: MetricMeasureGraph, pole_pairs, L: float = 2.0,
            function_suite=None, seed: int = 0,
            threads: int | None = None) -> ScanReport:
    """Per pole pair: the min-cut constant, the suite's worst function
    constant, and the 2/c duality verdict. Pairs run in parallel; output
    order follows the input order regardless of thread count."""
    pairs = [(str(a), str(b)) for a, b in pole_pairs]
    if not pairs:
        raise errors.BadParam("pole pair list is empty")
    if function_suite is None:
        function_suite = default_function_suite(g, seed=seed)
    if not function_suite:
        raise errors.BadParam("function suite is empty")

    def one(idx_pair):
        idx, (x, y) = idx_pair
        field = riesz_potential(g, x, y, L)
        c_cut = min_cut_energy(g, x, y, L=L, field=field).value
        c_fn = max(ptpi_ratio(g, u, x, y, L=L, field=field)
                   for u in function_suite)
        bound = math.inf if c_cut == 0.0 else 2.0 / c_cut
        return ScanRow(pair_id=idx, x=x, y=y, L=float(L), c_cut=c_cut,
                       c_fn=c_fn, bound_2_over_ccut=bound,
                       passed=c_fn <= bound + 1e-12)

    workers = threads if threads and threads > 0 else (os.cpu_count() or 1)
    if workers == 1:
        rows = [one(p) for p in enumerate(pairs)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(one, enumerate(pairs)))
    return ScanReport(
        rows=tuple(rows),
        min_c_cut=min(r.c_cut for r in rows),
        max_c_fn=max(r.c_fn for r in rows),
        n_pairs=len(rows),
        seed=seed,
    )
