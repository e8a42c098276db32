"""Boundary energies of separating sets and their exact cut duals.

Five ways to measure how small a boundary can be, all weighted by the
Riesz measure of a pole pair unless stated otherwise:

* perimeter: cut-edge sums (riesz and measure modes)
* codim_hausdorff: gauge-weighted ball covers of a boundary set
* minkowski_content: mass of the closed r-neighborhood annulus over r^p
* capacity: exact minimum over indicator profiles between a set and the
  complement of its hop neighborhood
* modulus_connecting / min_cut_energy: vertex-capacitated min cuts, via
  max-flow on node-split networks, with reconstructed witnesses

The flow solvers return witnesses whose recomputed boundary energy is
asserted against the flow value, so a silent max-flow bug cannot produce
a plausible-looking number.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from . import errors
from ._kernels import FLOW_EPS, dinic_maxflow
from .graph import MetricMeasureGraph
from .riesz import RieszField, riesz_potential
from .separating import SeparatingSet, validate_separating_set, enumerate_separating_sets

INF_CAP = 1e18


# -- flow scaffolding ---------------------------------------------------------

class _FlowNet:
    """Arc-list network; arc i and i^1 are residual partners."""

    def __init__(self, n_nodes: int):
        self.n = n_nodes
        self.tail: list[int] = []
        self.to: list[int] = []
        self.cap: list[float] = []

    def add(self, u: int, v: int, c: float) -> None:
        self.tail.append(u)
        self.to.append(v)
        self.cap.append(c)
        self.tail.append(v)
        self.to.append(u)
        self.cap.append(0.0)

    def solve(self, s: int, t: int) -> float:
        self.arc_to = np.array(self.to, dtype=np.int64)
        self.arc_cap = np.array(self.cap, dtype=np.float64)
        tails = np.array(self.tail, dtype=np.int64)
        deg = np.zeros(self.n, dtype=np.int64)
        np.add.at(deg, tails, 1)
        adj_ptr = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(deg, out=adj_ptr[1:])
        adj_arc = np.empty(tails.shape[0], dtype=np.int64)
        cur = adj_ptr[:-1].copy()
        for a, u in enumerate(tails):
            adj_arc[cur[u]] = a
            cur[u] += 1
        self.adj_ptr = adj_ptr
        self.adj_arc = adj_arc
        return float(dinic_maxflow(self.arc_to, self.arc_cap, adj_ptr, adj_arc, s, t))

    def reachable(self, s: int) -> np.ndarray:
        """Residual-reachable node set after solve (the min-cut source side)."""
        seen = np.zeros(self.n, dtype=bool)
        seen[s] = True
        stack = [s]
        while stack:
            v = stack.pop()
            for k in range(self.adj_ptr[v], self.adj_ptr[v + 1]):
                a = self.adj_arc[k]
                w = int(self.arc_to[a])
                if not seen[w] and self.arc_cap[a] > FLOW_EPS:
                    seen[w] = True
                    stack.append(w)
        return seen


@dataclass(frozen=True)
class CutWitness:
    """A min-cut value with the set achieving it.

    ``boundary`` is the paid vertex set (the inner boundary of ``omega``)
    and ``vertex_energy`` its per-vertex contributions; their sum is the
    value.
    """

    x: str
    y: str
    value: float
    omega: frozenset[str]
    boundary: frozenset[str]
    vertex_energy: dict


def _cut_capacities(g: MetricMeasureGraph, field: RieszField) -> np.ndarray:
    """Per-vertex cut prices riesz_m / local scale."""
    h = np.where(g.h > 0, g.h, 1.0)
    return field.riesz_m / h


# -- perimeter ----------------------------------------------------------------

def perimeter(g: MetricMeasureGraph, ss: SeparatingSet, field: RieszField,
              mode: str = "riesz") -> float:
    """Cut-edge boundary energy of a separating set.

    mode "riesz":   sum over cut edges of (m_u+m_v)/(2 len) * (R_u+R_v)/2
    mode "measure": same edge density against the induced measure,
                    sum of (mL_u + mL_v)/(2 len)
    """
    if mode not in ("riesz", "measure"):
        raise errors.BadParam(f"perimeter mode must be riesz|measure, got {mode!r}")
    total = 0.0
    for u, v, ln in ss.cut_edges:
        iu, iv = g.vertex(u), g.vertex(v)
        if mode == "riesz":
            total += (g.m[iu] + g.m[iv]) / (2.0 * ln) * (field.R[iu] + field.R[iv]) / 2.0
        else:
            total += (field.riesz_m[iu] + field.riesz_m[iv]) / (2.0 * ln)
    return float(total)


# -- hausdorff-type cover energy ----------------------------------------------

def _min_incident_len(g: MetricMeasureGraph) -> np.ndarray:
    out = np.full(g.n, np.inf)
    np.minimum.at(out, g.edge_u, g.edge_len)
    np.minimum.at(out, g.edge_v, g.edge_len)
    return out


def codim_hausdorff(g: MetricMeasureGraph, a_ids, delta: float | None = None,
                    p: float = 1.0, ball_weight=None, point_factor=None) -> float:
    """Minimal gauge cost of covering a vertex set by balls of radius <= delta.

    The gauge of a candidate ball B_r(z) (open, realized radii only) is

        point_factor[z] * ball_weight(B_r(z)) / r^p

    with ball_weight defaulting to the plain measure and point_factor to 1.
    Small instances (<= 16 deduplicated balls, or <= 16 points) are solved
    exactly; larger ones fall back to the greedy cover, an upper bound.
    """
    a_idx = sorted({g.vertex(v) for v in a_ids})
    if not a_idx:
        raise errors.EmptySet("cannot cover an empty set")
    w_ball = g.m if ball_weight is None else np.asarray(ball_weight, dtype=np.float64)
    factor = None if point_factor is None else np.asarray(point_factor, dtype=np.float64)

    if delta is None:
        delta = float(_min_incident_len(g)[a_idx].max())
        if not math.isfinite(delta):
            raise errors.DeltaTooSmall("isolated point has no coverable radius")
    if delta <= 0 or not math.isfinite(delta):
        raise errors.BadParam(f"delta must be positive and finite, got {delta}")

    d_a = g.distance_to_set(np.array(a_idx, dtype=np.int64))
    centers = [z for z in range(g.n) if d_a[z] <= delta]

    # Candidate balls, deduplicated per coverage set to the cheapest gauge.
    pos_in_a = {v: i for i, v in enumerate(a_idx)}
    best: dict[frozenset, float] = {}
    for z in centers:
        dz = g.distance_field(z).dist
        da_z = dz[a_idx]
        radii = np.unique(dz[(dz > 0) & (dz <= delta)])
        for r in radii:
            covered = frozenset(np.nonzero(da_z < r)[0].tolist())
            if not covered:
                continue
            order = g.distance_field(z).order
            k = np.searchsorted(g.distance_field(z).sorted_dist, r, side="left")
            mass = float(w_ball[order[:k]].sum())
            if p == 0:
                cost = mass
            else:
                cost = mass / float(r) ** p
            if factor is not None:
                cost *= float(factor[z])
            prev = best.get(covered)
            if prev is None or cost < prev:
                best[covered] = cost

    balls = sorted(best.items(), key=lambda kv: (kv[1], sorted(kv[0])))
    everything = frozenset(range(len(a_idx)))
    reach = frozenset().union(*best.keys()) if best else frozenset()
    if reach != everything:
        missing = next(a_idx[i] for i in sorted(everything - reach))
        raise errors.DeltaTooSmall(
            f"no candidate ball of radius <= {delta} covers {g.ids[missing]!r}"
        )

    if len(balls) <= 16:
        return _cover_exact_by_balls(balls, everything)
    if len(a_idx) <= 16:
        return _cover_exact_by_points(balls, len(a_idx))
    return _cover_greedy(balls, everything)


def _cover_exact_by_balls(balls, everything):
    best_cost = math.inf
    k = len(balls)
    for mask in range(1, 1 << k):
        cost = 0.0
        covered = set()
        for b in range(k):
            if mask >> b & 1:
                cost += balls[b][1]
                if cost >= best_cost:
                    break
                covered.update(balls[b][0])
        else:
            if covered >= everything and cost < best_cost:
                best_cost = cost
    return float(best_cost)


def _cover_exact_by_points(balls, n_points):
    full = (1 << n_points) - 1
    masks = []
    for covered, cost in balls:
        mk = 0
        for i in covered:
            mk |= 1 << i
        masks.append((mk, cost))
    dp = np.full(full + 1, np.inf)
    dp[0] = 0.0
    for state in range(full + 1):
        if not np.isfinite(dp[state]):
            continue
        for mk, cost in masks:
            nxt = state | mk
            if dp[state] + cost < dp[nxt]:
                dp[nxt] = dp[state] + cost
    return float(dp[full])


def _cover_greedy(balls, everything):
    covered: set = set()
    total = 0.0
    remaining = list(balls)
    while covered < everything:
        best_ratio, best_i = math.inf, -1
        for i, (cov, cost) in enumerate(remaining):
            new = len(cov - covered)
            if new == 0:
                continue
            ratio = cost / new
            if ratio < best_ratio:
                best_ratio, best_i = ratio, i
        cov, cost = remaining.pop(best_i)
        covered.update(cov)
        total += cost
    return float(total)


# -- minkowski content ----------------------------------------------------------

def minkowski_content(g: MetricMeasureGraph, a_ids, weights=None, p: float = 1.0,
                      r_schedule=None, shells: int = 3) -> float:
    """min over the radius schedule of weight(closed B_r(A) minus A) / r^p.

    The default schedule is the first ``shells`` distinct positive
    distances realized from A. An explicit empty schedule is an error; a
    set with no exterior has content 0.
    """
    a_idx = sorted({g.vertex(v) for v in a_ids})
    if not a_idx:
        raise errors.EmptySet("minkowski content of an empty set")
    w = g.m if weights is None else np.asarray(weights, dtype=np.float64)
    d_a = g.distance_to_set(np.array(a_idx, dtype=np.int64))
    outside = d_a > 0
    if r_schedule is None:
        vals = np.unique(d_a[outside & np.isfinite(d_a)])
        if vals.size == 0:
            return 0.0
        schedule = vals[:shells].tolist()
    else:
        schedule = [float(r) for r in r_schedule]
        if not schedule:
            raise errors.EmptySchedule("explicit radius schedule is empty")
        if any(r <= 0 or not math.isfinite(r) for r in schedule):
            raise errors.BadParam(f"radii must be positive and finite: {schedule}")
    best = math.inf
    for r in schedule:
        annulus = outside & (d_a <= r)
        best = min(best, float(w[annulus].sum()) / r ** p)
    return best


def first_shell_minkowski(g: MetricMeasureGraph, a_ids, weights=None,
                          p: float = 1.0) -> float:
    """Minkowski content at the first realized shell, the liminf surrogate."""
    a_idx = sorted({g.vertex(v) for v in a_ids})
    if not a_idx:
        raise errors.EmptySet("minkowski content of an empty set")
    d_a = g.distance_to_set(np.array(a_idx, dtype=np.int64))
    vals = np.unique(d_a[(d_a > 0) & np.isfinite(d_a)])
    if vals.size == 0:
        return 0.0
    return minkowski_content(g, a_ids, weights=weights, p=p,
                             r_schedule=[float(vals[0])])


# -- capacity -------------------------------------------------------------------

def capacity(g: MetricMeasureGraph, target, weights,
             neighborhood_hops: int = 1) -> float:
    """Exact indicator capacity between a set and its hop-neighborhood rim.

    Minimizes sum_v w(v) * g_S(v) over indicator sets S with
    A subseteq S subseteq U, U the ``neighborhood_hops`` hop neighborhood
    of A, where g_S(v) = max over crossing edges at v of 1/len. Both sides
    of every crossing edge pay, which is what the gradient of an indicator
    charges. Solved as one s-t min cut: each vertex contributes per-length
    reward gadgets that are kept only while its closed neighborhood layer
    stays on one side.

    A neighborhood that swallows the whole space leaves nothing to cut;
    that degenerate case warns and returns 0.
    """
    if isinstance(target, SeparatingSet):
        a_ids = target.omega
    else:
        a_ids = target
    a_idx = sorted({g.vertex(v) for v in a_ids})
    if not a_idx:
        raise errors.EmptySet("capacity of an empty set")
    if neighborhood_hops < 1:
        raise errors.BadParam("neighborhood_hops must be >= 1")
    w = np.asarray(weights, dtype=np.float64)

    in_a = np.zeros(g.n, dtype=bool)
    in_a[a_idx] = True
    in_u = in_a.copy()
    frontier = list(a_idx)
    for _ in range(neighborhood_hops):
        nxt = []
        for v in frontier:
            for nb in g.neighbors(v):
                nb = int(nb)
                if not in_u[nb]:
                    in_u[nb] = True
                    nxt.append(nb)
        frontier = nxt
    if in_u.all():
        warnings.warn("hop neighborhood covers the whole space; capacity is 0",
                      stacklevel=2)
        return 0.0

    # Gadget layers: distinct incident lengths ascending; the k-th layer of v
    # rewards keeping {v} + {w : len(v,w) <= l_k} monochromatic and is worth
    # w(v) * (1/l_k - 1/l_(k+1)). Lost rewards add up to exactly
    # w(v)/min crossing length whenever v touches the cut.
    gadgets = []  # (delta, member_list)
    for v in range(g.n):
        if w[v] == 0.0:
            continue
        lens = g.nbr_len[g.indptr[v]:g.indptr[v + 1]]
        nbrs = g.nbr[g.indptr[v]:g.indptr[v + 1]]
        if lens.size == 0:
            continue
        closed = np.append(nbrs, v)
        if in_a[closed].all() or not in_u[closed].any():
            continue  # forced monochromatic, never charged
        distinct = np.unique(lens)
        for k, lk in enumerate(distinct):
            inv_next = 1.0 / distinct[k + 1] if k + 1 < distinct.size else 0.0
            delta = w[v] * (1.0 / lk - inv_next)
            if delta <= 0.0:
                continue
            members = [int(nb) for nb, ln in zip(nbrs, lens) if ln <= lk]
            members.append(v)
            gadgets.append((float(delta), members))

    n_nodes = g.n + 2 * len(gadgets) + 2
    src = g.n + 2 * len(gadgets)
    snk = src + 1
    net = _FlowNet(n_nodes)
    for v in range(g.n):
        if in_a[v]:
            net.add(src, v, INF_CAP)
        elif not in_u[v]:
            net.add(v, snk, INF_CAP)
    offset = 0.0
    for gi, (delta, members) in enumerate(gadgets):
        a_node = g.n + 2 * gi
        b_node = a_node + 1
        offset += delta
        net.add(src, a_node, delta)
        net.add(b_node, snk, delta)
        for v in members:
            net.add(a_node, v, INF_CAP)
            net.add(v, b_node, INF_CAP)
    flow = net.solve(src, snk)
    value = flow - offset

    # Recompute from the witness side for an order-independent value.
    side = net.reachable(src)[:g.n]
    min_cross = np.full(g.n, np.inf)
    cross = side[g.edge_u] != side[g.edge_v]
    for u, v, ln in zip(g.edge_u[cross], g.edge_v[cross], g.edge_len[cross]):
        if ln < min_cross[u]:
            min_cross[u] = ln
        if ln < min_cross[v]:
            min_cross[v] = ln
    paid = np.isfinite(min_cross)
    recomputed = float((w[paid] / min_cross[paid]).sum())
    if not math.isclose(recomputed, value, rel_tol=1e-9, abs_tol=1e-9):
        raise AssertionError(
            f"capacity witness mismatch: flow {value!r} vs boundary {recomputed!r}"
        )
    return recomputed


# -- vertex-capacitated min cuts -----------------------------------------------

def _split_in(v: int) -> int:
    return 2 * v


def _split_out(v: int) -> int:
    return 2 * v + 1


def _forced_cut_value(g: MetricMeasureGraph, caps: np.ndarray, xi: int, yi: int,
                      in_region: np.ndarray):
    """Min vertex cut with the one-hop pole balls merged into the terminals.

    Node-split network restricted to ``in_region``: internal arcs carry the
    vertex prices, pole internals are uncuttable, x's one-hop ball hangs off
    the source (members stay inside but their internal arcs remain cuttable)
    and y's one-hop ball feeds the sink (its members can never be charged).
    Returns (value, omega_indices, cut_indices) with the value recomputed
    from the residual cut so identical configurations sum identically.
    """
    ball_x = {v for v in g.hop_ball(xi, 1) if in_region[v]}
    ball_y = {v for v in g.hop_ball(yi, 1) if in_region[v]}
    if ball_x & ball_y:
        raise errors.NoValidSeparator(
            f"one-hop balls of {g.ids[xi]!r} and {g.ids[yi]!r} overlap; "
            "no separating set exists"
        )
    src = 2 * g.n
    snk = src + 1
    net = _FlowNet(2 * g.n + 2)
    for v in range(g.n):
        if v == xi or v == yi or not in_region[v]:
            continue
        net.add(_split_in(v), _split_out(v), float(caps[v]))
    for u, v in zip(g.edge_u, g.edge_v):
        u, v = int(u), int(v)
        if in_region[u] and in_region[v]:
            net.add(_split_out(u), _split_in(v), INF_CAP)
            net.add(_split_out(v), _split_in(u), INF_CAP)
    net.add(src, _split_in(xi), INF_CAP)
    net.add(src, _split_out(xi), INF_CAP)
    net.add(_split_in(yi), snk, INF_CAP)
    net.add(_split_out(yi), snk, INF_CAP)
    for v in ball_x - {xi}:
        net.add(src, _split_in(v), INF_CAP)
    for v in ball_y - {yi}:
        net.add(_split_in(v), snk, INF_CAP)

    flow = net.solve(src, snk)
    if flow >= INF_CAP / 2:
        raise errors.NoValidSeparator("forcing arcs contradict each other")
    reach = net.reachable(src)
    omega_idx = [v for v in range(g.n) if in_region[v] and reach[_split_in(v)]]
    cut = [v for v in omega_idx if not reach[_split_out(v)]]
    value = float(sum(float(caps[v]) for v in cut))
    if not math.isclose(value, flow, rel_tol=1e-9, abs_tol=1e-9):
        raise AssertionError(f"cut mismatch: flow {flow!r} vs boundary {value!r}")
    return value, omega_idx, cut


def modulus_connecting(g: MetricMeasureGraph, x: str, y: str, field: RieszField,
                       region=None):
    """1-modulus of the curve family joining x's one-hop ball to y's, inside
    a region.

    The curves run from the inner neighborhood of x to the outer
    neighborhood of y (the transversal surrogate), so by max-flow/min-cut
    duality the value is a minimum vertex cut with prices riesz_m(v)/h(v)
    that never charges either pole ball sink-side. The default region is
    the truncation ball of the field. Returns (value, CutWitness); the
    witness omega is the residual source side and its inner boundary the
    optimal cut.
    """
    xi, yi = g.vertex(x), g.vertex(y)
    if xi == yi:
        raise errors.SamePoles(f"poles must differ, got {x!r} twice")
    if region is None:
        in_region = field.in_ball.copy()
    else:
        in_region = np.zeros(g.n, dtype=bool)
        for v in region:
            in_region[g.vertex(v)] = True
    if not (in_region[xi] and in_region[yi]):
        raise errors.NotConnectedInRegion("a pole lies outside the region")

    # Connectivity of the induced region.
    seen = {xi}
    stack = [xi]
    while stack:
        v = stack.pop()
        for nb in g.neighbors(v):
            nb = int(nb)
            if in_region[nb] and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    if yi not in seen:
        raise errors.NotConnectedInRegion(
            f"poles {x!r} and {y!r} are not joined inside the region"
        )

    caps = _cut_capacities(g, field)
    value, omega_idx, cut = _forced_cut_value(g, caps, xi, yi, in_region)
    energy = {g.ids[v]: float(caps[v]) for v in cut}
    witness = CutWitness(x=x, y=y, value=value,
                         omega=frozenset(g.ids[v] for v in omega_idx),
                         boundary=frozenset(energy), vertex_energy=energy)
    return value, witness


def min_cut_energy(g: MetricMeasureGraph, x: str, y: str, L: float = 2.0,
                   field: RieszField | None = None) -> CutWitness:
    """Exact infimum of the inner-boundary energy over valid separating sets.

    Energy of Omega is sum over its inner boundary of riesz_m(v)/h(v).
    The one-hop interior conditions become forcing arcs in the flow
    network, so the witness omega reconstructed from the residual graph
    is a valid separating set by construction.
    """
    xi, yi = g.vertex(x), g.vertex(y)
    if xi == yi:
        raise errors.SamePoles(f"poles must differ, got {x!r} twice")
    if field is None:
        field = riesz_potential(g, x, y, L)
    caps = _cut_capacities(g, field)
    everywhere = np.ones(g.n, dtype=bool)
    value, omega_idx, cut = _forced_cut_value(g, caps, xi, yi, everywhere)
    energy = {g.ids[v]: float(caps[v]) for v in cut}
    return CutWitness(
        x=x, y=y, value=value,
        omega=frozenset(g.ids[v] for v in omega_idx),
        boundary=frozenset(energy), vertex_energy=energy,
    )


def boundary_vertex_energy(g: MetricMeasureGraph, ss: SeparatingSet,
                           field: RieszField) -> float:
    """sum over the inner boundary of riesz_m / h, the min-cut objective."""
    caps = _cut_capacities(g, field)
    return float(sum(caps[g.vertex(v)] for v in ss.inner_boundary))


def brute_force_cut_infimum(g: MetricMeasureGraph, x: str, y: str,
                            field: RieszField | None = None, L: float = 2.0,
                            energy=None, max_vertices: int = 22):
    """Exhaustive minimum of an energy over all valid separating sets.

    The oracle for the flow solvers. Default energy is the inner-boundary
    vertex energy. Ties break to the lexicographically smallest omega
    (compared as sorted id tuples). Returns (value, SeparatingSet).
    """
    if field is None:
        field = riesz_potential(g, x, y, L)
    if energy is None:
        def energy(ss):
            return boundary_vertex_energy(g, ss, field)
    best_val = math.inf
    best_key = None
    best_ss = None
    found = False
    for ss in enumerate_separating_sets(g, x, y, max_vertices=max_vertices):
        found = True
        val = energy(ss)
        key = tuple(sorted(ss.omega))
        if val < best_val - 1e-12 or (
            abs(val - best_val) <= 1e-12 and (best_key is None or key < best_key)
        ):
            best_val, best_key, best_ss = val, key, ss
    if not found:
        raise errors.NoValidSeparator(
            f"no valid separating set between {x!r} and {y!r}"
        )
    return float(best_val), best_ss


# -- the combined report ---------------------------------------------------------

@dataclass(frozen=True)
class EnergyReport:
    """Every boundary energy of one (x, y, omega, L, p) configuration."""

    x: str
    y: str
    L: float
    p: float
    bp: float          # perimeter, riesz mode
    bp_r: float        # perimeter, measure mode
    bc: float          # capacity against riesz_m
    bmc: float         # first-shell minkowski content of omega
    bmc0: float        # first-shell minkowski content of the vertex boundary
    bh_f: float        # cover energy, gauge riesz_m(B_r)/r^p
    bh_g: float        # cover energy, gauge R * m(B_r)/r^p
    mod1: float        # modulus of the connecting curves = min vertex cut
    bam_local: float   # sum over the vertex boundary of riesz_m/h
    witness_size: int  # omega size of the modulus witness
    omega_size: int


def energy_report(g: MetricMeasureGraph, x: str, y: str, omega, L: float = 2.0,
                  p: float = 1.0) -> EnergyReport:
    """Evaluate every boundary energy for one separating set.

    ``omega`` may be a validated SeparatingSet or a bare vertex id
    collection; bare sets are validated against the poles first.
    """
    if isinstance(omega, SeparatingSet):
        ss = omega
    else:
        ss = validate_separating_set(g, omega, x, y)
    field = riesz_potential(g, x, y, L)
    boundary = ss.boundary
    caps = _cut_capacities(g, field)
    mod_value, witness = modulus_connecting(g, x, y, field)
    return EnergyReport(
        x=x, y=y, L=float(L), p=float(p),
        bp=perimeter(g, ss, field, mode="riesz"),
        bp_r=perimeter(g, ss, field, mode="measure"),
        bc=capacity(g, ss.omega, weights=field.riesz_m, neighborhood_hops=1),
        bmc=first_shell_minkowski(g, ss.omega, weights=field.riesz_m, p=p),
        bmc0=first_shell_minkowski(g, boundary, weights=field.riesz_m, p=p),
        bh_f=codim_hausdorff(g, boundary, p=p, ball_weight=field.riesz_m),
        bh_g=codim_hausdorff(g, boundary, p=p, ball_weight=g.m,
                             point_factor=field.R),
        mod1=mod_value,
        bam_local=float(sum(caps[g.vertex(v)] for v in boundary)),
        witness_size=len(witness.omega),
        omega_size=len(ss.omega),
    )
