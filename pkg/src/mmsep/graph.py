"""Finite metric measure graphs.

A space is a connected undirected graph with a nonnegative measure on
vertices and strictly positive edge lengths; the metric is the shortest-path
distance. Everything downstream (Riesz fields, separating sets, energies)
consumes the primitives defined here:

* ``DistanceField``: distances from one source plus prefix sums of the
  measure in sorted-by-distance order, so ball masses are O(log n) lookups.
* open balls ``B_r = {d < r}`` everywhere a ball is named; closed variants
  are separate methods, never a convention switch.
* local scale ``h(v)``: half the total incident edge length, capped at the
  longest incident edge. It is the per-vertex length element used by cut
  energies and sphere shells.

Vertex ids are strings. Internally vertices are dense indices in
construction order; all tie-breaking is by that order, so a graph built
from the same input behaves identically run to run.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from . import errors
from ._kernels import dijkstra_multi


@dataclass(frozen=True)
class DistanceField:
    """Distances from one source, with cumulative measure by distance.

    ``order`` sorts vertices by (distance, index); ``prefix[k]`` is the
    total measure of the first k vertices in that order. Ball masses at
    any radius are then searchsorted lookups against ``sorted_dist``.
    """

    source: str
    dist: np.ndarray
    order: np.ndarray
    sorted_dist: np.ndarray
    prefix: np.ndarray

    def ball_measure(self, r: float) -> float:
        """Measure of the open ball {d < r}."""
        k = np.searchsorted(self.sorted_dist, r, side="left")
        return float(self.prefix[k])

    def closed_ball_measure(self, r: float) -> float:
        """Measure of the closed ball {d <= r}."""
        k = np.searchsorted(self.sorted_dist, r, side="right")
        return float(self.prefix[k])


class MetricMeasureGraph:
    """Immutable connected weighted graph with vertex measures.

    Construct through :func:`build_graph` or the generators in
    :mod:`mmsep.spaces`; the constructor assumes pre-validated arrays.
    """

    def __init__(self, ids, measure, edge_u, edge_v, edge_len):
        self.ids: list[str] = list(ids)
        self.index: dict[str, int] = {v: i for i, v in enumerate(self.ids)}
        self.m = np.asarray(measure, dtype=np.float64)
        self.edge_u = np.asarray(edge_u, dtype=np.int64)
        self.edge_v = np.asarray(edge_v, dtype=np.int64)
        self.edge_len = np.asarray(edge_len, dtype=np.float64)
        n = len(self.ids)
        self.n = n
        self.total_measure = float(self.m.sum())

        # CSR adjacency with both directions of every edge.
        deg = np.zeros(n, dtype=np.int64)
        np.add.at(deg, self.edge_u, 1)
        np.add.at(deg, self.edge_v, 1)
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(deg, out=indptr[1:])
        nbr = np.empty(indptr[n], dtype=np.int64)
        nlen = np.empty(indptr[n], dtype=np.float64)
        cursor = indptr[:-1].copy()
        for u, v, ln in zip(self.edge_u, self.edge_v, self.edge_len):
            nbr[cursor[u]] = v
            nlen[cursor[u]] = ln
            cursor[u] += 1
            nbr[cursor[v]] = u
            nlen[cursor[v]] = ln
            cursor[v] += 1
        self.indptr = indptr
        self.nbr = nbr
        self.nbr_len = nlen

        # Local scale: half the incident length sum, capped at the longest
        # incident edge. Isolated vertices (single-vertex graph) get 0.
        half = np.zeros(n, dtype=np.float64)
        longest = np.zeros(n, dtype=np.float64)
        np.add.at(half, self.edge_u, self.edge_len)
        np.add.at(half, self.edge_v, self.edge_len)
        half *= 0.5
        np.maximum.at(longest, self.edge_u, self.edge_len)
        np.maximum.at(longest, self.edge_v, self.edge_len)
        self.h = np.where(half > 0, np.minimum(half, longest), 0.0)

        self._dist_cache: dict[int, DistanceField] = {}

    # -- lookups ------------------------------------------------------------

    def vertex(self, vid: str) -> int:
        try:
            return self.index[vid]
        except KeyError:
            raise errors.UnknownVertex(f"unknown vertex id {vid!r}") from None

    def neighbors(self, i: int) -> np.ndarray:
        return self.nbr[self.indptr[i]:self.indptr[i + 1]]

    def values_array(self, u) -> np.ndarray:
        """Vertex function as a dense float array.

        Accepts a mapping keyed by vertex id or an array already aligned
        with the construction order.
        """
        if isinstance(u, dict):
            try:
                return np.array([float(u[v]) for v in self.ids])
            except KeyError as exc:
                raise errors.UnknownVertex(
                    f"function missing value for vertex {exc.args[0]!r}"
                ) from None
        arr = np.asarray(u, dtype=np.float64)
        if arr.shape != (self.n,):
            raise errors.BadParam(
                f"function array has shape {arr.shape}, expected ({self.n},)"
            )
        return arr

    # -- distances ----------------------------------------------------------

    def distance_field(self, src: int) -> DistanceField:
        fld = self._dist_cache.get(src)
        if fld is None:
            dist = dijkstra_multi(
                self.indptr, self.nbr, self.nbr_len,
                np.array([src], dtype=np.int64),
            )
            order = np.lexsort((np.arange(self.n), dist))
            sorted_dist = dist[order]
            prefix = np.zeros(self.n + 1)
            np.cumsum(self.m[order], out=prefix[1:])
            fld = DistanceField(self.ids[src], dist, order, sorted_dist, prefix)
            self._dist_cache[src] = fld
        return fld

    def distance_to_set(self, seeds: np.ndarray) -> np.ndarray:
        """d(v, S) for all v, S given as an index array."""
        return dijkstra_multi(self.indptr, self.nbr, self.nbr_len,
                              np.asarray(seeds, dtype=np.int64))

    def hop_ball(self, src: int, hops: int) -> set[int]:
        """Vertices within ``hops`` edges of src, edge lengths ignored."""
        seen = {src}
        frontier = [src]
        for _ in range(hops):
            nxt = []
            for v in frontier:
                for w in self.neighbors(v):
                    w = int(w)
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
            if not frontier:
                break
        return seen

    def approx_diameter(self) -> float:
        """Double-sweep lower bound on the diameter (exact on trees)."""
        if self.n == 1:
            return 0.0
        d0 = self.distance_field(0).dist
        far = int(np.argmax(d0))
        d1 = self.distance_field(far).dist
        return float(d1.max())


def build_graph(vertices, edges) -> MetricMeasureGraph:
    """Validate and build a space from (id, measure) and (u, v, len) rows.

    Rejects duplicate ids, duplicate or self-loop edges, negative or
    non-finite measures, non-positive or non-finite lengths, unknown edge
    endpoints, and disconnected graphs.
    """
    ids = []
    seen = set()
    measure = []
    for vid, mv in vertices:
        vid = str(vid)
        if vid in seen:
            raise errors.BadParam(f"duplicate vertex id {vid!r}")
        seen.add(vid)
        mv = float(mv)
        if not math.isfinite(mv) or mv < 0:
            raise errors.NegativeMeasure(
                f"vertex {vid!r} has measure {mv}, need finite and >= 0"
            )
        ids.append(vid)
        measure.append(mv)
    if not ids:
        raise errors.BadParam("graph needs at least one vertex")

    index = {v: i for i, v in enumerate(ids)}
    eu, ev, elen = [], [], []
    edge_seen = set()
    for u, v, ln in edges:
        u, v = str(u), str(v)
        if u not in index:
            raise errors.UnknownVertex(f"edge endpoint {u!r} not a vertex")
        if v not in index:
            raise errors.UnknownVertex(f"edge endpoint {v!r} not a vertex")
        if u == v:
            raise errors.BadParam(f"self-loop at {u!r}")
        key = (min(u, v), max(u, v))
        if key in edge_seen:
            raise errors.DuplicateEdge(f"edge {key} listed twice")
        edge_seen.add(key)
        ln = float(ln)
        if not math.isfinite(ln) or ln <= 0:
            raise errors.NonpositiveLength(
                f"edge {key} has length {ln}, need finite and > 0"
            )
        iu, iv = index[u], index[v]
        if iu > iv:
            iu, iv = iv, iu
        eu.append(iu)
        ev.append(iv)
        elen.append(ln)

    g = MetricMeasureGraph(ids, measure, eu, ev, elen)

    # Connectivity sweep (hop-based, lengths irrelevant).
    if g.n > 1:
        reach = g.hop_ball(0, g.n)
        if len(reach) != g.n:
            missing = next(g.ids[i] for i in range(g.n) if i not in reach)
            raise errors.DisconnectedGraph(
                f"graph is disconnected ({missing!r} unreachable from {g.ids[0]!r})"
            )
    return g


# -- JSON interchange ---------------------------------------------------------

def load_graph_json(path) -> MetricMeasureGraph:
    """Read the {"vertices": [...], "edges": [...]} interchange format."""
    with open(path, "r", encoding="utf-8") as fh:
        # json accepts NaN/Infinity literals by default; forbid them so the
        # measure/length validators see every non-finite value as an error.
        doc = json.load(fh, parse_constant=lambda s: math.nan)
    if not isinstance(doc, dict) or "vertices" not in doc or "edges" not in doc:
        raise errors.BadParam("graph JSON needs 'vertices' and 'edges' keys")
    try:
        vertices = [(v["id"], v["m"]) for v in doc["vertices"]]
        edges = [(e["u"], e["v"], e["len"]) for e in doc["edges"]]
    except (TypeError, KeyError) as exc:
        raise errors.BadParam(f"malformed graph JSON: {exc}") from None
    return build_graph(vertices, edges)


def save_graph_json(g: MetricMeasureGraph, path) -> None:
    doc = {
        "vertices": [{"id": v, "m": float(g.m[i])} for i, v in enumerate(g.ids)],
        "edges": [
            {"u": g.ids[int(u)], "v": g.ids[int(v)], "len": float(ln)}
            for u, v, ln in zip(g.edge_u, g.edge_v, g.edge_len)
        ],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")


# -- metric measure primitives ------------------------------------------------

def shortest_paths(g: MetricMeasureGraph, x: str) -> DistanceField:
    """Distance field from x; cached on the graph per source."""
    return g.distance_field(g.vertex(x))


def ball_measure(g: MetricMeasureGraph, x: str, r: float) -> float:
    """m(B_r(x)) with the open-ball convention {d < r}."""
    if not math.isfinite(r):
        raise errors.BadParam(f"ball radius must be finite, got {r}")
    return shortest_paths(g, x).ball_measure(r)


def _default_radii(g: MetricMeasureGraph) -> list[float]:
    # Geometric ladder from the shortest edge, while the doubled ball still
    # fits in the (approximate) diameter.
    if g.edge_len.size == 0:
        return []
    r = float(g.edge_len.min())
    diam = g.approx_diameter()
    out = []
    while 2 * r <= diam:
        out.append(r)
        r *= 2
    return out or [float(g.edge_len.min())]


def _default_centers(g: MetricMeasureGraph, limit: int = 256) -> list[int]:
    if g.n <= limit:
        return list(range(g.n))
    # Deterministic subsample, independent of any caller seed.
    rng = np.random.default_rng(0)
    return sorted(rng.choice(g.n, size=limit, replace=False).tolist())


def doubling_constant(g: MetricMeasureGraph, centers=None, radii=None) -> float:
    """max m(B_2r(x)) / m(B_r(x)) over the sampling schedule.

    Centers default to every vertex (subsampled past 256); radii default to
    a geometric ladder from the shortest edge length. Pairs with empty B_r
    are skipped; if every pair is skipped the sample is empty.
    """
    idx = [g.vertex(c) for c in centers] if centers is not None else _default_centers(g)
    rr = list(radii) if radii is not None else _default_radii(g)
    if not idx or not rr:
        raise errors.EmptySample("doubling constant needs centers and radii")
    best = 0.0
    found = False
    for i in idx:
        fld = g.distance_field(i)
        for r in rr:
            small = fld.ball_measure(r)
            if small <= 0:
                continue
            found = True
            ratio = fld.ball_measure(2 * r) / small
            if ratio > best:
                best = ratio
    if not found:
        raise errors.EmptySample("all sampled balls were empty")
    return best


def ahlfors_exponent(g: MetricMeasureGraph, centers=None, radii=None):
    """Least-squares growth exponent of log m(B_r) against log r.

    Returns (s, c_ar) where c_ar is the smallest constant making
    c_ar^-1 r^s <= m(B_r(x)) <= c_ar r^s hold over the whole sample.
    Radii must include at least two distinct values spanning a factor
    of two or more.
    """
    idx = [g.vertex(c) for c in centers] if centers is not None else _default_centers(g)
    rr = sorted(set(float(r) for r in (radii if radii is not None else _default_radii(g))))
    if not idx:
        raise errors.EmptySample("ahlfors exponent needs centers")
    if len(rr) < 2 or rr[-1] < 2 * rr[0]:
        raise errors.DegenerateRadii(
            f"need >= 2 radii spanning a factor of 2, got {rr}"
        )
    logs_r, logs_m = [], []
    for i in idx:
        fld = g.distance_field(i)
        for r in rr:
            mb = fld.ball_measure(r)
            if mb > 0 and r > 0:
                logs_r.append(math.log(r))
                logs_m.append(math.log(mb))
    if len(logs_r) < 2:
        raise errors.EmptySample("not enough nonempty balls to fit")
    lr = np.array(logs_r)
    lm = np.array(logs_m)
    vr = float(((lr - lr.mean()) ** 2).sum())
    if vr == 0:
        raise errors.DegenerateRadii("all sampled balls share one radius")
    s = float(((lr - lr.mean()) * (lm - lm.mean())).sum() / vr)
    # Smallest two-sided comparison constant at this exponent.
    resid = lm - s * lr
    c_ar = float(math.exp(max(abs(float(resid.max())), abs(float(resid.min())))))
    return s, c_ar


def sphere_growth(g: MetricMeasureGraph, x: str, s: float, radii=None):
    """Shell mass ratios (sum over shell of m/h) / r^(s-1) per radius.

    The shell at radius r is {v : r - h(v) <= d(x,v) < r + h(v)}, the
    vertices whose local length element straddles the sphere. Returns a
    list of (r, ratio) pairs; empty when the graph has no usable radii
    (single vertex).
    """
    xi = g.vertex(x)
    if g.n == 1 or g.edge_len.size == 0:
        return []
    dist = g.distance_field(xi).dist
    if radii is None:
        vals = np.unique(dist[dist > 0])
        radii = [float(v) for v in vals if math.isfinite(v)]
    out = []
    for r in radii:
        r = float(r)
        if r <= 0:
            raise errors.BadParam(f"shell radius must be positive, got {r}")
        in_shell = (r - g.h <= dist) & (dist < r + g.h)
        mass = float(np.sum(np.where(in_shell, g.m / np.where(g.h > 0, g.h, 1.0), 0.0)))
        out.append((r, mass / r ** (s - 1)))
    return out
