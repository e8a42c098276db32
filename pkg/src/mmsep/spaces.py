"""Benchmark space generators and point-cloud ingestion.

Paths, lattice grids with optionally center-weighted measures, Sierpinski
carpet pre-fractals at cell granularity, dumbbells with thin necks, and
epsilon-graphs over point clouds. Every constructor is deterministic in
its parameters.
"""

from __future__ import annotations

import itertools
import math

from . import errors
from .graph import MetricMeasureGraph, build_graph


def gen_path(n: int) -> MetricMeasureGraph:
    """Path on n vertices, unit measures and lengths. Vertex ids v0..v{n-1}."""
    if n < 2:
        raise errors.BadParam(f"path needs at least 2 vertices, got {n}")
    verts = [(f"v{i}", 1.0) for i in range(n)]
    edges = [(f"v{i}", f"v{i+1}", 1.0) for i in range(n - 1)]
    return build_graph(verts, edges)


def gen_grid(n: int, dim: int = 2, alpha: float = 0.0) -> MetricMeasureGraph:
    """{0..n-1}^dim lattice, unit edges, measure (1 + |v - center|)^alpha.

    alpha = 0 gives the uniform grid; positive alpha weights the rim,
    negative the center. Ids are comma-joined coordinates.
    """
    if n < 2:
        raise errors.BadParam(f"grid needs n >= 2, got {n}")
    if dim not in (2, 3):
        raise errors.BadParam(f"grid dimension must be 2 or 3, got {dim}")
    if not math.isfinite(alpha):
        raise errors.BadParam(f"weight exponent must be finite, got {alpha}")
    center = (n - 1) / 2.0
    verts = []
    edges = []
    for coord in itertools.product(range(n), repeat=dim):
        vid = ",".join(map(str, coord))
        radius = math.sqrt(sum((c - center) ** 2 for c in coord))
        verts.append((vid, (1.0 + radius) ** alpha))
        for axis in range(dim):
            if coord[axis] + 1 < n:
                nxt = list(coord)
                nxt[axis] += 1
                edges.append((vid, ",".join(map(str, nxt)), 1.0))
    return build_graph(verts, edges)


def _carpet_keep(i: int, j: int, level: int) -> bool:
    for _ in range(level):
        if i % 3 == 1 and j % 3 == 1:
            return False
        i //= 3
        j //= 3
    return True


def gen_carpet(level: int) -> MetricMeasureGraph:
    """Sierpinski carpet pre-fractal at cell granularity.

    Cells of the 3^level grid survive when no base-3 digit position puts
    them in a removed middle ninth; side-adjacent survivors are joined by
    edges of length 3^-level, so diameters are comparable across levels.
    8^level cells, unit measure each.
    """
    if not 1 <= level <= 5:
        raise errors.BadParam(f"carpet level must be in 1..5, got {level}")
    side = 3 ** level
    length = 3.0 ** (-level)
    verts = []
    edges = []
    for i in range(side):
        for j in range(side):
            if not _carpet_keep(i, j, level):
                continue
            vid = f"{i},{j}"
            verts.append((vid, 1.0))
            if i + 1 < side and _carpet_keep(i + 1, j, level):
                edges.append((vid, f"{i+1},{j}", length))
            if j + 1 < side and _carpet_keep(i, j + 1, level):
                edges.append((vid, f"{i},{j+1}", length))
    return build_graph(verts, edges)


def gen_dumbbell(n: int, neck_len: int, neck_width: int = 1) -> MetricMeasureGraph:
    """Two n x n unit grids joined by neck_width parallel unit chains of
    neck_len vertices.

    Left-grid ids a{i},{j}, right-grid b{i},{j}, neck t{c}_{k}. Chains
    attach to evenly spread rows of the facing grid columns.
    """
    if n < 2:
        raise errors.BadParam(f"dumbbell bells need n >= 2, got {n}")
    if neck_len < 1:
        raise errors.BadParam(f"neck needs at least 1 vertex, got {neck_len}")
    if not 1 <= neck_width <= n:
        raise errors.BadParam(
            f"neck width must be in 1..{n} (one chain per distinct row), "
            f"got {neck_width}"
        )
    verts = []
    edges = []
    for side in ("a", "b"):
        for i in range(n):
            for j in range(n):
                verts.append((f"{side}{i},{j}", 1.0))
                if i + 1 < n:
                    edges.append((f"{side}{i},{j}", f"{side}{i+1},{j}", 1.0))
                if j + 1 < n:
                    edges.append((f"{side}{i},{j}", f"{side}{i},{j+1}", 1.0))
    if neck_width == 1:
        rows = [n // 2]
    else:
        rows = [round(c * (n - 1) / (neck_width - 1)) for c in range(neck_width)]
    for c, row in enumerate(rows):
        prev = f"a{row},{n-1}"
        for k in range(neck_len):
            tid = f"t{c}_{k}"
            verts.append((tid, 1.0))
            edges.append((prev, tid, 1.0))
            prev = tid
        edges.append((prev, f"b{row},0", 1.0))
    return build_graph(verts, edges)


def ingest_point_cloud(points, epsilon: float,
                       measure_rule: str = "unit") -> MetricMeasureGraph:
    """Epsilon-graph over coordinate tuples: edges at Euclidean distance
    <= epsilon with that distance as length.

    measure_rule "unit" gives every point mass 1; "density" counts the
    points within epsilon (self included). Raises if the graph comes out
    disconnected.
    """
    pts = [tuple(float(c) for c in p) for p in points]
    if len(pts) < 2:
        raise errors.BadParam(f"need at least 2 points, got {len(pts)}")
    if epsilon <= 0 or not math.isfinite(epsilon):
        raise errors.BadParam(f"epsilon must be positive, got {epsilon}")
    if measure_rule not in ("unit", "density"):
        raise errors.BadParam(f"measure rule must be unit|density, "
                              f"got {measure_rule!r}")
    dims = {len(p) for p in pts}
    if len(dims) != 1:
        raise errors.BadParam(f"points have mixed dimensions {sorted(dims)}")
    m = len(pts)
    within = [1] * m
    edges = []
    for i in range(m):
        for j in range(i + 1, m):
            d = math.dist(pts[i], pts[j])
            if d <= epsilon:
                if d == 0.0:
                    raise errors.BadParam(
                        f"points {i} and {j} coincide; zero-length edge"
                    )
                edges.append((f"p{i}", f"p{j}", d))
                within[i] += 1
                within[j] += 1
    if measure_rule == "unit":
        verts = [(f"p{i}", 1.0) for i in range(m)]
    else:
        verts = [(f"p{i}", float(within[i])) for i in range(m)]
    return build_graph(verts, edges)
