"""Separating sets between two poles.

Omega separates x from y when x and all its neighbors lie inside Omega and
y and all its neighbors lie outside; that one-hop interior margin is the
graph surrogate for "x in the open interior, y in the open exterior".
The boundary data carried by a validated set:

* inner_boundary: vertices of Omega with a neighbor outside
* outer_boundary: vertices outside with a neighbor in Omega
* cut_edges: the crossing edges, oriented (inside, outside)

Removing the inner boundary disconnects x from y, and swapping Omega for
its complement swaps the roles of the poles and of the two boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import errors
from .graph import MetricMeasureGraph


@dataclass(frozen=True)
class SeparatingSet:
    x: str
    y: str
    omega: frozenset[str]
    inner_boundary: frozenset[str]
    outer_boundary: frozenset[str]
    cut_edges: tuple  # ((inside_id, outside_id, length), ...) sorted

    @property
    def boundary(self) -> frozenset[str]:
        """Two-sided vertex boundary, inner union outer."""
        return self.inner_boundary | self.outer_boundary

    def complement(self, g: MetricMeasureGraph) -> "SeparatingSet":
        """The same partition viewed from y; boundaries swap sides."""
        comp = frozenset(v for v in g.ids if v not in self.omega)
        return validate_separating_set(g, comp, self.y, self.x)


def _boundaries(g: MetricMeasureGraph, inside: np.ndarray):
    eu, ev = g.edge_u, g.edge_v
    cross = inside[eu] != inside[ev]
    inner, outer, cut = set(), set(), []
    for u, v, ln in zip(eu[cross], ev[cross], g.edge_len[cross]):
        u, v = int(u), int(v)
        if inside[u]:
            inner.add(u)
            outer.add(v)
            cut.append((g.ids[u], g.ids[v], float(ln)))
        else:
            inner.add(v)
            outer.add(u)
            cut.append((g.ids[v], g.ids[u], float(ln)))
    cut.sort()
    return inner, outer, cut


def validate_separating_set(g: MetricMeasureGraph, omega, x: str, y: str,
                            interior_hops: int = 1) -> SeparatingSet:
    """Check the one-hop interior conditions and build the boundary data.

    ``interior_hops`` widens the interior margin: the hop ball of this
    radius around x must sit in Omega and the one around y outside it.
    """
    if x == y:
        raise errors.SamePoles(f"poles must differ, got {x!r} twice")
    if interior_hops < 1:
        raise errors.BadParam("interior_hops must be >= 1")
    xi, yi = g.vertex(x), g.vertex(y)
    omega_idx = {g.vertex(v) for v in omega}

    inside = np.zeros(g.n, dtype=bool)
    for i in omega_idx:
        inside[i] = True
    if not inside[xi]:
        raise errors.NotSeparating(f"omega does not contain the pole {x!r}")
    if inside[yi]:
        raise errors.NotSeparating(f"omega contains the opposite pole {y!r}")
    if len(omega_idx) == g.n:
        raise errors.NotSeparating("omega is the whole space")

    for v in g.hop_ball(xi, interior_hops):
        if not inside[v]:
            raise errors.PoleNotInterior(
                f"{g.ids[v]!r} is within {interior_hops} hop(s) of {x!r} but outside omega"
            )
    for v in g.hop_ball(yi, interior_hops):
        if inside[v]:
            raise errors.PoleNotInterior(
                f"{g.ids[v]!r} is within {interior_hops} hop(s) of {y!r} but inside omega"
            )

    inner, outer, cut = _boundaries(g, inside)
    if not cut:
        raise errors.NotSeparating("omega has no cut edges")
    return SeparatingSet(
        x=x, y=y,
        omega=frozenset(g.ids[i] for i in omega_idx),
        inner_boundary=frozenset(g.ids[i] for i in inner),
        outer_boundary=frozenset(g.ids[i] for i in outer),
        cut_edges=tuple(cut),
    )


def sublevel_set(g: MetricMeasureGraph, u, t: float, x: str, y: str) -> SeparatingSet:
    """Separating set carved from the superlevel set {u >= t}.

    Whichever pole lands inside becomes the inner pole of the returned
    set, so callers can feed level sets without tracking orientation.
    """
    vals = g.values_array(u)
    xi, yi = g.vertex(x), g.vertex(y)
    ux, uy = float(vals[xi]), float(vals[yi])
    upper = {g.ids[i] for i in range(g.n) if vals[i] >= t}
    if (ux >= t) == (uy >= t):
        raise errors.NotSeparating(
            f"t={t} does not separate u(x)={ux} from u(y)={uy}"
        )
    if ux >= t:
        inner_pole, outer_pole, omega = x, y, upper
    else:
        inner_pole, outer_pole, omega = y, x, upper
    try:
        return validate_separating_set(g, omega, inner_pole, outer_pole)
    except errors.PoleNotInterior as exc:
        raise errors.LevelTooClose(
            f"level t={t} cuts inside a pole's one-hop ball: {exc}"
        ) from None


def enumerate_separating_sets(g: MetricMeasureGraph, x: str, y: str,
                              max_vertices: int = 22):
    """Yield every valid separating set exactly once (oracle-sized graphs).

    Valid sets are exactly N[x] union T for T over subsets of the free
    vertices (those outside both closed one-hop balls); enumeration is in
    bitmask order over the free vertices sorted by construction index, so
    the sequence is deterministic. Raises TooLarge above ``max_vertices``.
    """
    if g.n > max_vertices:
        raise errors.TooLarge(
            f"{g.n} vertices exceeds the enumeration cap {max_vertices}"
        )
    if x == y:
        raise errors.SamePoles(f"poles must differ, got {x!r} twice")
    xi, yi = g.vertex(x), g.vertex(y)
    ball_x = g.hop_ball(xi, 1)
    ball_y = g.hop_ball(yi, 1)
    if ball_x & ball_y:
        return  # interior conditions clash, no valid set exists
    free = sorted(set(range(g.n)) - ball_x - ball_y)
    base = frozenset(g.ids[i] for i in ball_x)
    for mask in range(1 << len(free)):
        omega = set(base)
        for b, i in enumerate(free):
            if mask >> b & 1:
                omega.add(g.ids[i])
        try:
            yield validate_separating_set(g, omega, x, y)
        except errors.NotSeparating:
            # Only possible on degenerate shapes (no cut edges); skip.
            continue
