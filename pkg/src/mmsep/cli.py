"""Command-line driver for reproducible experiments.

Subcommands: gen, energies, mincut, pi-scan, riesz-dump, selftest. Every
output file starts with '#' provenance lines (tool version, config hash,
seed, kernel mode) and re-running a command with identical arguments
produces byte-identical files: no timestamps, 12-significant-digit floats.

Exit codes: 0 ok, 1 selftest failure, 2 rejected input, 3 well-formed but
unanswerable computation, 4 IO.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import logging
import math
import os
import sys

import numpy as np

from . import __version__, errors
from ._kernels import kernel_mode
from .energies import (brute_force_cut_infimum, energy_report, min_cut_energy,
                       modulus_connecting, capacity, codim_hausdorff,
                       first_shell_minkowski, perimeter)
from .graph import (_default_centers, _default_radii, ahlfors_exponent,
                    build_graph, doubling_constant, load_graph_json,
                    save_graph_json)
from .poincare import (coarea_check, local_poincare_check, pi_scan,
                       ptpi_ratio, test_function)
from .riesz import riesz_potential
from .separating import validate_separating_set
from .spaces import (gen_carpet, gen_dumbbell, gen_grid, gen_path,
                     ingest_point_cloud)

log = logging.getLogger("mmsep")

REPORT_COLUMNS = ("x", "y", "L", "p", "bp", "bp_r", "bc", "bmc", "bmc0",
                  "bh_f", "bh_g", "mod1", "bam_local", "witness_size")
SCAN_COLUMNS = ("pair_id", "x", "y", "L", "c_cut", "c_fn",
                "bound_2_over_ccut", "pass")
DUMP_COLUMNS = ("vertex_id", "d_x", "d_y", "R", "in_ball", "riesz_m")
BALL_COLUMNS = ("center", "r", "ball_m", "fit_s", "fit_c")


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "1" if x else "0"
    if isinstance(x, float):
        return "{:.12g}".format(x)
    return str(x)


def _config_hash(args: argparse.Namespace) -> str:
    cfg = {k: v for k, v in sorted(vars(args).items()) if k != "func"}
    blob = json.dumps(cfg, sort_keys=True, default=str)
    return hashlib.sha256(blob.encode()).hexdigest()[:12]


def _header(args: argparse.Namespace, seed=None) -> list[str]:
    return [
        f"# mmsep {__version__}",
        f"# config {_config_hash(args)}",
        f"# seed {'-' if seed is None else seed}",
        f"# kernel {kernel_mode()}",
    ]


def _write_csv(path, header_lines, columns, rows) -> None:
    buf = io.StringIO()
    for line in header_lines:
        buf.write(line + "\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([_fmt(v) for v in row])
    with open(path, "w") as fh:
        fh.write(buf.getvalue())
    log.info("wrote %s (%d rows)", path, len(rows))


# -- gen ----------------------------------------------------------------------

def _cmd_gen(args) -> int:
    kind = args.kind
    if kind == "path":
        _require(args, "n")
        g = gen_path(args.n)
    elif kind == "grid":
        _require(args, "n")
        g = gen_grid(args.n, dim=args.dim, alpha=args.alpha)
    elif kind == "carpet":
        _require(args, "level")
        g = gen_carpet(args.level)
    elif kind == "dumbbell":
        _require(args, "n", "neck_len")
        g = gen_dumbbell(args.n, args.neck_len, neck_width=args.neck_width)
    else:
        _require(args, "count", "epsilon")
        rng = np.random.default_rng(args.seed)
        pts = rng.uniform(0.0, 1.0, size=(args.count, 2))
        g = ingest_point_cloud([tuple(p) for p in pts], args.epsilon,
                               measure_rule=args.measure_rule)
    save_graph_json(g, args.out)
    log.info("generated %s with %d vertices -> %s", kind, g.n, args.out)
    if args.ball_stats:
        radii = _default_radii(g)
        centers = _default_centers(g)
        s, c_ar = ahlfors_exponent(g)
        rows = []
        for ci in centers:
            f = g.distance_field(ci)
            for r in radii:
                bm = f.ball_measure(r)
                if bm > 0:
                    rows.append((g.ids[ci], r, bm, s, c_ar))
        _write_csv(args.ball_stats, _header(args, args.seed), BALL_COLUMNS, rows)
    return 0


def _require(args, *names) -> None:
    for name in names:
        if getattr(args, name) is None:
            raise errors.BadParam(
                f"--{name.replace('_', '-')} is required for kind={args.kind}"
            )


# -- energies -----------------------------------------------------------------

def _load_omega(path) -> set[str]:
    with open(path) as fh:
        data = json.load(fh)
    if isinstance(data, dict):
        data = data.get("omega")
    if not isinstance(data, list):
        raise errors.BadParam(f"{path}: expected a JSON list of vertex ids "
                              "or an object with an 'omega' list")
    return {str(v) for v in data}


def _cmd_energies(args) -> int:
    g = load_graph_json(args.graph)
    omega = _load_omega(args.omega)
    rep = energy_report(g, args.x, args.y, omega, L=args.L, p=args.p)
    row = tuple(getattr(rep, col) for col in REPORT_COLUMNS)
    _write_csv(args.out, _header(args), REPORT_COLUMNS, [row])
    return 0


# -- mincut -------------------------------------------------------------------

def _cmd_mincut(args) -> int:
    if args.L < 1 or not math.isfinite(args.L):
        raise errors.BadParam(f"truncation factor L must be >= 1, got {args.L}")
    g = load_graph_json(args.graph)
    wit = min_cut_energy(g, args.x, args.y, L=args.L)
    print(_fmt(wit.value))
    if args.out:
        payload = {
            "x": wit.x, "y": wit.y, "L": args.L, "value": wit.value,
            "omega": sorted(wit.omega), "boundary": sorted(wit.boundary),
            "vertex_energy": {k: wit.vertex_energy[k]
                              for k in sorted(wit.vertex_energy)},
        }
        with open(args.out, "w") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return 0


# -- pi-scan ------------------------------------------------------------------

def _hop_distances(g, src: int) -> dict[int, int]:
    from collections import deque
    dist = {src: 0}
    q = deque([src])
    while q:
        v = q.popleft()
        for w in g.neighbors(v):
            w = int(w)
            if w not in dist:
                dist[w] = dist[v] + 1
                q.append(w)
    return dist


def _diameter_pair(g) -> tuple[str, str]:
    d0 = g.distance_field(0).dist
    a = int(np.argmax(d0))
    da = g.distance_field(a).dist
    b = int(np.argmax(da))
    return g.ids[a], g.ids[b]


def _resolve_poles(g, spec: str, seed: int) -> list[tuple[str, str]]:
    """diameter | random:K | explicit X:Y;X2:Y2 (ids may contain commas)."""
    if spec == "diameter":
        return [_diameter_pair(g)]
    if spec.startswith("random:"):
        k = int(spec.split(":", 1)[1])
        if k < 1:
            raise errors.BadParam(f"need at least 1 random pair, got {k}")
        rng = np.random.default_rng(seed)
        pairs = []
        chosen = set()
        # Pole pairs closer than 3 hops have no valid separating set.
        for _ in range(500 * k):
            if len(pairs) == k:
                break
            xi, yi = (int(v) for v in rng.choice(g.n, size=2, replace=False))
            key = (min(xi, yi), max(xi, yi))
            if key in chosen:
                continue
            if _hop_distances(g, xi).get(yi, 0) < 3:
                continue
            chosen.add(key)
            pairs.append((g.ids[xi], g.ids[yi]))
        if len(pairs) < k:
            raise errors.BadParam(
                f"could only place {len(pairs)} of {k} pole pairs at hop "
                "distance >= 3"
            )
        return pairs
    pairs = []
    for chunk in spec.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.split(":")
        if len(parts) != 2:
            raise errors.BadParam(f"bad pole pair {chunk!r}, expected X:Y")
        pairs.append((parts[0], parts[1]))
    if not pairs:
        raise errors.BadParam("empty pole list")
    return pairs


def _cmd_pi_scan(args) -> int:
    g = load_graph_json(args.graph)
    pairs = _resolve_poles(g, args.poles, args.seed)
    log.info("scanning %d pole pairs on %d vertices", len(pairs), g.n)
    report = pi_scan(g, pairs, L=args.L, seed=args.seed, threads=args.threads)
    rows = [(r.pair_id, r.x, r.y, r.L, r.c_cut, r.c_fn, r.bound_2_over_ccut,
             r.passed) for r in report.rows]
    _write_csv(args.out, _header(args, args.seed), SCAN_COLUMNS, rows)
    summary_path = args.summary or args.out + ".summary.json"
    summary = {"min_c_cut": report.min_c_cut, "max_c_fn": report.max_c_fn,
               "n_pairs": report.n_pairs, "seed": report.seed}
    with open(summary_path, "w") as fh:
        json.dump(summary, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return 0


# -- riesz-dump ---------------------------------------------------------------

def _cmd_riesz_dump(args) -> int:
    g = load_graph_json(args.graph)
    f = riesz_potential(g, args.x, args.y, args.L)
    rows = [(g.ids[v], float(f.d_x[v]), float(f.d_y[v]), float(f.R[v]),
             bool(f.in_ball[v]), float(f.riesz_m[v])) for v in range(g.n)]
    _write_csv(args.out, _header(args), DUMP_COLUMNS, rows)
    return 0


# -- selftest -----------------------------------------------------------------

def _cmd_selftest(args) -> int:
    del args
    try:
        _selftest_body()
    except AssertionError as exc:
        print(f"selftest FAILED: {exc}", file=sys.stderr)
        return 1
    print("selftest ok")
    return 0


def _selftest_body() -> None:
    def ok(name):
        print(f"ok: {name}")

    p5 = gen_path(5)
    f = riesz_potential(p5, "v0", "v4", 1.0)
    assert np.allclose(f.R, [0.0, 2.5, 2.0, 2.5, 0.0]), f.R
    assert f.total_mass == 7.0, f.total_mass
    ok("riesz field on the 5-path")

    wit = min_cut_energy(p5, "v0", "v4", L=1.0)
    assert wit.value == 2.0 and wit.omega == frozenset({"v0", "v1", "v2"}), wit
    mod, _ = modulus_connecting(p5, "v0", "v4", f)
    assert mod == wit.value, (mod, wit.value)
    bv, _ = brute_force_cut_infimum(p5, "v0", "v4", field=f)
    assert bv == wit.value, (bv, wit.value)
    ok("min cut, modulus duality, brute force")

    rep = energy_report(p5, "v0", "v4", {"v0", "v1", "v2"}, L=1.0, p=1.0)
    got = (rep.bp, rep.bp_r, rep.bc, rep.bmc, rep.mod1)
    assert got == (2.25, 2.25, 2.5, 2.5, 2.0), got
    assert rep.bh_f == 4.5 and rep.bh_g == 4.5 and rep.bmc0 == 2.5, rep
    ok("energy report on the canonical separator")

    g3 = gen_grid(3, 2)
    w3 = min_cut_energy(g3, "0,0", "2,2", L=2.0)
    b3, _ = brute_force_cut_infimum(g3, "0,0", "2,2", L=2.0)
    assert abs(w3.value - b3) <= 1e-12, (w3.value, b3)
    ok("3x3 grid cut equals enumeration")

    u = test_function(p5, np.arange(5.0), "linear")
    assert abs(ptpi_ratio(p5, u, "v0", "v4", field=f) - 4.0 / 7.0) < 1e-15
    assert abs(local_poincare_check(p5, "v2", 1.5, 1.0, u) - 4.0 / 9.0) < 1e-15
    cr = coarea_check(p5, u, kind="BV")
    assert (cr.lhs, cr.rhs, cr.passed) == (4.0, 5.0, True), cr
    ok("pointwise, local, and coarea checks")

    assert gen_carpet(1).n == 8 and gen_carpet(2).n == 64
    assert doubling_constant(p5) == 3.0
    ok("generators and sampled constants")


# -- wiring -------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="mmsep", description=__doc__)
    top.add_argument("--version", action="version", version=__version__)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a benchmark space")
    p.add_argument("--kind", required=True,
                   choices=["path", "grid", "carpet", "dumbbell", "cloud"])
    p.add_argument("--n", type=int)
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--alpha", type=float, default=0.0)
    p.add_argument("--level", type=int)
    p.add_argument("--neck-len", dest="neck_len", type=int)
    p.add_argument("--neck-width", dest="neck_width", type=int, default=1)
    p.add_argument("--count", type=int)
    p.add_argument("--epsilon", type=float)
    p.add_argument("--measure-rule", dest="measure_rule", default="unit",
                   choices=["unit", "density"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.add_argument("--ball-stats", dest="ball_stats",
                   help="also write a center,r,ball_m CSV for growth fits")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("energies", help="every boundary energy of one omega")
    p.add_argument("--graph", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--omega", required=True, help="JSON file with vertex ids")
    p.add_argument("--L", type=float, default=2.0)
    p.add_argument("--p", type=float, default=1.0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_energies)

    p = sub.add_parser("mincut", help="optimal separating set and its energy")
    p.add_argument("--graph", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--L", type=float, default=2.0)
    p.add_argument("--out", help="witness JSON path")
    p.set_defaults(func=_cmd_mincut)

    p = sub.add_parser("pi-scan", help="duality scan over pole pairs")
    p.add_argument("--graph", required=True)
    p.add_argument("--poles", default="diameter",
                   help='diameter | random:K | "X:Y;X2:Y2"')
    p.add_argument("--L", type=float, default=2.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int)
    p.add_argument("--out", required=True)
    p.add_argument("--summary", help="summary JSON path "
                   "(default: <out>.summary.json)")
    p.set_defaults(func=_cmd_pi_scan)

    p = sub.add_parser("riesz-dump", help="per-vertex potential table")
    p.add_argument("--graph", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--L", type=float, default=2.0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_riesz_dump)

    p = sub.add_parser("selftest", help="embedded oracle suite")
    p.set_defaults(func=_cmd_selftest)
    return top


def _setup_logging() -> None:
    level_name = os.environ.get("MMS_LOG", "").upper()
    level = getattr(logging, level_name, None) if level_name else logging.WARNING
    if not isinstance(level, int):
        level = logging.INFO
    logging.basicConfig(stream=sys.stderr, level=level,
                        format="%(levelname)s %(name)s: %(message)s")


def main(argv=None) -> int:
    _setup_logging()
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except errors.MmsepError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except json.JSONDecodeError as exc:
        print(f"io error: bad JSON: {exc}", file=sys.stderr)
        return 4
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
