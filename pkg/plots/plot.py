#!/usr/bin/env python3
"""Figure rendering for tables produced by the mmsep command line.

Strictly a read-only consumer: columns are located by header name, rows are
drawn as-is, and nothing numeric is recomputed here. Provenance lines
starting with '#' are skipped.

Kinds:
  heatmap  per-pair scan table -> color matrix of the scan metrics
  decay    (level, min_c_cut) table -> decay curve across levels
  loglog   (center, r, ball_m, ...) table -> ball growth on log-log axes
  chain    energy report rows -> grouped bars of the boundary energies

Usage: plot.py --kind <heatmap|decay|loglog|chain> --in <csv> --out <img>
Exit codes: 0 ok, 2 schema mismatch, 4 IO.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


class SchemaMismatch(Exception):
    """The CSV does not carry the columns or row shape the kind needs."""


REQUIRED = {
    "heatmap": ("pair_id", "x", "y", "c_cut", "c_fn", "bound_2_over_ccut"),
    "decay": ("level", "min_c_cut"),
    "loglog": ("center", "r", "ball_m", "fit_s"),
    "chain": ("x", "y", "bp", "bp_r", "bc", "bmc", "mod1"),
}


def read_table(path: str, kind: str):
    """Header-validated rows as list[dict[str, str]]."""
    with open(path, newline="") as fh:
        reader = csv.reader(line for line in fh if not line.startswith("#"))
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaMismatch(f"{path}: no header row") from None
        missing = [c for c in REQUIRED[kind] if c not in header]
        if missing:
            raise SchemaMismatch(
                f"{path}: kind {kind!r} needs columns {missing}, "
                f"header has {header}"
            )
        rows = []
        for lineno, row in enumerate(reader, start=2):
            if len(row) != len(header):
                raise SchemaMismatch(
                    f"{path}:{lineno}: {len(row)} fields, header has "
                    f"{len(header)} (truncated file?)"
                )
            rows.append(dict(zip(header, row)))
    if not rows:
        raise SchemaMismatch(f"{path}: header only, no data rows")
    return rows


def column(rows, name: str) -> list[float]:
    out = []
    for row in rows:
        try:
            v = float(row[name])
        except ValueError:
            raise SchemaMismatch(
                f"column {name!r} has non-numeric value {row[name]!r}"
            ) from None
        if not math.isfinite(v):
            raise SchemaMismatch(f"column {name!r} has non-finite value {v}")
        out.append(v)
    return out


def draw_heatmap(rows, ax):
    metrics = ("c_cut", "c_fn", "bound_2_over_ccut")
    data = [column(rows, m) for m in metrics]
    # Column-normalized colors, raw values in the cells.
    shaded = []
    for col in data:
        lo, hi = min(col), max(col)
        span = hi - lo or 1.0
        shaded.append([(v - lo) / span for v in col])
    grid = list(zip(*shaded))
    ax.imshow(grid, aspect="auto", cmap="viridis")
    ax.set_xticks(range(len(metrics)), metrics)
    ax.set_yticks(range(len(rows)),
                  [f"{r['x']} → {r['y']}" for r in rows], fontsize=7)
    for i in range(len(rows)):
        for j, col in enumerate(data):
            ax.text(j, i, f"{col[i]:.3g}", ha="center", va="center",
                    fontsize=7, color="white")
    ax.set_title("scan metrics per pole pair")


def draw_decay(rows, ax):
    level = column(rows, "level")
    val = column(rows, "min_c_cut")
    ax.plot(level, val, marker="o")
    ax.set_xlabel("level")
    ax.set_ylabel("min c_cut")
    ax.set_xticks(level)
    ax.grid(True, alpha=0.3)
    ax.set_title("cut constant across refinement levels")


def draw_loglog(rows, ax):
    r = column(rows, "r")
    mass = column(rows, "ball_m")
    if min(r) <= 0 or min(mass) <= 0:
        raise SchemaMismatch("loglog needs positive r and ball_m")
    ax.scatter(r, mass, s=12, alpha=0.4, label="balls")
    # Guide line at the fitted slope, anchored at the data's log-centroid.
    s = column(rows, "fit_s")[0]
    cx = math.exp(sum(math.log(v) for v in r) / len(r))
    cy = math.exp(sum(math.log(v) for v in mass) / len(mass))
    xs = [min(r), max(r)]
    ax.plot(xs, [cy * (x / cx) ** s for x in xs], "r--",
            label=f"slope {s:.3g}")
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("r")
    ax.set_ylabel("ball mass")
    ax.legend()
    ax.set_title("volume growth")


def draw_chain(rows, ax):
    energies = ("bp", "bp_r", "bc", "bmc", "mod1")
    data = {e: column(rows, e) for e in energies}
    n = len(rows)
    width = 1.0 / (len(energies) + 1)
    for k, e in enumerate(energies):
        ax.bar([i + k * width for i in range(n)], data[e], width=width,
               label=e)
    ax.set_xticks([i + 2 * width for i in range(n)],
                  [f"{r['x']}→{r['y']}" for r in rows], fontsize=8)
    ax.set_ylabel("energy")
    ax.legend(fontsize=8)
    ax.set_title("boundary energies per configuration")


DRAW = {"heatmap": draw_heatmap, "decay": draw_decay,
        "loglog": draw_loglog, "chain": draw_chain}


def render(kind: str, csv_path: str, out_path: str, dpi: int = 130) -> None:
    rows = read_table(csv_path, kind)
    fig, ax = plt.subplots(figsize=(7.0, 4.6))
    try:
        DRAW[kind](rows, ax)
        fig.tight_layout()
        fig.savefig(out_path, dpi=dpi)
    finally:
        plt.close(fig)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--kind", required=True, choices=sorted(DRAW))
    ap.add_argument("--in", dest="csv_path", required=True, metavar="CSV")
    ap.add_argument("--out", required=True, metavar="IMG")
    ap.add_argument("--dpi", type=int, default=130)
    args = ap.parse_args(argv)
    try:
        render(args.kind, args.csv_path, args.out, dpi=args.dpi)
    except SchemaMismatch as exc:
        print(f"schema mismatch: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 4
    return 0


if __name__ == "__main__":
    sys.exit(main())
