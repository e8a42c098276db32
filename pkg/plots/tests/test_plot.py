"""Renders every figure kind from tables the mmsep CLI actually produced."""

import json

import pytest

import plot
from mmsep.cli import main as mmsep

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


@pytest.fixture(scope="session")
def tables(tmp_path_factory):
    """Pipeline outputs: scan, decay, ball-stats, and report CSVs."""
    d = tmp_path_factory.mktemp("tables")

    grid = d / "grid8.json"
    assert mmsep(["gen", "--kind", "grid", "--n", "8", "--out", str(grid),
                  "--ball-stats", str(d / "balls.csv")]) == 0
    assert mmsep(["pi-scan", "--graph", str(grid), "--poles",
                  "0,0:7,7;0,7:7,0;4,0:4,7", "--out", str(d / "scan.csv"),
                  "--summary", str(d / "scan.summary.json")]) == 0

    # Decay table: one cut constant per refinement level, straight from the
    # per-level scan summaries.
    lines = ["# assembled from per-level scan summaries", "level,min_c_cut"]
    for level in (1, 2, 3):
        g = d / f"carpet{level}.json"
        side = 3 ** level
        assert mmsep(["gen", "--kind", "carpet", "--level", str(level),
                      "--out", str(g)]) == 0
        summary = d / f"carpet{level}.summary.json"
        assert mmsep(["pi-scan", "--graph", str(g), "--poles",
                      f"0,0:{side-1},{side-1};0,{side-1}:{side-1},0",
                      "--out", str(d / f"carpet{level}.csv"),
                      "--summary", str(summary)]) == 0
        lines.append(f"{level},{json.loads(summary.read_text())['min_c_cut']}")
    (d / "decay.csv").write_text("\n".join(lines) + "\n")

    path5 = d / "path5.json"
    omega = d / "omega.json"
    omega.write_text('["v0", "v1", "v2"]')
    assert mmsep(["gen", "--kind", "path", "--n", "5", "--out",
                  str(path5)]) == 0
    assert mmsep(["energies", "--graph", str(path5), "--x", "v0", "--y", "v4",
                  "--omega", str(omega), "--L", "1",
                  "--out", str(d / "report.csv")]) == 0

    return {"heatmap": d / "scan.csv", "decay": d / "decay.csv",
            "loglog": d / "balls.csv", "chain": d / "report.csv"}


@pytest.mark.parametrize("kind", ["heatmap", "decay", "loglog", "chain"])
def test_renders_every_kind(tables, tmp_path, kind):
    out = tmp_path / f"{kind}.png"
    rc = plot.main(["--kind", kind, "--in", str(tables[kind]),
                    "--out", str(out)])
    assert rc == 0
    blob = out.read_bytes()
    assert blob.startswith(PNG_MAGIC) and len(blob) > 1000


def test_vector_output(tables, tmp_path):
    out = tmp_path / "decay.svg"
    rc = plot.main(["--kind", "decay", "--in", str(tables["decay"]),
                    "--out", str(out)])
    assert rc == 0
    assert b"<svg" in out.read_bytes()[:1000]


def test_truncated_csv_is_detected(tables, tmp_path):
    maimed = tmp_path / "truncated.csv"
    text = tables["heatmap"].read_text()
    maimed.write_text(text[: text.rindex(",") - 2])
    rc = plot.main(["--kind", "heatmap", "--in", str(maimed),
                    "--out", str(tmp_path / "x.png")])
    assert rc == 2
    assert not (tmp_path / "x.png").exists()


def test_wrong_kind_for_table(tables, tmp_path):
    rc = plot.main(["--kind", "decay", "--in", str(tables["heatmap"]),
                    "--out", str(tmp_path / "x.png")])
    assert rc == 2


def test_empty_csv(tmp_path):
    empty = tmp_path / "empty.csv"
    empty.write_text("")
    rc = plot.main(["--kind", "decay", "--in", str(empty),
                    "--out", str(tmp_path / "x.png")])
    assert rc == 2
    headers_only = tmp_path / "headers.csv"
    headers_only.write_text("level,min_c_cut\n")
    rc = plot.main(["--kind", "decay", "--in", str(headers_only),
                    "--out", str(tmp_path / "x.png")])
    assert rc == 2


def test_non_numeric_cell(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("level,min_c_cut\n1,huh\n")
    rc = plot.main(["--kind", "decay", "--in", str(bad),
                    "--out", str(tmp_path / "x.png")])
    assert rc == 2


def test_missing_file_is_io_error(tmp_path):
    rc = plot.main(["--kind", "decay", "--in", str(tmp_path / "nope.csv"),
                    "--out", str(tmp_path / "x.png")])
    assert rc == 4


def test_schema_checks_names_not_positions(tables, tmp_path):
    # Reordered columns must still render: headers carry the meaning.
    rows = [ln for ln in tables["decay"].read_text().splitlines()
            if not ln.startswith("#")]
    header = rows[0].split(",")
    flipped = tmp_path / "flipped.csv"
    flipped.write_text("\n".join(
        ",".join(reversed(ln.split(","))) for ln in rows) + "\n")
    assert header == ["level", "min_c_cut"]
    rc = plot.main(["--kind", "decay", "--in", str(flipped),
                    "--out", str(tmp_path / "flipped.png")])
    assert rc == 0
