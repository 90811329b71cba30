"""Source-plane scans, caustic location, and max-region search."""

import csv

from caustica import catalog
from caustica.scan import (
    ScanGrid,
    consistency_check,
    find_max_region,
    locate_caustic,
    scan,
    write_caustic_csv,
    write_csv,
)


def test_fold_scan_splits_at_s2_zero():
    d = catalog.get("A2")
    grid = ScanGrid(-1, 1, -1, 1, 8, 8)
    res = scan(d, (), grid)
    for i in range(8):
        for j in range(8):
            s1, s2 = grid.center(i, j)
            assert res.counts[i][j] == (2 if s2 > 0 else 0)


def test_cusp_scan_counts():
    # inside the cusp (disc > 0 region ... disc = -4 s1^3 - 27 s2^2 > 0): 3 real
    d = catalog.get("A3")
    grid = ScanGrid(-2, 2, -2, 2, 10, 10)
    res = scan(d, (), grid)
    for i in range(10):
        for j in range(10):
            s1, s2 = grid.center(i, j)
            disc = -4 * s1**3 - 27 * s2**2
            want = 3 if disc > 0 else 1
            assert res.counts[i][j] == want, (s1, s2)


def test_consistency_check_passes_on_cusp():
    d = catalog.get("A3")
    res = scan(d, (), ScanGrid(-2, 2, -2, 2, 12, 12))
    assert consistency_check(d, (), res)


def test_locate_caustic_on_fold():
    d = catalog.get("A2")
    res = scan(d, (), ScanGrid(-1, 1, -1, 1, 8, 8))
    pts = locate_caustic(d, (), res)
    assert pts
    for _, s2 in pts:
        assert abs(s2) < 1e-6


def test_find_max_region_cusp():
    d = catalog.get("A3")
    r = find_max_region(d, (), (-2, 2), (-2, 2))
    assert r.found and r.n_real == 3
    # witness must actually lie inside the three-image region
    s1, s2 = r.s
    assert -4 * s1**3 - 27 * s2**2 > 0


def test_find_max_region_not_found_is_a_result():
    # A4 at positive c has no four-image region in this window
    d = catalog.get("A4")
    r = find_max_region(d, (1.0,), (-1, 1), (-1, 1), levels=2, base=8)
    assert not r.found
    assert r.n_real < 4


def test_csv_writers(tmp_path):
    d = catalog.get("A2")
    res = scan(d, (), ScanGrid(-1, 1, -1, 1, 4, 4))
    locate_caustic(d, (), res)
    p1 = tmp_path / "cells.csv"
    p2 = tmp_path / "caustic.csv"
    write_csv(res, p1)
    write_caustic_csv(res, p2)
    with open(p1) as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 16
    assert set(rows[0]) == {"s1", "s2", "n_real", "disc_sign"}
    with open(p2) as fh:
        assert fh.readline().strip() == "s1,s2"


def test_render_scan_writes_png(tmp_path):
    from caustica.figures import render_scan

    d = catalog.get("A3")
    res = scan(d, (), ScanGrid(-2, 2, -2, 2, 6, 6))
    locate_caustic(d, (), res)
    out = tmp_path / "cusp.png"
    render_scan(res, out, title="cusp")
    assert out.stat().st_size > 0
