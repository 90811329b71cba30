"""Numeric pre-images and magnification sums."""

import random
from fractions import Fraction as F

import pytest

from caustica import catalog
from caustica.errors import NearCausticError
from caustica.solver import magnification_sum, preimages, run_batch, trace_crosscheck


def test_fold_preimages_explicit():
    # A2 at s2 = 1: two pre-images with opposite magnifications
    d = catalog.get("A2")
    report = magnification_sum(d, (), (0.5, 1.0))
    assert len(report.preimages) == 2
    assert report.n_real == 2
    mags = sorted(p.mag.real for p in report.preimages)
    assert mags[0] == pytest.approx(-mags[1], rel=1e-12)


def test_sum_includes_complex_preimages():
    # A3 with one real root: the two complex magnifications are what cancel it
    d = catalog.get("A3")
    report = magnification_sum(d, (), (1.0, 0.5))
    assert report.n_real == 1
    assert len(report.preimages) == 3
    assert report.rel_residual < 1e-12


def test_preimage_points_satisfy_map():
    d = catalog.get("D4minus")
    pts, _ = preimages(d, (-2.0,), (1.0, 0.5))
    f1, f2 = d.induced_map((-2.0,))
    for p in pts:
        x, y = p.point
        assert abs(f1(x, y) - 1.0) < 1e-8
        assert abs(f2(x, y) - 0.5) < 1e-8


def test_on_caustic_rejected():
    # A2 fold caustic is s2 = 0: the two roots collide
    d = catalog.get("A2")
    with pytest.raises(NearCausticError):
        magnification_sum(d, (), (0.3, 1e-16))


def test_run_batch_is_deterministic():
    d = catalog.get("A4")
    b1 = run_batch(d, 10, seed=99)
    b2 = run_batch(d, 10, seed=99)
    assert [r.s for r in b1.reports] == [r.s for r in b2.reports]
    assert [r.total for r in b1.reports] == [r.total for r in b2.reports]


def test_run_batch_counts_rejections():
    d = catalog.get("A2")
    b = run_batch(d, 25, seed=7)
    assert len(b.reports) == 25
    assert b.rejected_caustic >= 0 and b.rejected_numeric >= 0


def test_trace_crosscheck_exact_zero():
    d = catalog.get("D5")
    rng = random.Random(13)
    c, s = catalog.draw_params(d, rng)
    report, exact = trace_crosscheck(d, c, s)
    assert exact == 0
    assert report.rel_residual < 1e-9


def test_magnification_matches_rational_function():
    # 1/det Jac at the point equals M(t) at the retained coordinate
    d = catalog.get("A5")
    c = (0.5, -1.0)
    s = (0.3, 0.7)
    pts, _ = preimages(d, c, s)
    M = d.magnification(c, s)
    for p in pts:
        assert abs(p.mag - M(p.t)) < 1e-9 * max(1.0, abs(p.mag))
