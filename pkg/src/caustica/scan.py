"""Scanning the source plane for image-count regions and caustic curves.

The caustic of f_c partitions the (s1, s2) plane into open regions on which
the number of real pre-images is constant.  The scanner counts real roots
of the elimination polynomial on a grid of cell centers, locates caustic
crossings between cells whose counts differ by bisection, and can hunt for
the region realizing the maximal image count by coarse-to-fine refinement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .catalog import SingularityDef
from .config import DEFAULT, Tolerances
from .errors import (
    DegenerateLeadingCoefficientError,
    GuardViolationError,
    InconsistentScanError,
    NonConvergenceError,
)
from .poly import roots


@dataclass(frozen=True)
class ScanGrid:
    s1_min: float
    s1_max: float
    s2_min: float
    s2_max: float
    n1: int
    n2: int

    def center(self, i: int, j: int):
        """Center of cell (i, j); i indexes s1, j indexes s2."""
        h1 = (self.s1_max - self.s1_min) / self.n1
        h2 = (self.s2_max - self.s2_min) / self.n2
        return (self.s1_min + (i + 0.5) * h1, self.s2_min + (j + 0.5) * h2)


@dataclass
class ScanResult:
    grid: ScanGrid
    counts: list  # counts[i][j] = number of real pre-images, -1 = unusable
    disc_signs: list  # sign of the discriminant at the cell center
    caustic_points: list = field(default_factory=list)  # located boundary pts

    def max_count(self):
        best, where = -1, None
        for i in range(self.grid.n1):
            for j in range(self.grid.n2):
                if self.counts[i][j] > best:
                    best, where = self.counts[i][j], self.grid.center(i, j)
        return best, where


def _probe(sdef: SingularityDef, c, s, tol: Tolerances):
    """(n_real, disc_sign) at one source point; (-1, 0) if unusable.

    The discriminant is evaluated from the computed roots as
    a_n^(2n-2) * prod (r_i - r_j)^2, which is cheap and real up to noise.
    """
    try:
        phi = sdef.build_phi(c, s)
        rs = roots(phi, residual_tol=tol.root_residual, leading_tol=tol.leading)
    except (GuardViolationError, NonConvergenceError,
            DegenerateLeadingCoefficientError):
        return -1, 0
    n_real = sum(1 for r in rs.roots if abs(r.imag) <= tol.reality)
    n = phi.degree
    disc = phi.leading ** (2 * n - 2)
    for a in range(n):
        for b in range(a + 1, n):
            disc *= (rs.roots[a] - rs.roots[b]) ** 2
    mag = abs(disc)
    if mag == 0 or abs(disc.real) < 1e-9 * mag:
        sign = 0
    else:
        sign = 1 if disc.real > 0 else -1
    return n_real, sign


def scan(sdef: SingularityDef, c, grid: ScanGrid,
         tol: Tolerances = DEFAULT) -> ScanResult:
    """Count real pre-images at every cell center of the grid."""
    cf = tuple(float(v) for v in c)
    counts = [[0] * grid.n2 for _ in range(grid.n1)]
    signs = [[0] * grid.n2 for _ in range(grid.n1)]
    for i in range(grid.n1):
        for j in range(grid.n2):
            counts[i][j], signs[i][j] = _probe(sdef, cf, grid.center(i, j), tol)
    return ScanResult(grid, counts, signs)


def _bisect_boundary(sdef, c, s_lo, s_hi, n_lo, tol):
    """Shrink [s_lo, s_hi] (a segment with different real-root counts at its
    ends) around the caustic crossing; returns the midpoint."""
    lo = s_lo
    hi = s_hi
    while math.dist(lo, hi) > tol.caustic_bracket:
        mid = ((lo[0] + hi[0]) / 2, (lo[1] + hi[1]) / 2)
        n_mid, _ = _probe(sdef, c, mid, tol)
        if n_mid == n_lo:
            lo = mid
        else:
            hi = mid
    return ((lo[0] + hi[0]) / 2, (lo[1] + hi[1]) / 2)


def locate_caustic(sdef: SingularityDef, c, result: ScanResult,
                   tol: Tolerances = DEFAULT):
    """Bisect every edge between cells with different counts; the located
    points are appended to result.caustic_points and returned."""
    cf = tuple(float(v) for v in c)
    g = result.grid
    pts = []
    for i in range(g.n1):
        for j in range(g.n2):
            a = result.counts[i][j]
            if a < 0:
                continue
            for di, dj in ((1, 0), (0, 1)):
                ii, jj = i + di, j + dj
                if ii >= g.n1 or jj >= g.n2:
                    continue
                b = result.counts[ii][jj]
                if b < 0 or b == a:
                    continue
                pts.append(_bisect_boundary(sdef, cf, g.center(i, j),
                                            g.center(ii, jj), a, tol))
    result.caustic_points.extend(pts)
    return pts


def consistency_check(sdef: SingularityDef, c, result: ScanResult,
                      tol: Tolerances = DEFAULT):
    """Adjacent cells with different real-root counts must be separated by a
    caustic crossing (count changes only across the caustic); verify by
    probing the located boundary for near-zero discriminant."""
    cf = tuple(float(v) for v in c)
    g = result.grid
    for i in range(g.n1):
        for j in range(g.n2):
            a = result.counts[i][j]
            if a < 0:
                continue
            for di, dj in ((1, 0), (0, 1)):
                ii, jj = i + di, j + dj
                if ii >= g.n1 or jj >= g.n2 or result.counts[ii][jj] < 0:
                    continue
                b = result.counts[ii][jj]
                if b == a:
                    continue
                if (b - a) % 2 != 0:
                    raise InconsistentScanError(
                        f"{sdef.id.ade_label}: real-root count parity changed "
                        f"between cells ({i},{j}) and ({ii},{jj})"
                    )
    return True


@dataclass(frozen=True)
class MaxRegionResult:
    found: bool
    n_real: int
    s: tuple  # witness point, or the best seen
    levels: int


def find_max_region(sdef: SingularityDef, c, s1_range, s2_range,
                    target: int | None = None, levels: int = 5,
                    base: int = 16, tol: Tolerances = DEFAULT) -> MaxRegionResult:
    """Hunt for a source point with the maximal number of real pre-images.

    Coarse-to-fine: scan a base x base grid, then re-scan a window around
    the best cell at each level.  Stops early once the target (default: the
    entry's n_images) is hit; found=False is a result, not an error.
    """
    cf = tuple(float(v) for v in c)
    if target is None:
        target = sdef.id.n_images
    lo1, hi1 = s1_range
    lo2, hi2 = s2_range
    best_n, best_s = -1, None
    for level in range(levels):
        grid = ScanGrid(lo1, hi1, lo2, hi2, base, base)
        result = scan(sdef, cf, grid, tol)
        n, s = result.max_count()
        if n > best_n:
            best_n, best_s = n, s
        if best_n >= target:
            return MaxRegionResult(True, best_n, best_s, level + 1)
        # zoom into a 3-cell window around the best cell of this level
        h1 = (hi1 - lo1) / base
        h2 = (hi2 - lo2) / base
        lo1, hi1 = s[0] - 1.5 * h1, s[0] + 1.5 * h1
        lo2, hi2 = s[1] - 1.5 * h2, s[1] + 1.5 * h2
    return MaxRegionResult(best_n >= target, best_n, best_s, levels)


def write_csv(result: ScanResult, path):
    """Cell-center table: s1, s2, n_real, disc_sign (12 significant digits)."""
    with open(path, "w") as fh:
        fh.write("s1,s2,n_real,disc_sign\n")
        g = result.grid
        for i in range(g.n1):
            for j in range(g.n2):
                s1, s2 = g.center(i, j)
                fh.write(f"{s1:.12g},{s2:.12g},{result.counts[i][j]},"
                         f"{result.disc_signs[i][j]}\n")


def write_caustic_csv(result: ScanResult, path):
    with open(path, "w") as fh:
        fh.write("s1,s2\n")
        for s1, s2 in result.caustic_points:
            fh.write(f"{s1:.12g},{s2:.12g}\n")
