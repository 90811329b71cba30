"""Polynomial layer: arithmetic, gcd, resultants, roots."""

import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from caustica.errors import BackendMismatchError, NonDistinctRootsError
from caustica.poly import (
    BiPoly,
    Polynomial,
    RationalFunc,
    bareiss_det,
    discriminant,
    gcd,
    interpolate,
    resultant_bivariate,
    resultant_univariate,
    roots,
    xgcd,
)

rational = st.fractions(
    min_value=-10, max_value=10, max_denominator=8
)
small_poly = st.lists(rational, min_size=0, max_size=6).map(Polynomial)


def test_degree_and_normalization():
    assert Polynomial([F(1), F(2), F(0)]).degree == 1
    assert Polynomial([]).degree == -1
    assert Polynomial([F(0), F(0)]).is_zero


def test_backend_detection():
    assert Polynomial([F(1), 2]).backend == "exact"
    assert Polynomial([1.0, 2]).backend == "complex"


def test_backend_mixing_rejected():
    p = Polynomial([F(1)])
    q = Polynomial([1.0])
    with pytest.raises(BackendMismatchError):
        p + q


def test_to_complex_round_trip_values():
    p = Polynomial([F(1, 2), F(-3)])
    pc = p.to_complex()
    assert pc.backend == "complex"
    assert pc(2.0) == p(F(2))


@given(small_poly, small_poly)
@settings(max_examples=60, deadline=None)
def test_divmod_reconstructs(p, q):
    if q.is_zero:
        return
    quo, rem = divmod(p, q)
    assert quo * q + rem == p
    assert rem.degree < q.degree


@given(small_poly, small_poly)
@settings(max_examples=60, deadline=None)
def test_gcd_divides_both(p, q):
    if p.is_zero and q.is_zero:
        with pytest.raises(ValueError):
            gcd(p, q)
        return
    g = gcd(p, q)
    assert (p % g.poly).is_zero
    assert (q % g.poly).is_zero


@given(small_poly, small_poly)
@settings(max_examples=60, deadline=None)
def test_xgcd_bezout(p, q):
    if p.is_zero and q.is_zero:
        return
    g, u, v = xgcd(p, q)
    assert u * p + v * q == g


def test_interpolate_line():
    # two points determine (3 - x) / 2
    p = interpolate([(F(1), F(1)), (F(3), F(0))])
    assert p == Polynomial([F(3, 2), F(-1, 2)])


def test_interpolate_matches_evaluation():
    target = Polynomial([F(2), F(0), F(-1), F(4)])
    pts = [(F(k), target(F(k))) for k in range(4)]
    assert interpolate(pts) == target


def test_resultant_shared_root_is_zero():
    p = Polynomial([F(-2), F(1)])  # x - 2
    q = Polynomial([F(-6), F(1), F(1)])  # (x-2)(x+3)
    assert resultant_univariate(p, q) == 0


def test_discriminant_quadratic():
    # x^2 - 3x + 2: b^2 - 4ac = 1
    assert discriminant(Polynomial([F(2), F(-3), F(1)])) == 1
    # x^2 + 1: -4
    assert discriminant(Polynomial([F(1), F(0), F(1)])) == -4


def test_bareiss_matches_known_determinant():
    m = [[F(2), F(1), F(3)], [F(0), F(-1), F(4)], [F(5), F(2), F(1)]]
    # cofactor expansion by hand: 2*(-9) - 1*(-20) + 3*5 = 17
    assert bareiss_det(m, zero=F(0), one=F(1)) == 17


def test_bivariate_resultant_eliminates():
    # p = x^2 - y, q = x - y: resultant in x is y^2 - y
    p = BiPoly({(2, 0): F(1), (0, 1): F(-1)})
    q = BiPoly({(1, 0): F(1), (0, 1): F(-1)})
    r = resultant_bivariate(p, q, "x")
    assert r == Polynomial([F(0), F(-1), F(1)])


def test_bipoly_diff():
    # d/dx (x^2 y + y^3) = 2xy
    p = BiPoly({(2, 1): F(1), (0, 3): F(1)})
    assert p.diff("x") == BiPoly({(1, 1): F(2)})


def test_roots_simple_quadratic():
    rs = roots(Polynomial([2.0, -3.0, 1.0]))
    assert rs.roots[0] == pytest.approx(1.0)
    assert rs.roots[1] == pytest.approx(2.0)
    assert max(rs.residuals) < 1e-12


def test_roots_wilkinson_like_stays_within_tolerance():
    # (x-1)(x-2)...(x-8)
    p = Polynomial([1.0])
    for k in range(1, 9):
        p = p * Polynomial([-float(k), 1.0])
    rs = roots(p)
    for got, want in zip(rs.roots, range(1, 9)):
        assert got == pytest.approx(want, abs=1e-6)


def test_rational_func_in_ring():
    phi = Polynomial([F(-1), F(0), F(1)])  # x^2 - 1
    ok = RationalFunc(Polynomial([F(1)]), Polynomial([F(3), F(1)]))  # 1/(x+3)
    bad = RationalFunc(Polynomial([F(1)]), Polynomial([F(-1), F(1)]))  # 1/(x-1)
    assert ok.in_ring_of(phi)
    assert not bad.in_ring_of(phi)
