"""Coset representatives, the coefficient recursion, and the trace formula."""

import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from caustica.coset import (
    certify_distinct_roots,
    coefficient_table,
    combine_rep,
    coset_rep_rational,
    euler_trace,
    invert_mod,
    newton_sums_coset,
    newton_sums_recursive,
    reduce_mod,
)
from caustica.errors import NonDistinctRootsError, NotInvertibleError
from caustica.poly import Polynomial, RationalFunc, poly_x


def cubic_123():
    # (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
    return Polynomial([F(-6), F(11), F(-6), F(1)])


def test_reduce_mod_is_remainder():
    phi = cubic_123()
    g = Polynomial([F(0)] * 5 + [F(1)])  # x^5
    rep = reduce_mod(g, phi)
    assert rep.rep == g % phi
    assert rep.rep.degree < phi.degree


def test_invert_mod_round_trip():
    phi = cubic_123()
    q = Polynomial([F(5), F(1)])  # x + 5, no root in {1,2,3}
    inv = invert_mod(q, phi)
    assert (q * inv.rep) % phi == Polynomial([F(1)])


def test_invert_mod_shared_root_rejected():
    phi = cubic_123()
    q = Polynomial([F(-2), F(1)])  # x - 2 kills the root 2
    with pytest.raises(NotInvertibleError):
        invert_mod(q, phi)


def test_coset_rep_rational_agrees_at_roots():
    phi = cubic_123()
    h = RationalFunc(Polynomial([F(1)]), poly_x())  # 1/x
    rep = coset_rep_rational(h, phi)
    for r in (F(1), F(2), F(3)):
        assert rep.rep(r) == h(r)


def test_column_zero_is_derivative():
    phi = cubic_123()
    table = coefficient_table(phi)
    assert table.column_poly(0) == phi.derivative()


def test_columns_match_direct_reduction():
    phi = cubic_123()
    table = coefficient_table(phi, upto=5)
    dphi = phi.derivative()
    x = poly_x()
    xk = Polynomial([F(1)])
    for k in range(6):
        assert table.column_poly(k) == (dphi * xk) % phi
        xk = xk * x


def test_combine_rep_equals_direct_reduction():
    phi = cubic_123()
    table = coefficient_table(phi)
    h_star = reduce_mod(Polynomial([F(7), F(-2), F(1, 3)]), phi)
    direct = (phi.derivative() * h_star.rep) % phi
    assert combine_rep(h_star, table).rep == direct


def test_newton_sums_of_known_roots():
    phi = cubic_123()
    # roots 1, 2, 3: N_1 = 6, N_2 = 14, N_3 = 36, N_4 = 98
    want = (F(3), F(6), F(14), F(36), F(98))
    assert newton_sums_recursive(phi, 4).values == want
    assert newton_sums_coset(phi, 4).values == want


@given(st.lists(st.integers(-6, 6), min_size=3, max_size=8))
@settings(max_examples=60, deadline=None)
def test_newton_sum_methods_agree(coeffs):
    coeffs = [F(c) for c in coeffs]
    coeffs.append(F(1))  # monic, so degree is fixed by the draw
    phi = Polynomial(coeffs)
    try:
        certify_distinct_roots(phi)
    except NonDistinctRootsError:
        return
    upto = phi.degree + 2
    assert (newton_sums_coset(phi, upto).values
            == newton_sums_recursive(phi, upto).values)


def test_trace_of_reciprocal():
    # sum 1/r over roots {1,2,3} = 11/6
    phi = cubic_123()
    h = RationalFunc(Polynomial([F(1)]), poly_x())
    assert euler_trace(h, phi) == F(11, 6)


def test_trace_rejects_repeated_roots():
    phi = Polynomial([F(1), F(-2), F(1)])  # (x-1)^2
    h = RationalFunc.from_poly(poly_x())
    with pytest.raises(NonDistinctRootsError):
        euler_trace(h, phi)


def test_trace_rejects_pole_at_root():
    phi = cubic_123()
    h = RationalFunc(Polynomial([F(1)]), Polynomial([F(-1), F(1)]))
    with pytest.raises(NotInvertibleError):
        euler_trace(h, phi)


def test_trace_is_linear():
    rng = random.Random(3)
    phi = cubic_123()
    for _ in range(10):
        p1 = Polynomial([F(rng.randint(-9, 9)) for _ in range(3)])
        p2 = Polynomial([F(rng.randint(-9, 9)) for _ in range(3)])
        h1 = RationalFunc.from_poly(p1)
        h2 = RationalFunc.from_poly(p2)
        both = RationalFunc.from_poly(p1 + p2)
        assert euler_trace(both, phi) == euler_trace(h1, phi) + euler_trace(h2, phi)
