"""Quotient-ring machinery: coset representatives, the coefficient
recursion, Newton sums, and the trace formula.

Everything here works modulo a fixed univariate polynomial phi of degree n
with (generically) distinct roots.  The central objects:

* the unique representative of degree < n of any coset, including cosets of
  rational functions whose denominator does not vanish at a root of phi;
* the table b[j][k] of coefficients of the representatives r_k of the
  cosets of phi' * x^k, filled by a two-line recursion in O(n^2) ring
  operations;
* Newton power sums of the roots, read off the top row of that table;
* the trace of a rational function over all roots of phi, computed without
  ever finding the roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NonDistinctRootsError, NotInvertibleError
from .poly import EXACT, Polynomial, RationalFunc, gcd, xgcd


@dataclass(frozen=True)
class CosetRep:
    """Unique polynomial representative of a coset, deg rep < deg modulus."""

    modulus: Polynomial
    rep: Polynomial

    def __post_init__(self):
        if self.rep.degree >= self.modulus.degree:
            raise ValueError("representative degree not below modulus degree")


@dataclass(frozen=True)
class CoefficientTable:
    """Columns of coefficients of the representatives of phi' * x^k.

    ``columns[k][j]`` holds b_{j,k}: the coefficient of x^j in the unique
    representative r_k of the coset of phi'(x) * x^k.  Stored column-major
    because consumers read whole columns and the top (j = n-1) row.
    """

    modulus: Polynomial
    columns: tuple  # tuple of tuples, columns[k][j] = b_{j,k}

    def column_poly(self, k: int) -> Polynomial:
        return Polynomial(list(self.columns[k]))

    def top_row(self, upto: int):
        """b_{n-1,k} for k = 0..upto."""
        n = self.modulus.degree
        return [self.columns[k][n - 1] for k in range(upto + 1)]


@dataclass(frozen=True)
class NewtonSums:
    """Power sums N_k = sum of k-th powers of the roots of the modulus."""

    modulus: Polynomial
    values: tuple  # values[k] = N_k


def reduce_mod(g: Polynomial, phi: Polynomial) -> CosetRep:
    """Remainder of g modulo phi, as the unique coset representative."""
    return CosetRep(phi, g % phi)


def invert_mod(q: Polynomial, phi: Polynomial) -> CosetRep:
    """Inverse of q modulo phi via extended Euclid.

    Raises NotInvertibleError when gcd(q, phi) has positive degree, i.e.
    when q vanishes at some root of phi.
    """
    g, u, _ = xgcd(q, phi)
    if g.degree != 0:
        raise NotInvertibleError(
            f"gcd has degree {g.degree}; q shares a root with the modulus"
        )
    return CosetRep(phi, u % phi)


def coset_rep_rational(h: RationalFunc, phi: Polynomial) -> CosetRep:
    """Representative of the coset of a rational function h = p/q.

    Requires gcd(q, phi) constant; the result is the unique polynomial of
    degree < n agreeing with h at every root of phi.
    """
    inv_den = invert_mod(h.den, phi)
    return CosetRep(phi, (h.num * inv_den.rep) % phi)


def coefficient_table(phi: Polynomial, upto: int | None = None) -> CoefficientTable:
    """Fill the b_{j,k} table for k = 0..upto (default n-1).

    Column 0 is phi' itself.  Each later column comes from the previous one
    by the recursion

        b_{n-i,k} = -(a_{n-i}/a_n) * b_{n-1,k-1} + b_{n-(i+1),k-1}

    with the subscript -1 row identically zero, which is multiplication of
    the previous representative by x followed by reduction of x^n.
    """
    n = phi.degree
    if n < 1 or phi.leading == 0:
        raise ValueError("modulus must have degree >= 1")
    if upto is None:
        upto = n - 1
    a = phi.coeffs
    an = phi.leading
    # column 0: coefficients of phi' (degree n-1), index j = coeff of x^j
    col = [(j + 1) * a[j + 1] for j in range(n)]
    columns = [tuple(col)]
    for _ in range(upto):
        top = col[n - 1]
        new = [None] * n
        for i in range(1, n + 1):
            below = col[n - i - 1] if n - i - 1 >= 0 else 0 * top
            new[n - i] = -(a[n - i] / an) * top + below
        col = new
        columns.append(tuple(col))
    return CoefficientTable(phi, tuple(columns))


def combine_rep(h_star: CosetRep, table: CoefficientTable) -> CosetRep:
    """Representative of phi' * h from the table columns.

    Linear combination b_j = sum_k c_k b_{j,k} over the coefficients c_k of
    h_star; equal to direct reduction of phi' * h_star.
    """
    if h_star.modulus != table.modulus:
        raise ValueError("modulus mismatch between representative and table")
    n = table.modulus.degree
    cs = [h_star.rep.coeff(k) for k in range(n)]
    out = []
    for j in range(n):
        acc = 0 * table.modulus.leading
        for k in range(n):
            if cs[k] != 0:
                acc += cs[k] * table.columns[k][j]
        out.append(acc)
    return CosetRep(table.modulus, Polynomial(out, backend=table.modulus.backend))


def newton_sums_recursive(phi: Polynomial, upto: int) -> NewtonSums:
    """Power sums via the classical recursion on the coefficients.

    For k <= n:  k a_{n-k} + a_{n-k+1} N_1 + ... + a_n N_k = 0, N_0 = n;
    beyond n the same recursion runs with missing coefficients read as 0.
    """
    n = phi.degree
    if n < 1 or phi.leading == 0:
        raise ValueError("modulus must have degree >= 1")
    an = phi.leading

    def a(i):
        if 0 <= i <= n:
            return phi.coeffs[i]
        return 0 * an

    values = [Fraction(n) if phi.backend == EXACT else complex(n)]
    for k in range(1, upto + 1):
        acc = k * a(n - k)
        for j in range(1, k):
            acc += a(n - k + j) * values[j]
        values.append(-acc / an)
    return NewtonSums(phi, tuple(values[: upto + 1]))


def newton_sums_coset(phi: Polynomial, upto: int) -> NewtonSums:
    """Power sums read off the top row of the coefficient table: N_k =
    b_{n-1,k} / a_n."""
    table = coefficient_table(phi, upto=upto)
    an = phi.leading
    return NewtonSums(phi, tuple(v / an for v in table.top_row(upto)))


def certify_distinct_roots(phi: Polynomial):
    """Raise NonDistinctRootsError unless gcd(phi, phi') is constant.

    Exact backend only; float-backend callers certify via root separation
    instead.
    """
    g = gcd(phi, phi.derivative())
    if g.certified and g.poly.degree >= 1:
        raise NonDistinctRootsError(f"gcd(phi, phi') = {g.poly!r}")


def euler_trace(h: RationalFunc, phi: Polynomial, certify: bool = True):
    """Sum of h over all roots of phi, computed algebraically.

    Equals the coefficient of x^{n-1} in the representative of the coset of
    phi' * h, divided by the leading coefficient of phi.  The main path
    goes through the coefficient table and combine_rep, so the recursion is
    exercised on every call.
    """
    if certify and phi.backend == EXACT:
        certify_distinct_roots(phi)
    if not h.in_ring_of(phi):
        raise NotInvertibleError("denominator of h vanishes at a root of phi")
    n = phi.degree
    h_star = coset_rep_rational(h, phi)
    table = coefficient_table(phi)
    r = combine_rep(h_star, table)
    return r.rep.coeff(n - 1) / phi.leading
