"""Univariate polynomial and rational-function arithmetic over two backends.

A polynomial is stored densely as a coefficient tuple, index i holding the
coefficient of x^i.  Two interchangeable scalar backends are supported:

* ``exact``   -- ``fractions.Fraction`` coefficients; all ring operations,
  gcds, resultants and discriminants are computed without rounding.
* ``complex`` -- Python ``complex`` coefficients; used for root finding and
  any value that originated from floating point.

Backends never mix silently: combining an exact with a complex polynomial
raises :class:`BackendMismatchError`.  Use :meth:`Polynomial.to_complex` for
an explicit conversion.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence, Union

import numpy as np

from .errors import (
    BackendMismatchError,
    DegenerateLeadingCoefficientError,
    NonConvergenceError,
)

EXACT = "exact"
COMPLEX = "complex"

ScalarLike = Union[int, Fraction, float, complex]

#: default contract bounds for root polishing
ROOT_RESIDUAL_TOL = 1e-10
LEADING_TOL = 1e-12
NEWTON_MAX_ITER = 50


def _is_exact(v) -> bool:
    return isinstance(v, (int, Fraction)) and not isinstance(v, bool)


def _coerce_coeffs(coeffs: Sequence[ScalarLike]):
    """Return (tuple, backend) with every coefficient in one backend."""
    vals = list(coeffs)
    if all(_is_exact(v) for v in vals):
        return tuple(Fraction(v) for v in vals), EXACT
    out = []
    for v in vals:
        c = complex(v)
        if not (cmath.isfinite(c)):
            raise ValueError(f"non-finite coefficient {v!r}")
        out.append(c)
    return tuple(out), COMPLEX


def scalar_backend(v: ScalarLike) -> str:
    return EXACT if _is_exact(v) else COMPLEX


@dataclass(frozen=True)
class Polynomial:
    """Immutable dense univariate polynomial.

    ``coeffs[i]`` is the coefficient of x^i; trailing zeros are stripped at
    construction so the last stored coefficient is nonzero unless the
    polynomial is zero.  The zero polynomial has ``degree == -1``.
    """

    coeffs: tuple
    backend: str

    def __init__(self, coeffs: Sequence[ScalarLike], backend: str | None = None):
        vals, detected = _coerce_coeffs(coeffs)
        if backend == COMPLEX and detected == EXACT:
            vals = tuple(complex(v) for v in vals)
            detected = COMPLEX
        elif backend is not None and backend != detected:
            raise BackendMismatchError(
                f"cannot store {detected} coefficients in {backend} backend"
            )
        while vals and vals[-1] == 0:
            vals = vals[:-1]
        object.__setattr__(self, "coeffs", vals)
        object.__setattr__(self, "backend", detected)

    # -- basic queries ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 sentinel for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def leading(self):
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int):
        """Coefficient of x^i (zero backend scalar if out of range)."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0) if self.backend == EXACT else 0j

    # -- backend ----------------------------------------------------------

    def to_complex(self) -> "Polynomial":
        if self.backend == COMPLEX:
            return self
        return Polynomial([complex(c) for c in self.coeffs])

    def _check_backend(self, other: "Polynomial"):
        if self.backend != other.backend:
            raise BackendMismatchError(
                f"mixed backends: {self.backend} vs {other.backend}"
            )

    # -- ring arithmetic --------------------------------------------------

    def __add__(self, other):
        other = self._as_poly(other)
        self._check_backend(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([self.coeff(i) + other.coeff(i) for i in range(n)],
                          backend=self.backend)

    def __sub__(self, other):
        other = self._as_poly(other)
        self._check_backend(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([self.coeff(i) - other.coeff(i) for i in range(n)],
                          backend=self.backend)

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs], backend=self.backend)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check_backend(other)
        if self.is_zero or other.is_zero:
            return Polynomial([], backend=self.backend)
        zero = Fraction(0) if self.backend == EXACT else 0j
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out, backend=self.backend)

    __rmul__ = __mul__

    def scale(self, s: ScalarLike) -> "Polynomial":
        if scalar_backend(s) != self.backend:
            raise BackendMismatchError(
                f"scalar backend {scalar_backend(s)} vs polynomial {self.backend}"
            )
        return Polynomial([c * s for c in self.coeffs])

    def _as_poly(self, v):
        if isinstance(v, Polynomial):
            return v
        return Polynomial([v])

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.backend == other.backend and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.backend, self.coeffs))

    def __divmod__(self, phi: "Polynomial"):
        """Division with remainder: self = q*phi + r, deg r < deg phi."""
        self._check_backend(phi)
        if phi.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        q = [Fraction(0) if self.backend == EXACT else 0j] * max(
            len(self.coeffs) - len(phi.coeffs) + 1, 0
        )
        rem = list(self.coeffs)
        dp = phi.degree
        lead = phi.leading
        for i in range(len(rem) - 1, dp - 1, -1):
            factor = rem[i] / lead
            if factor == 0:
                continue
            q[i - dp] = factor
            for j, b in enumerate(phi.coeffs):
                rem[i - dp + j] -= factor * b
            rem[i] = 0 * rem[i]  # kill rounding residue at the pivot
        return (
            Polynomial(q, backend=self.backend),
            Polynomial(rem[:dp], backend=self.backend),
        )

    def __floordiv__(self, phi):
        return divmod(self, phi)[0]

    def __mod__(self, phi):
        return divmod(self, phi)[1]

    def exact_div(self, phi: "Polynomial") -> "Polynomial":
        """Quotient when phi divides self exactly; raises otherwise."""
        q, r = divmod(self, phi)
        if not r.is_zero:
            raise ValueError("exact_div: remainder is nonzero")
        return q

    # -- calculus / evaluation -------------------------------------------

    def derivative(self) -> "Polynomial":
        return Polynomial(
            [i * c for i, c in enumerate(self.coeffs)][1:], backend=self.backend
        )

    def __call__(self, t):
        """Horner evaluation; exact when both backend and t are exact."""
        acc = Fraction(0) if (self.backend == EXACT and _is_exact(t)) else 0j
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        lead = self.leading
        return Polynomial([c / lead for c in self.coeffs])

    def shift(self, k: int) -> "Polynomial":
        """Multiply by x^k."""
        zero = Fraction(0) if self.backend == EXACT else 0j
        return Polynomial([zero] * k + list(self.coeffs))

    def __repr__(self):
        if self.is_zero:
            return "Polynomial(0)"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            parts.append(f"{c}*x^{i}" if i else f"{c}")
        return "Polynomial(" + " + ".join(parts) + ")"


def poly_x(backend: str = EXACT) -> Polynomial:
    return Polynomial([0, 1]) if backend == EXACT else Polynomial([0.0, 1.0])


# -- gcd machinery -------------------------------------------------------


class GcdResult(NamedTuple):
    poly: Polynomial
    certified: bool


def gcd(p: Polynomial, q: Polynomial, float_eps: float = 1e-12) -> GcdResult:
    """Monic greatest common divisor via the Euclidean algorithm.

    Exact-backend results are certified.  Complex-backend calls run the same
    algorithm with small coefficients truncated to zero and are advisory
    only (``certified=False``).
    """
    p._check_backend(q)
    if p.is_zero and q.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    certified = p.backend == EXACT
    a, b = p, q
    while not b.is_zero:
        r = a % b
        if not certified and not r.is_zero:
            scale = max(abs(c) for c in b.coeffs)
            trimmed = [c if abs(c) > float_eps * scale else 0j for c in r.coeffs]
            r = Polynomial(trimmed)
        a, b = b, r
    return GcdResult(a.monic(), certified)


def xgcd(p: Polynomial, q: Polynomial):
    """Extended Euclid: returns (g, u, v) with u*p + v*q = g, g monic.

    Exact backend only; this is the certified path used for modular
    inversion in the quotient ring.
    """
    if p.backend != EXACT or q.backend != EXACT:
        raise BackendMismatchError("xgcd requires the exact backend")
    if p.is_zero and q.is_zero:
        raise ValueError("xgcd(0, 0) is undefined")
    one = Polynomial([1])
    zero = Polynomial([])
    r0, r1 = p, q
    u0, u1 = one, zero
    v0, v1 = zero, one
    while not r1.is_zero:
        qq, rr = divmod(r0, r1)
        r0, r1 = r1, rr
        u0, u1 = u1, u0 - qq * u1
        v0, v1 = v1, v0 - qq * v1
    lead = r0.leading
    inv = Fraction(1) / lead
    return r0.monic(), u0.scale(inv), v0.scale(inv)


# -- rational functions ---------------------------------------------------


@dataclass(frozen=True)
class RationalFunc:
    """Quotient p/q of polynomials, q nonzero.

    Membership in the ring R of functions defined at the roots of a modulus
    phi is a relative property; it is certified by ``gcd(den, phi)`` having
    degree 0 and is checked by the operations that need it.
    """

    num: Polynomial
    den: Polynomial

    def __post_init__(self):
        if self.den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        self.num._check_backend(self.den)

    @property
    def backend(self) -> str:
        return self.num.backend

    def __call__(self, t):
        return self.num(t) / self.den(t)

    def in_ring_of(self, phi: Polynomial) -> bool:
        """True iff den shares no root with phi (certified in exact mode)."""
        return gcd(self.den, phi).poly.degree == 0

    @staticmethod
    def from_poly(p: Polynomial) -> "RationalFunc":
        one = Polynomial([1]) if p.backend == EXACT else Polynomial([1.0])
        return RationalFunc(p, one)


# -- interpolation --------------------------------------------------------


def interpolate(points) -> Polynomial:
    """Unique polynomial of degree < len(points) through the given points.

    Newton divided-difference form; exact when all nodes and values are
    exact scalars.  Nodes must be pairwise distinct.
    """
    pts = list(points)
    if not pts:
        raise ValueError("interpolate needs at least one point")
    nodes = [p[0] for p in pts]
    values = [p[1] for p in pts]
    for i in range(len(nodes)):
        for j in range(i + 1, len(nodes)):
            if nodes[i] == nodes[j]:
                raise ValueError(f"duplicate interpolation node {nodes[i]!r}")
    exact = all(_is_exact(v) for v in nodes + values)
    if exact:
        nodes = [Fraction(v) for v in nodes]
        values = [Fraction(v) for v in values]
    else:
        nodes = [complex(v) for v in nodes]
        values = [complex(v) for v in values]
    # divided-difference table, then expand the Newton form
    coefs = list(values)
    n = len(nodes)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            coefs[i] = (coefs[i] - coefs[i - 1]) / (nodes[i] - nodes[i - level])
    backend = EXACT if exact else COMPLEX
    result = Polynomial([coefs[-1]], backend=backend)
    for i in range(n - 2, -1, -1):
        factor = Polynomial([-nodes[i], Fraction(1) if exact else 1.0])
        result = result * factor + Polynomial([coefs[i]], backend=backend)
    return result


# -- determinants, resultants, discriminants ------------------------------


def bareiss_det(matrix, *, zero, one):
    """Fraction-free Bareiss determinant over any integral domain.

    Entries must support *, -, exact division (``exact_div`` for
    Polynomial entries, true division for Fraction entries) and zero test.
    """

    def div(a, b):
        if isinstance(a, Polynomial):
            return a.exact_div(b)
        return a / b

    m = [row[:] for row in matrix]
    n = len(m)
    if n == 0:
        return one
    sign = 1
    prev = one
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev)
            m[i][k] = zero
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def _sylvester(p_coeffs, q_coeffs, zero):
    """Sylvester matrix rows for resultant of two coefficient lists.

    Coefficient lists are ascending (index = power); entries may be scalars
    or Polynomials.
    """
    n = len(p_coeffs) - 1
    m = len(q_coeffs) - 1
    size = n + m
    rows = []
    pdesc = list(reversed(p_coeffs))
    qdesc = list(reversed(q_coeffs))
    for i in range(m):
        rows.append([zero] * i + pdesc + [zero] * (size - n - 1 - i))
    for i in range(n):
        rows.append([zero] * i + qdesc + [zero] * (size - m - 1 - i))
    return rows


def resultant_univariate(p: Polynomial, q: Polynomial):
    """Resultant of two exact univariate polynomials (a Fraction)."""
    if p.backend != EXACT or q.backend != EXACT:
        raise BackendMismatchError("resultant requires the exact backend")
    if p.is_zero or q.is_zero:
        raise ValueError("resultant of zero polynomial")
    if p.degree == 0:
        return p.coeffs[0] ** q.degree
    if q.degree == 0:
        return q.coeffs[0] ** p.degree
    rows = _sylvester(list(p.coeffs), list(q.coeffs), Fraction(0))
    return bareiss_det(rows, zero=Fraction(0), one=Fraction(1))


def discriminant(phi: Polynomial) -> Fraction:
    """disc(phi) = (-1)^{n(n-1)/2} resultant(phi, phi') / a_n, exact."""
    n = phi.degree
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    res = resultant_univariate(phi, phi.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * res / phi.leading


# -- bivariate polynomials ------------------------------------------------


class BiPoly:
    """Sparse bivariate polynomial, terms keyed by (x_power, y_power).

    Used for the catalog's family/map/Jacobian data and for the Sylvester
    elimination oracle.  Exact and complex scalars both work; arithmetic is
    plain dict merging.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for key, c in dict(terms).items():
                if c != 0:
                    self.terms[key] = self.terms.get(key, 0) + c
            self.terms = {k: v for k, v in self.terms.items() if v != 0}

    @property
    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return BiPoly(out)

    def __sub__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) - v
        return BiPoly(out)

    def __neg__(self):
        return BiPoly({k: -v for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, BiPoly):
            return BiPoly({k: v * other for k, v in self.terms.items()})
        out = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + a * b
        return BiPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.terms == other.terms

    def diff(self, var: str) -> "BiPoly":
        out = {}
        for (i, j), c in self.terms.items():
            if var == "x" and i > 0:
                out[(i - 1, j)] = out.get((i - 1, j), 0) + i * c
            elif var == "y" and j > 0:
                out[(i, j - 1)] = out.get((i, j - 1), 0) + j * c
        return BiPoly(out)

    def __call__(self, x, y):
        acc = 0
        for (i, j), c in self.terms.items():
            acc += c * x**i * y**j
        return acc

    def as_univariate(self, elim_var: str):
        """Coefficient list in elim_var; entries are Polynomials in the other."""
        by_power = {}
        for (i, j), c in self.terms.items():
            ep, rp = (i, j) if elim_var == "x" else (j, i)
            by_power.setdefault(ep, {})[rp] = c
        if not by_power:
            return []
        top = max(by_power)
        out = []
        for p in range(top + 1):
            cd = by_power.get(p, {})
            size = max(cd) + 1 if cd else 0
            out.append(Polynomial([cd.get(i, 0) for i in range(size)]))
        return out

    def __repr__(self):
        if not self.terms:
            return "BiPoly(0)"
        bits = [f"{c}*x^{i}*y^{j}" for (i, j), c in sorted(self.terms.items())]
        return "BiPoly(" + " + ".join(bits) + ")"


def resultant_bivariate(p: BiPoly, q: BiPoly, elim_var: str) -> Polynomial:
    """Resultant of two bivariate polynomials in ``elim_var``.

    Returns a Polynomial in the retained variable.  Exact arithmetic via
    fraction-free Bareiss elimination on the Sylvester matrix, so the
    output is suitable for exact proportionality checks.
    """
    pc = p.as_univariate(elim_var)
    qc = q.as_univariate(elim_var)
    if not pc or not qc:
        raise ValueError("resultant of zero polynomial")
    if pc[-1].is_zero or qc[-1].is_zero:
        raise ValueError("zero leading coefficient in elimination variable")
    zero = Polynomial([])
    one = Polynomial([1])
    n, m = len(pc) - 1, len(qc) - 1
    if n == 0 and m == 0:
        return one
    if n == 0:
        out = one
        for _ in range(m):
            out = out * pc[0]
        return out
    if m == 0:
        out = one
        for _ in range(n):
            out = out * qc[0]
        return out
    rows = _sylvester(pc, qc, zero)
    return bareiss_det(rows, zero=zero, one=one)


# -- root finding ---------------------------------------------------------


@dataclass(frozen=True)
class RootSet:
    """Roots of a polynomial plus certification data.

    ``residuals[i]`` is |phi(root_i)| / (max|a| * max(1,|root_i|)^deg) and is
    bounded by the residual tolerance used at construction.
    """

    roots: tuple
    residuals: tuple
    min_separation: float


def roots(
    phi: Polynomial,
    residual_tol: float = ROOT_RESIDUAL_TOL,
    leading_tol: float = LEADING_TOL,
    max_iter: int = NEWTON_MAX_ITER,
) -> RootSet:
    """All complex roots via companion-matrix eigenvalues + Newton polish.

    Each root is polished until the scaled residual |phi(r)| / (max|a| *
    max(1,|r|)^deg) drops below ``residual_tol``; failure to get there after
    ``max_iter`` Newton steps raises NonConvergenceError.
    """
    if phi.degree < 1:
        raise ValueError("roots needs degree >= 1")
    p = phi.to_complex()
    coeffs = np.array(p.coeffs, dtype=complex)
    scale = float(np.max(np.abs(coeffs)))
    if abs(p.leading) < leading_tol * scale:
        raise DegenerateLeadingCoefficientError(
            f"|a_n|={abs(p.leading):.3e} below {leading_tol:.1e} * max|a_i|"
        )
    deg = p.degree
    raw = np.roots(coeffs[::-1])
    dp = p.derivative()

    def scaled_residual(r: complex) -> float:
        return abs(p(r)) / (scale * max(1.0, abs(r)) ** deg)

    polished = []
    residuals = []
    for r in raw:
        r = complex(r)
        res = scaled_residual(r)
        it = 0
        while res > residual_tol and it < max_iter:
            d = dp(r)
            if d == 0:
                break
            step = p(r) / d
            r2 = r - step
            res2 = scaled_residual(r2)
            if res2 >= res:
                break
            r, res = r2, res2
            it += 1
        if res > residual_tol:
            raise NonConvergenceError(
                f"root {r} residual {res:.3e} > {residual_tol:.1e}"
            )
        polished.append(r)
        residuals.append(res)
    order = sorted(range(deg), key=lambda i: (polished[i].real, polished[i].imag))
    polished = [polished[i] for i in order]
    residuals = [residuals[i] for i in order]
    min_sep = float("inf")
    for i in range(deg):
        for j in range(i + 1, deg):
            min_sep = min(min_sep, abs(polished[i] - polished[j]))
    return RootSet(tuple(polished), tuple(residuals), min_sep)
