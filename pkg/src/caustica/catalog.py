"""Executable catalog of the eleven caustic singularity normal forms.

Each entry carries, as bit-exact data loaded from ``singularities.json``:
the generating family F, the induced plane map f = (f1, f2), the Jacobian
determinant, the one-variable elimination polynomial phi, the magnification
as a rational function of the retained variable, the multiplier polynomial,
and the back-substitution recovering the eliminated coordinate.

All of it can be bound either to exact rational (c, s) values or to floats;
the verification routines run exclusively in exact mode so that every
identity check is a statement about integers, not about rounding.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from .coset import certify_distinct_roots
from .errors import (
    BackSubSingularError,
    NonDistinctRootsError,
    EquivalenceFailureError,
    GuardViolationError,
    IdentityFailureError,
    InconsistentSignError,
    NotProportionalError,
)
from .poly import BiPoly, Polynomial, RationalFunc, resultant_bivariate, _is_exact

#: catalog order; also the order used by verify-all
ADE_LABELS = (
    "A2",
    "A3",
    "A4",
    "D4minus",
    "D4plus",
    "A5",
    "D5",
    "A6",
    "E6",
    "D6minus",
    "D6plus",
)

#: components whose magnitude must stay above this in random draws
GUARD_EPS = Fraction(1, 20)

#: denominator bound for random rational draws
DRAW_DENOMINATOR = 64


@dataclass(frozen=True)
class SingularityId:
    ade_label: str
    common_name: str
    codim: int
    n_images: int
    n_params: int

    def __post_init__(self):
        if self.n_images != self.codim + 1:
            raise ValueError("n_images must equal codim + 1")


def _coeff(num, den, exact):
    return Fraction(num, den) if exact else num / den


def _eval_cs(num, den, cpows, spows, c, s, exact):
    v = _coeff(num, den, exact)
    for ci, p in zip(c, cpows):
        if p:
            v *= ci**p
    for si, p in zip(s, spows):
        if p:
            v *= si**p
    return v


def _bind_xy(terms, c, s, exact) -> BiPoly:
    out = {}
    for num, den, xp, yp, cpows, spows in terms:
        v = _eval_cs(num, den, cpows, spows, c, s, exact)
        out[(xp, yp)] = out.get((xp, yp), 0) + v
    return BiPoly(out)


def _bind_tpoly(tdict, c, s, exact) -> Polynomial:
    if not tdict:
        return Polynomial([], backend="exact" if exact else "complex")
    top = max(int(k) for k in tdict)
    coeffs = [Fraction(0) if exact else 0.0] * (top + 1)
    for k, terms in tdict.items():
        acc = Fraction(0) if exact else 0.0
        for num, den, cpows, spows in terms:
            acc += _eval_cs(num, den, cpows, spows, c, s, exact)
        coeffs[int(k)] = acc
    return Polynomial(coeffs)


def _all_exact(values) -> bool:
    return all(_is_exact(v) for v in values)


@dataclass(frozen=True)
class SingularityDef:
    """One catalog row, with builders parameterized over (c, s)."""

    id: SingularityId
    elim_var: str
    retained_var: str
    raw: dict = field(repr=False)
    hess_sign: int = 0  # determined empirically at load

    # -- binding ----------------------------------------------------------

    def _mode(self, c, s=()):
        return _all_exact(list(c) + list(s))

    def family(self, c, s) -> BiPoly:
        """The generating family F_{c,s}(x, y)."""
        return _bind_xy(self.raw["F"], c, s, self._mode(c, s))

    def induced_map(self, c):
        """The plane map f_c = (f1, f2); independent of s."""
        exact = self._mode(c)
        zero_s = (Fraction(0), Fraction(0)) if exact else (0.0, 0.0)
        return (
            _bind_xy(self.raw["f1"], c, zero_s, exact),
            _bind_xy(self.raw["f2"], c, zero_s, exact),
        )

    def jac_det(self, c) -> BiPoly:
        exact = self._mode(c)
        zero_s = (Fraction(0), Fraction(0)) if exact else (0.0, 0.0)
        return _bind_xy(self.raw["jac_det"], c, zero_s, exact)

    def hess_det(self, c, s) -> BiPoly:
        F = self.family(c, s)
        fxx = F.diff("x").diff("x")
        fyy = F.diff("y").diff("y")
        fxy = F.diff("x").diff("y")
        return fxx * fyy - fxy * fxy

    def grad(self, c, s):
        F = self.family(c, s)
        return F.diff("x"), F.diff("y")

    def check_guards(self, c, s):
        for i in self.raw["guards"]["c"]:
            if abs(c[i]) < GUARD_EPS:
                raise GuardViolationError(
                    f"{self.id.ade_label}: |c_{i + 1}| must stay >= {GUARD_EPS}"
                )
        for i in self.raw["guards"]["s"]:
            if abs(s[i]) < GUARD_EPS:
                raise GuardViolationError(
                    f"{self.id.ade_label}: |s_{i + 1}| must stay >= {GUARD_EPS}"
                )

    def build_phi(self, c, s) -> Polynomial:
        """Elimination polynomial whose roots are the retained coordinates
        of all pre-images of s."""
        self.check_guards(c, s)
        phi = _bind_tpoly(self.raw["phi"], c, s, self._mode(c, s))
        if phi.degree != self.id.n_images:
            raise GuardViolationError(
                f"{self.id.ade_label}: phi degenerated to degree {phi.degree}"
            )
        return phi

    def magnification(self, c, s) -> RationalFunc:
        """Signed magnification 1/J as a rational function of the retained
        variable."""
        exact = self._mode(c, s)
        return RationalFunc(
            _bind_tpoly(self.raw["mag_num"], c, s, exact),
            _bind_tpoly(self.raw["mag_den"], c, s, exact),
        )

    def multiplier(self, c) -> Polynomial:
        """The polynomial m(t) with phi' * M = m as rational functions."""
        exact = self._mode(c)
        zero_s = (Fraction(0), Fraction(0)) if exact else (0.0, 0.0)
        return _bind_tpoly(self.raw["multiplier"], c, zero_s, exact)

    # -- per-point operations ---------------------------------------------

    def back_substitute(self, c, s, t, backsub_tol: float = 1e-8):
        """Full pre-image point from a root t of phi.

        Returns (x, y); the eliminated coordinate is num(t)/den(t).  Raises
        BackSubSingularError when the denominator is (numerically) zero.
        """
        exact = self._mode(c, s) and _is_exact(t)
        num = _bind_tpoly(self.raw["back_sub"]["num"], c, s, exact)
        den = _bind_tpoly(self.raw["back_sub"]["den"], c, s, exact)
        dval = den(t)
        if exact:
            singular = dval == 0
        else:
            scale = max(abs(v) for v in den.coeffs) * max(1.0, abs(complex(t)))
            singular = abs(dval) < backsub_tol * scale
        if singular:
            raise BackSubSingularError(
                f"{self.id.ade_label}: back-substitution denominator ~ 0 at t={t}"
            )
        other = num(t) / dval
        if self.elim_var == "x":
            return other, t
        return t, other

    def gauss_at(self, c, s, point):
        """Gaussian curvature of the graph of F at (x, y).

        At a pre-image (grad F = 0) this reduces to det Hess F, whose
        reciprocal is the magnification.
        """
        x, y = point
        gx, gy = self.grad(c, s)
        h = self.hess_det(c, s)(x, y)
        return h / (1 + gx(x, y) ** 2 + gy(x, y) ** 2)

    # -- exact verification ------------------------------------------------

    def verify_phi_vs_resultant(self, c, s):
        """Check that eliminating one variable from f_c = s reproduces phi
        exactly up to a constant factor; returns that factor.

        This is the transcription oracle for the catalog's phi tables.
        """
        if not self._mode(c, s):
            raise ValueError("resultant verification requires exact (c, s)")
        f1, f2 = self.induced_map(c)
        s1 = BiPoly({(0, 0): s[0]})
        s2 = BiPoly({(0, 0): s[1]})
        res = resultant_bivariate(f1 - s1, f2 - s2, self.elim_var)
        phi = self.build_phi(c, s)
        if res.is_zero or res.degree != phi.degree:
            raise NotProportionalError(
                f"{self.id.ade_label}: resultant degree {res.degree} "
                f"!= phi degree {phi.degree}"
            )
        lam = res.leading / phi.leading
        if not (res - phi.scale(lam)).is_zero:
            raise NotProportionalError(
                f"{self.id.ade_label}: resultant is not proportional to phi"
            )
        return lam

    def verify_multiplier_identity(self, c, s) -> Polynomial:
        """Assert phi' * P == m * Q exactly (M = P/Q); returns the residual
        polynomial, which must be zero."""
        if not self._mode(c, s):
            raise ValueError("identity verification requires exact (c, s)")
        phi = self.build_phi(c, s)
        mag = self.magnification(c, s)
        m = self.multiplier(c)
        residual = phi.derivative() * mag.num - m * mag.den
        if not residual.is_zero:
            raise IdentityFailureError(
                f"{self.id.ade_label}: phi'*P - m*Q = {residual!r}"
            )
        return residual

    def verify_grad_equivalence(self, c, point):
        """At s := f_c(point), grad F_{c,s}(point) must vanish exactly, and
        perturbing s_1 must break it."""
        x, y = point
        f1, f2 = self.induced_map(c)
        s = (f1(x, y), f2(x, y))
        gx, gy = self.grad(c, s)
        if gx(x, y) != 0 or gy(x, y) != 0:
            raise EquivalenceFailureError(
                f"{self.id.ade_label}: grad F != 0 at its own image point"
            )
        bumped = (s[0] + 1, s[1])
        bx, by = self.grad(c, bumped)
        if bx(x, y) == 0 and by(x, y) == 0:
            raise EquivalenceFailureError(
                f"{self.id.ade_label}: grad F still 0 after perturbing s"
            )

    def verify_det_consistency(self, c, points) -> int:
        """det Jac f_c == eps * det Hess F_{c,s} on the pre-image locus,
        with one sign eps for the whole singularity; returns eps."""
        f1, f2 = self.induced_map(c)
        jd = self.jac_det(c)
        eps = None
        for x, y in points:
            s = (f1(x, y), f2(x, y))
            hv = self.hess_det(c, s)(x, y)
            jv = jd(x, y)
            if jv == 0 and hv == 0:
                continue
            if hv == 0 or jv != hv and jv != -hv:
                raise InconsistentSignError(
                    f"{self.id.ade_label}: |det Jac| != |det Hess| at ({x},{y})"
                )
            this = 1 if jv == hv else -1
            if eps is None:
                eps = this
            elif eps != this:
                raise InconsistentSignError(
                    f"{self.id.ade_label}: determinant sign flips between points"
                )
        if eps is None:
            raise InconsistentSignError(
                f"{self.id.ade_label}: all sample points were degenerate"
            )
        return eps


# -- catalog loading ------------------------------------------------------

_CATALOG: dict | None = None


def _load_raw() -> dict:
    data = resources.files("caustica").joinpath("singularities.json").read_text()
    return json.loads(data)


def _derived_jac_det(raw_def, c) -> BiPoly:
    exact = _all_exact(c)
    zero_s = (Fraction(0), Fraction(0)) if exact else (0.0, 0.0)
    f1 = _bind_xy(raw_def["f1"], c, zero_s, exact)
    f2 = _bind_xy(raw_def["f2"], c, zero_s, exact)
    return f1.diff("x") * f2.diff("y") - f1.diff("y") * f2.diff("x")


def load_catalog() -> dict:
    """Parse the definition file once; cross-check stored Jacobian
    determinants against symbolic differentiation and fix each entry's
    Jacobian/Hessian sign empirically."""
    global _CATALOG
    if _CATALOG is not None:
        return _CATALOG
    raw = _load_raw()
    rng = random.Random(20120229)
    catalog = {}
    for entry in raw["singularities"]:
        sid = SingularityId(
            entry["ade_label"],
            entry["common_name"],
            entry["codim"],
            entry["n_images"],
            entry["n_params"],
        )
        sdef = SingularityDef(
            id=sid,
            elim_var=entry["elim_var"],
            retained_var=entry["retained_var"],
            raw=entry,
        )
        # audit the stored Jacobian determinant at a generic rational c
        c_probe = tuple(
            Fraction(rng.randint(-50, 50), 7) for _ in range(sid.n_params)
        )
        if sdef.jac_det(c_probe) != _derived_jac_det(entry, c_probe):
            raise IdentityFailureError(
                f"{sid.ade_label}: stored jac_det disagrees with d(f1,f2)/d(x,y)"
            )
        pts = [
            (Fraction(rng.randint(-40, 40), 13), Fraction(rng.randint(-40, 40), 13))
            for _ in range(5)
        ]
        eps = sdef.verify_det_consistency(c_probe, pts)
        catalog[sid.ade_label] = SingularityDef(
            id=sid,
            elim_var=entry["elim_var"],
            retained_var=entry["retained_var"],
            raw=entry,
            hess_sign=eps,
        )
    _CATALOG = catalog
    return catalog


def get(ade_label: str) -> SingularityDef:
    """Catalog lookup by ADE label (e.g. 'D4plus')."""
    catalog = load_catalog()
    if ade_label not in catalog:
        raise KeyError(
            f"unknown singularity {ade_label!r}; expected one of {ADE_LABELS}"
        )
    return catalog[ade_label]


def all_definitions():
    catalog = load_catalog()
    return [catalog[label] for label in ADE_LABELS]


# -- admissible random draws ----------------------------------------------


def draw_rational(rng: random.Random) -> Fraction:
    """Uniform rational in [-2, 2] with denominator dividing 64."""
    return Fraction(rng.randint(-2 * DRAW_DENOMINATOR, 2 * DRAW_DENOMINATOR),
                    DRAW_DENOMINATOR)


def draw_params(sdef: SingularityDef, rng: random.Random, exact: bool = True,
                max_attempts: int = 100):
    """Random admissible (c, s) respecting the entry's guard set.

    Guarded components are redrawn until they clear GUARD_EPS; the guard
    degeneracies are measure-zero, so resampling preserves genericity.
    """
    for _ in range(max_attempts):
        if exact:
            c = tuple(draw_rational(rng) for _ in range(sdef.id.n_params))
            s = (draw_rational(rng), draw_rational(rng))
        else:
            c = tuple(rng.uniform(-2, 2) for _ in range(sdef.id.n_params))
            s = (rng.uniform(-2, 2), rng.uniform(-2, 2))
        try:
            sdef.check_guards(c, s)
            if exact:
                # reject draws sitting exactly on the caustic, where phi has
                # a repeated root and magnifications are undefined
                certify_distinct_roots(sdef.build_phi(c, s))
        except (GuardViolationError, NonDistinctRootsError):
            continue
        return c, s
    raise GuardViolationError(
        f"{sdef.id.ade_label}: no admissible draw in {max_attempts} attempts"
    )
