"""Catalog loading, binding, and the per-entry exact verifiers."""

import random
from fractions import Fraction as F

import pytest

from caustica import catalog
from caustica.errors import GuardViolationError
from caustica.poly import Polynomial


def test_catalog_has_all_eleven():
    defs = catalog.all_definitions()
    assert [d.id.ade_label for d in defs] == list(catalog.ADE_LABELS)
    assert [d.id.n_images for d in defs] == [2, 3, 4, 4, 4, 5, 5, 6, 6, 6, 6]
    assert [d.id.codim for d in defs] == [1, 2, 3, 3, 3, 4, 4, 5, 5, 5, 5]


def test_param_counts_match_codim():
    # beyond the two source coordinates, every unit of codimension buys one
    # control parameter (the fold needs neither)
    for d in catalog.all_definitions():
        assert d.id.n_params == max(d.id.codim - 2, 0)


def test_fold_phi():
    d = catalog.get("A2")
    assert d.build_phi((), (F(0), F(1))) == Polynomial([F(-1), F(0), F(1)])


def test_cusp_phi():
    d = catalog.get("A3")
    # y^3 + s1 y - s2 at s = (1, 2)
    assert d.build_phi((), (F(1), F(2))) == Polynomial([F(-2), F(1), F(0), F(1)])


def test_hess_signs_are_stable():
    signs = {d.id.ade_label: d.hess_sign for d in catalog.all_definitions()}
    assert signs == {
        "A2": -1, "A3": -1, "A4": -1, "D4minus": 1, "D4plus": 1,
        "A5": -1, "D5": 1, "A6": -1, "E6": 1, "D6minus": 1, "D6plus": 1,
    }


def test_guard_violation_raises():
    d = catalog.get("D4plus")  # guards c_1 away from 0
    with pytest.raises(GuardViolationError):
        d.build_phi((F(0),), (F(1), F(1)))


def test_unknown_label():
    with pytest.raises(KeyError):
        catalog.get("A7")


def test_family_gradient_vanishes_on_fiber():
    # s := f(x, y) puts (x, y) on the critical locus of F_{c,s}
    rng = random.Random(5)
    for d in catalog.all_definitions():
        c = tuple(catalog.draw_rational(rng) for _ in range(d.id.n_params))
        pt = (catalog.draw_rational(rng), catalog.draw_rational(rng))
        d.verify_grad_equivalence(c, pt)


def test_phi_roots_are_preimage_coordinates():
    # exact check on the cusp: pick (x, y), read s = f(x, y), then the
    # retained coordinate must be a root of phi
    d = catalog.get("A3")
    f1, f2 = d.induced_map(())
    x, y = F(1, 2), F(3, 4)
    s = (f1(x, y), f2(x, y))
    phi = d.build_phi((), s)
    retained = y if d.elim_var == "x" else x
    assert phi(retained) == 0


def test_back_substitute_recovers_point():
    d = catalog.get("D4plus")
    c = (F(2),)
    f1, f2 = d.induced_map(c)
    x, y = F(1, 3), F(2, 5)
    s = (f1(x, y), f2(x, y))
    phi = d.build_phi(c, s)
    retained = x if d.elim_var == "y" else y
    assert phi(retained) == 0
    assert d.back_substitute(c, s, retained) == (x, y)


def test_multiplier_identity_all_entries():
    rng = random.Random(17)
    for d in catalog.all_definitions():
        c, s = catalog.draw_params(d, rng)
        d.verify_multiplier_identity(c, s)


def test_resultant_proportionality_constant_lambda():
    # lambda may depend on c but not on s
    rng = random.Random(23)
    for label in ("A3", "D4minus", "E6"):
        d = catalog.get(label)
        c, s1 = catalog.draw_params(d, rng)
        _, s2 = catalog.draw_params(d, rng)
        assert d.verify_phi_vs_resultant(c, s1) == d.verify_phi_vs_resultant(c, s2)


def test_draw_params_respects_guards():
    rng = random.Random(29)
    d = catalog.get("D6minus")  # guards s_1
    for _ in range(50):
        c, s = catalog.draw_params(d, rng)
        d.check_guards(c, s)  # must not raise
        assert abs(s[0]) >= catalog.GUARD_EPS


def test_magnification_denominator_shares_no_root_generic():
    # the magnification must be a unit modulo phi, else the trace is undefined
    from caustica.coset import coset_rep_rational

    rng = random.Random(31)
    for d in catalog.all_definitions():
        c, s = catalog.draw_params(d, rng)
        phi = d.build_phi(c, s)
        coset_rep_rational(d.magnification(c, s), phi)  # must not raise
