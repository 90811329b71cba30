"""Numeric tolerances, collected in one place.

Defaults are deliberately conservative; every consumer takes a Tolerances
instance so tests can pin their own values.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    #: scaled residual bound for polished polynomial roots
    root_residual: float = 1e-10
    #: leading coefficient must exceed this times the largest coefficient
    leading: float = 1e-12
    #: |Im t| below which a root counts as real
    reality: float = 1e-7
    #: minimum pairwise root separation before a draw counts as on-caustic
    separation: float = 1e-7
    #: relative bound on |sum of magnifications| / sum |magnification|
    sum_residual: float = 1e-9
    #: residual bound for f(x, y) = s after back-substitution
    preimage: float = 1e-8
    #: scaled bound below which a back-substitution denominator is singular
    backsub: float = 1e-8
    #: bisection width for caustic boundary points in scans
    caustic_bracket: float = 1e-6


DEFAULT = Tolerances()
