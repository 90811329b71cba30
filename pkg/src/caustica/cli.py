"""Command-line front end.

Exit codes: 0 success, 2 bad usage/input, 3 a numeric tolerance was missed,
4 an exact algebraic identity failed.  All floating-point numbers are
printed with 17 significant digits (round-trip precision for doubles), and
inside JSON they are emitted as decimal strings so output is byte-stable
across json library versions.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from . import catalog, solver
from .scan import (
    ScanGrid,
    consistency_check,
    locate_caustic,
    scan as scan_plane,
    write_caustic_csv,
    write_csv,
)
from .config import DEFAULT
from .coset import euler_trace, newton_sums_coset, newton_sums_recursive
from .errors import CausticaError, NearCausticError
from .poly import Polynomial, RationalFunc

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_TOLERANCE = 3
EXIT_IDENTITY = 4


class _UsageError(Exception):
    pass


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, complex):
        return f"{x.real:.17g}{x.imag:+.17g}j"
    return f"{float(x):.17g}"


def _jnum(x):
    """JSON value for a scalar: decimal string, or re/im pair for complex."""
    if isinstance(x, complex):
        return {"im": f"{x.imag:.17g}", "re": f"{x.real:.17g}"}
    if isinstance(x, Fraction):
        return str(x)
    return f"{float(x):.17g}"


def _emit_json(obj):
    print(json.dumps(obj, sort_keys=True, separators=(", ", ": ")))


def _parse_coeffs(text: str):
    """Ascending comma-separated coefficients, parsed exactly."""
    try:
        return [Fraction(tok.strip()) for tok in text.split(",")]
    except (ValueError, ZeroDivisionError) as e:
        raise _UsageError(f"bad coefficient list {text!r}: {e}")


def _parse_floats(text: str, expect: int | None = None):
    try:
        vals = [float(tok) for tok in text.split(",")]
    except ValueError as e:
        raise _UsageError(f"bad number list {text!r}: {e}")
    if expect is not None and len(vals) != expect:
        raise _UsageError(
            f"expected {expect} comma-separated values, got {len(vals)}"
        )
    return vals


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("CAUSTICA_SEED")
    return int(env) if env else 0


def _get_def(label: str):
    try:
        return catalog.get(label)
    except KeyError as e:
        raise _UsageError(e.args[0])


# -- subcommands ----------------------------------------------------------


def cmd_verify(args) -> int:
    labels = catalog.ADE_LABELS if args.label == "all" else (args.label,)
    worst = 0.0
    rows = []
    for label in labels:
        sdef = _get_def(label)
        batch = solver.run_batch(sdef, args.trials, _seed(args))
        w = max(r.rel_residual for r in batch.reports)
        worst = max(worst, w)
        rows.append((label, len(batch.reports), w,
                     batch.rejected_caustic + batch.rejected_numeric))
    if args.json:
        _emit_json({
            "results": [
                {"label": lb, "rejected": rej, "trials": n,
                 "worst_rel_residual": f"{w:.17g}"}
                for lb, n, w, rej in rows
            ],
            "seed": _seed(args),
            "tolerance": f"{DEFAULT.sum_residual:.17g}",
        })
    else:
        for lb, n, w, rej in rows:
            print(f"{lb:8s} trials={n} rejected={rej} "
                  f"worst_rel_residual={w:.17g}")
    return EXIT_OK if worst <= DEFAULT.sum_residual else EXIT_TOLERANCE


def cmd_trace(args) -> int:
    phi = Polynomial(_parse_coeffs(args.phi))
    num = Polynomial(_parse_coeffs(args.num))
    den = Polynomial(_parse_coeffs(args.den)) if args.den else Polynomial([Fraction(1)])
    try:
        tr = euler_trace(RationalFunc(num, den), phi)
    except CausticaError as e:
        print(f"caustica: {e}", file=sys.stderr)
        return EXIT_IDENTITY
    if args.json:
        _emit_json({"trace": _jnum(tr)})
    else:
        print(_fmt(tr))
    return EXIT_OK


def cmd_newton(args) -> int:
    phi = Polynomial(_parse_coeffs(args.phi))
    try:
        by_coset = newton_sums_coset(phi, args.upto)
        by_recursion = newton_sums_recursive(phi, args.upto)
    except CausticaError as e:
        print(f"caustica: {e}", file=sys.stderr)
        return EXIT_IDENTITY
    if by_coset.values != by_recursion.values:
        print("caustica: coset and recursion Newton sums disagree",
              file=sys.stderr)
        return EXIT_IDENTITY
    if args.json:
        _emit_json({"newton_sums": [_jnum(v) for v in by_coset.values]})
    else:
        for k, v in enumerate(by_coset.values):
            print(f"N_{k} = {_fmt(v)}")
    return EXIT_OK


def cmd_preimages(args) -> int:
    sdef = _get_def(args.label)
    c = tuple(_parse_floats(args.c, sdef.id.n_params)) if sdef.id.n_params else ()
    s = tuple(_parse_floats(args.s, 2))
    try:
        report = solver.magnification_sum(sdef, c, s)
    except NearCausticError as e:
        print(f"caustica: {e}", file=sys.stderr)
        return EXIT_TOLERANCE
    except CausticaError as e:
        print(f"caustica: {e}", file=sys.stderr)
        return EXIT_TOLERANCE
    if args.json:
        _emit_json({
            "label": report.ade_label,
            "preimages": [
                {"mag": _jnum(p.mag), "real": p.is_real,
                 "x": _jnum(p.point[0]), "y": _jnum(p.point[1])}
                for p in report.preimages
            ],
            "rel_residual": f"{report.rel_residual:.17g}",
            "total": _jnum(report.total),
        })
    else:
        for p in report.preimages:
            tag = "real   " if p.is_real else "complex"
            print(f"{tag} x={_fmt(p.point[0])} y={_fmt(p.point[1])} "
                  f"mag={_fmt(p.mag)}")
        print(f"sum={_fmt(report.total)} rel_residual={report.rel_residual:.17g}")
    return (EXIT_OK if report.rel_residual <= DEFAULT.sum_residual
            else EXIT_TOLERANCE)


def cmd_scan(args) -> int:
    sdef = _get_def(args.label)
    c = tuple(_parse_floats(args.c, sdef.id.n_params)) if sdef.id.n_params else ()
    lo1, hi1, lo2, hi2 = _parse_floats(args.window, 4)
    grid = ScanGrid(lo1, hi1, lo2, hi2, args.cells, args.cells)
    result = scan_plane(sdef, c, grid)
    consistency_check(sdef, c, result)
    locate_caustic(sdef, c, result)
    out = args.out or f"scan_{args.label}"
    write_csv(result, out + ".csv")
    write_caustic_csv(result, out + "_caustic.csv")
    written = [out + ".csv", out + "_caustic.csv"]
    if args.figure:
        from .figures import render_scan

        render_scan(result, out + ".png",
                    title=f"{sdef.id.common_name} (c = {args.c or 'none'})")
        written.append(out + ".png")
    best, where = result.max_count()
    print(f"max_real_images={best} at s=({where[0]:.17g},{where[1]:.17g})")
    for path in written:
        print(f"wrote {path}")
    return EXIT_OK


def cmd_identities(args) -> int:
    labels = catalog.ADE_LABELS if args.label == "all" else (args.label,)
    rng = random.Random(_seed(args))
    failures = 0
    for label in labels:
        sdef = _get_def(label)
        c, s = catalog.draw_params(sdef, rng)
        pt = (catalog.draw_rational(rng), catalog.draw_rational(rng))
        checks = (
            ("phi_vs_resultant", lambda: sdef.verify_phi_vs_resultant(c, s)),
            ("multiplier", lambda: sdef.verify_multiplier_identity(c, s)),
            ("grad_equivalence", lambda: sdef.verify_grad_equivalence(c, pt)),
            ("trace_zero", lambda: euler_trace(sdef.magnification(c, s),
                                               sdef.build_phi(c, s))),
        )
        for name, check in checks:
            try:
                check()
                status = "ok"
            except CausticaError as e:
                status = f"FAIL ({e})"
                failures += 1
            print(f"{label:8s} {name:18s} {status}")
    return EXIT_OK if failures == 0 else EXIT_IDENTITY


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="caustica",
        description="verify the zero-sum magnification law for the generic "
                    "caustic singularities",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add_seed(sp):
        sp.add_argument("--seed", type=int, default=None,
                        help="RNG seed (default: CAUSTICA_SEED env or 0)")

    sp = sub.add_parser("verify", help="random magnification-sum trials")
    sp.add_argument("label", help="ADE label, e.g. D4plus")
    sp.add_argument("--trials", type=int, default=50)
    sp.add_argument("--json", action="store_true")
    add_seed(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("verify-all", help="verify every catalog entry")
    sp.add_argument("--trials", type=int, default=50)
    sp.add_argument("--json", action="store_true")
    add_seed(sp)
    sp.set_defaults(func=cmd_verify, label="all")

    sp = sub.add_parser("trace", help="exact trace of num/den over roots of phi")
    sp.add_argument("--phi", required=True,
                    help="ascending comma-separated coefficients")
    sp.add_argument("--num", required=True)
    sp.add_argument("--den", default=None)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_trace)

    sp = sub.add_parser("newton", help="Newton power sums of the roots of phi")
    sp.add_argument("--phi", required=True)
    sp.add_argument("--upto", type=int, default=None)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_newton)

    sp = sub.add_parser("preimages", help="pre-images and magnifications at s")
    sp.add_argument("label")
    sp.add_argument("--c", default="", help="parameter values, comma-separated")
    sp.add_argument("--s", required=True, help="source point s1,s2")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_preimages)

    sp = sub.add_parser("scan", help="image-count scan of the source plane")
    sp.add_argument("label")
    sp.add_argument("--c", default="")
    sp.add_argument("--window", default="-2,2,-2,2",
                    help="s1_min,s1_max,s2_min,s2_max")
    sp.add_argument("--cells", type=int, default=32)
    sp.add_argument("--out", default=None, help="output path prefix")
    sp.add_argument("--figure", action="store_true",
                    help="also render a PNG heatmap next to the CSV")
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("identities", help="exact per-entry identity checks")
    sp.add_argument("label", nargs="?", default="all")
    add_seed(sp)
    sp.set_defaults(func=cmd_identities)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "upto", 0) is None and args.command == "newton":
        args.upto = Polynomial(_parse_coeffs(args.phi)).degree
    try:
        return args.func(args)
    except _UsageError as e:
        print(f"caustica: {e}", file=sys.stderr)
        return EXIT_USAGE
    except CausticaError as e:
        print(f"caustica: {e}", file=sys.stderr)
        return EXIT_TOLERANCE


if __name__ == "__main__":
    sys.exit(main())
