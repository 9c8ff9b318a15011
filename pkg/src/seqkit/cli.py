"""``seqkit`` command line.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .bfile import BFileError, fetch_bfile
from .convolution import PolynomialReversionProblem, solve_reversion_recurrence
from .literals import LiteralError, parse_coefficients, parse_series
from .patalan import (
    patalan_c_recurrence,
    patalan_pth_power_recurrence,
    patalan_sequence,
    super_patalan_matrix,
)
from .riordan import (
    a_seq_via_inv_rev,
    a_sequence,
    a_sequence_recurrence_check,
    dual_generators,
    dual_riordan,
    dual_via_window,
    recursive_matrix_window,
    riordan_build,
    window_orders,
)
from .series import PowerSeries, SeriesError, format_rational, ps_revert
from .verify import FAIL, SKIP, TABLE1, cmd_verify_oeis

DEFAULT_ORDER = 32


class UsageError(Exception):
    pass


def _fmt(value: Fraction) -> str:
    return str(value)


def _seq_text(values) -> str:
    return ", ".join(_fmt(v) for v in values)


def _matrix_text(rows) -> str:
    cells = [[_fmt(v) for v in row] for row in rows]
    width = max((len(c) for row in cells for c in row), default=1)
    return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def _matrix_json(rows) -> list:
    return [[format_rational(v) for v in row] for row in rows]


def _emit(args, text: str, payload: dict) -> None:
    if args.json:
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


def cmd_revert(args) -> int:
    f = parse_series(args.poly, args.order)
    b = ps_revert(f)
    _emit(args, _seq_text(b.coeffs), {"input": f.to_json(), "reversion": b.to_json()})
    return 0


def cmd_recur(args) -> int:
    b = parse_coefficients(args.poly)
    prob = PolynomialReversionProblem(b, Fraction(args.root), args.order)
    a = solve_reversion_recurrence(prob)
    series = PowerSeries(a)
    _emit(args, _seq_text(a), {"B": [format_rational(c) for c in prob.B],
                               "root": format_rational(prob.root), "series": series.to_json()})
    return 0


def cmd_riordan(args) -> int:
    r = riordan_build(parse_series(args.g, args.order), parse_series(args.f, args.order), args.order)
    _emit(args, _matrix_text(r.entries), {"g": args.g, "f": args.f, "matrix": r.as_window().to_json()})
    return 0


def cmd_recmat(args) -> int:
    N = args.order
    g_order, f_order = window_orders(N)
    w = recursive_matrix_window(parse_series(args.g, g_order), parse_series(args.f, f_order), N)
    header = f"D(n,k) for n,k in [{-N}, {N}]; top-left is (-{N}, -{N})"
    _emit(args, header + "\n" + _matrix_text(w.entries),
          {"g": args.g, "f": args.f, "matrix": w.to_json()})
    return 0


def cmd_dual(args) -> int:
    N = args.order
    g_order, f_order = window_orders(N)
    g, f = parse_series(args.g, g_order), parse_series(args.f, f_order)
    gd, fd = dual_generators(g.truncate(N + 1), f.truncate(N + 1))
    dual = dual_riordan(g.truncate(N + 1), f.truncate(N + 1), N)
    window = dual_via_window(g, f, N)
    agree = [list(r) for r in dual.entries] == window
    text = "\n".join([
        f"input  (g, f) = ({args.g}, {args.f})",
        f"  g: {_seq_text(g.truncate(N).coeffs)}",
        f"  f: {_seq_text(f.truncate(N).coeffs)}",
        "dual   (fhat*g(fbar), fbar)",
        f"  g*: {_seq_text(gd.coeffs)}",
        f"  f*: {_seq_text(fd.coeffs)}",
        f"window D(-j,-i) agrees with formula: {'yes' if agree else 'NO'}",
        _matrix_text(dual.entries),
    ])
    _emit(args, text, {"input": {"g": args.g, "f": args.f},
                       "dual": {"g": gd.to_json(), "f": fd.to_json()},
                       "window_agrees": agree,
                       "matrix": dual.as_window().to_json()})
    return 0 if agree else 1


def cmd_aseq(args) -> int:
    M = args.order
    f = parse_series(args.f, M + 1)
    r = riordan_build(PowerSeries.one(M + 1), f, M + 1)
    direct = a_sequence(r, M)
    via = a_seq_via_inv_rev(f.shift_down(1).coeffs, M)
    holds = a_sequence_recurrence_check(r, direct)
    agree = direct == via
    text = "\n".join([
        f"x/fbar(x):       {_seq_text(direct.terms)}",
        f"INV(REV(f/x)):   {_seq_text(via.terms)}",
        f"routes agree: {'yes' if agree else 'NO'}; row recurrence holds: {'yes' if holds else 'NO'}",
    ])
    _emit(args, text, {"f": args.f, "a_sequence": [format_rational(t) for t in direct.terms],
                       "inv_rev": [format_rational(t) for t in via.terms],
                       "agree": agree, "recurrence_holds": holds})
    return 0 if agree and holds else 1


def cmd_patalan(args) -> int:
    p, N = args.p, args.order
    if args.q is not None:
        q = super_patalan_matrix(p, args.q, N)
        _emit(args, _matrix_text(q), {"p": p, "q": args.q, "matrix": _matrix_json(q)})
        return 0
    routes = {
        "convolution": patalan_sequence,
        "reversion": lambda p, N: patalan_c_recurrence(p, N + 1)[1:],
        "pth-power": lambda p, N: patalan_pth_power_recurrence(p, N + 1)[1:],
    }
    a = routes[args.route](p, N)
    _emit(args, _seq_text(a), {"p": p, "route": args.route, "terms": [format_rational(t) for t in a]})
    return 0


def cmd_verify(args) -> int:
    if args.fetch:
        ids = [oeis_id for oeis_id, _ in TABLE1] + ["A000108", "A068555", "A046521", "A283150", "A283151"]
        for oeis_id in ids:
            try:
                path = fetch_bfile(oeis_id, args.fixtures)
                sys.stderr.write(f"fetched {path}\n")
            except OSError as exc:
                sys.stderr.write(f"could not fetch {oeis_id}: {exc}\n")
    report = cmd_verify_oeis(args.fixtures, args.order)
    sys.stdout.write(report.dumps() if args.json else report.render())
    statuses = {c.status for c in report.checks}
    if FAIL in statuses or (args.strict and SKIP in statuses):
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seqkit",
        description="Exact series reversion, convolution recurrences and Riordan arrays.")
    sub = parser.add_subparsers(dest="command", metavar="<command>")
    sub.required = True

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--order", type=int, default=DEFAULT_ORDER, help="truncation order N (default 32)")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = add("revert", cmd_revert, "compositional inverse of a valuation-one series")
    p.add_argument("--poly", required=True)

    p = add("recur", cmd_recur, "series whose reversion is the polynomial B, from a chosen root")
    p.add_argument("--poly", required=True, help="coefficients of B, constant term first")
    p.add_argument("--root", default="0", help="a0, a rational root of B (default 0)")

    p = add("riordan", cmd_riordan, "realise R(g, f)")
    p.add_argument("--g", required=True)
    p.add_argument("--f", required=True)

    p = add("recmat", cmd_recmat, "window of the recursive matrix D(g, f); --order is the halfwidth")
    p.add_argument("--g", required=True)
    p.add_argument("--f", required=True)

    p = add("dual", cmd_dual, "dual Riordan array, by formula and from the recursive matrix")
    p.add_argument("--g", required=True)
    p.add_argument("--f", required=True)

    p = add("aseq", cmd_aseq, "A-sequence of R(1, f), two ways")
    p.add_argument("--f", required=True)

    p = add("patalan", cmd_patalan, "Patalan numbers, or the super Patalan matrix with --q")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int)
    p.add_argument("--route", choices=("convolution", "reversion", "pth-power"), default="convolution")

    p = add("verify", cmd_verify, "check computed sequences against OEIS b-file fixtures")
    p.add_argument("--fixtures", default="fixtures")
    p.add_argument("--fetch", action="store_true", help="download b-files from oeis.org first")
    p.add_argument("--strict", action="store_true", help="treat skipped checks as failures")
    return parser


_SERIES_OPTIONS = ("--g", "--f", "--poly", "--root")


def _attach_values(argv: list[str]) -> list[str]:
    """Turn ``--f -x/(1-x)`` into ``--f=-x/(1-x)`` so argparse keeps the sign."""
    out, i = [], 0
    while i < len(argv):
        if argv[i] in _SERIES_OPTIONS and i + 1 < len(argv):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_attach_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.order < 1:
            raise UsageError("--order must be positive")
        return args.func(args)
    except (UsageError, LiteralError, SeriesError, BFileError, ValueError) as exc:
        sys.stderr.write(f"seqkit {args.command}: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
