"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (``error[CODE]: message`` on
stderr), 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import constructions, harness, matrices, measures, screener, spectra, symmetry
from .errors import ParseError, SymtraceError
from .matrices import IntMatrix, RadicalMatrix, parse_matrix, format_matrix


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected an exact rational like 15/2, got {text!r}")


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _read_input(path: Optional[str]) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _read_matrix(args):
    return parse_matrix(_read_input(args.inp))


def _approx(q) -> str:
    return f"{float(Fraction(q)):.6f}"


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


# --- subcommand handlers (each returns the output document) ---------------------

def cmd_classify(args) -> str:
    return _dumps(matrices.classify(_read_matrix(args)).to_dict())


def cmd_symmetrize(args) -> str:
    A = _read_matrix(args)
    if not isinstance(A, IntMatrix):
        raise ParseError("symmetrize expects an integer matrix")
    return format_matrix(symmetry.symmetrize(A))


def cmd_rationalize(args) -> str:
    T = _read_matrix(args)
    if isinstance(T, IntMatrix):
        T = symmetry.symmetrize(T)
    B, cert = symmetry.rationalize(T)
    return _dumps({"matrix": [[str(x) for x in r] for r in B],
                   "tree_edges": [list(e) for e in cert.tree_edges],
                   "ratios": [str(r) for r in cert.ratios]})


def _char_poly_of(A):
    return spectra.char_poly_radical(A) if isinstance(A, RadicalMatrix) else spectra.char_poly(A)


def cmd_charpoly(args) -> str:
    p = _char_poly_of(_read_matrix(args))
    if args.human:
        return f"{p}\n# {p.pretty()}\n"
    return f"{p}\n"


def cmd_traces(args) -> str:
    A = _read_matrix(args)
    rows = []
    for k in args.k:
        t = measures.trace_k(A, k)
        row = {"k": k, "trace": str(t), "abs_trace": str(Fraction(t, A.n))}
        if args.human:
            row["abs_trace_approx"] = _approx(row["abs_trace"])
        rows.append(row)
    return _dumps({"n": A.n, "traces": rows})


def cmd_bounds(args) -> str:
    return _dumps(measures.check_bounds(_read_matrix(args), args.k_max).to_dict())


def cmd_construct(args) -> str:
    if args.family == "path":
        return format_matrix(constructions.path_matrix(args.n))
    if args.family == "tn":
        if args.trace is None:
            raise argparse.ArgumentTypeError("construct tn needs --trace")
        return format_matrix(constructions.construct_T(args.n, args.trace))
    if args.a1 is None or args.a2 is None:
        raise argparse.ArgumentTypeError("construct ln needs --a1 and --a2")
    A, info = constructions.construct_L(args.n, args.a1, args.a2)
    header = (f"# S2: {info.S2}\n# residual: {info.residual}\n# b: {' '.join(map(str, info.b))}\n"
              f"# w: {' '.join(map(str, info.w))}\n# kappa: {info.kappa}\n")
    return header + format_matrix(A)


def cmd_foursquare(args) -> str:
    return " ".join(str(b) for b in constructions.four_square(args.m).b) + "\n"


def _poly_lines(text: str) -> list:
    return [ln.split("#", 1)[0].strip() for ln in text.splitlines()]


def cmd_screen_charpoly(args) -> str:
    out = []
    for line in _poly_lines(_read_input(args.inp)):
        if not line:
            continue
        p = spectra.parse_poly(line)
        rec = screener.screen_char_poly(p, args.k_max).to_dict()
        rec["polynomial"] = str(p)
        out.append(_dumps(rec))
    return "".join(out)


def cmd_screen_minpoly(args) -> str:
    groups, current = [], []
    for line in _poly_lines(_read_input(args.inp)) + [""]:
        if line:
            current.append(spectra.parse_poly(line))
        elif current:
            groups.append(current)
            current = []
    out = []
    for factors in groups:
        rec = screener.min_poly_obstruction(factors).to_dict()
        rec["factors_input"] = [str(p) for p in factors]
        out.append(_dumps(rec))
    return "".join(out)


def _spec(args) -> harness.EnumSpec:
    return harness.EnumSpec(args.n, args.diag_max, args.off_max, dedupe=args.dedupe,
                            require_connected=not args.allow_disconnected,
                            require_pd=not args.allow_indefinite, budget=args.budget)


def cmd_enumerate(args) -> str:
    return "".join(_dumps({"rows": [list(r) for r in A.rows]})
                   for A in harness.enumerate_class(_spec(args)))


def cmd_campaign(args) -> str:
    return harness.verify_campaign(_spec(args), args.k_max, args.workers).to_json()


def cmd_spectrum(args) -> str:
    return harness.spectrum_csv(harness.spectrum_scan(_spec(args), args.k), args.human)


def cmd_density(args) -> str:
    return harness.density_report(args.r, args.kind, args.N, args.human)


# --- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the report here instead of standard output")
    common.add_argument("--human", action="store_true",
                        help="add approximate decimal columns (marked approx)")

    with_input = argparse.ArgumentParser(add_help=False)
    with_input.add_argument("--in", dest="inp", default=None,
                            help="input file (default: standard input)")

    enum = argparse.ArgumentParser(add_help=False)
    enum.add_argument("--n", type=_positive, required=True)
    enum.add_argument("--diag-max", type=_positive, required=True)
    enum.add_argument("--off-max", type=_positive, required=True)
    enum.add_argument("--dedupe", choices=["none", "canonical"], default="none")
    enum.add_argument("--allow-disconnected", action="store_true")
    enum.add_argument("--allow-indefinite", action="store_true")
    enum.add_argument("--budget", type=_positive, default=harness.DEFAULT_BUDGET)

    parser = argparse.ArgumentParser(prog="symtrace", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, parents, **kw):
        p = sub.add_parser(name, parents=[common] + parents, **kw)
        p.set_defaults(func=func)
        return p

    add("classify", cmd_classify, [with_input], help="report class-membership flags as JSON")
    add("symmetrize", cmd_symmetrize, [with_input], help="apply the symmetrization map")
    add("rationalize", cmd_rationalize, [with_input],
        help="rational matrix similar to a radical matrix")
    add("charpoly", cmd_charpoly, [with_input], help="exact characteristic polynomial")
    p = add("traces", cmd_traces, [with_input], help="exact trace-k measures")
    p.add_argument("--k", type=_positive, nargs="+", default=[1, 2])
    p = add("bounds", cmd_bounds, [with_input], help="trace measures against their lower bounds")
    p.add_argument("--k-max", type=_positive, default=2)
    p = add("construct", cmd_construct, [], help="build path, tn or ln matrices")
    p.add_argument("family", choices=["path", "tn", "ln"])
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--trace", type=int, help="trace for tn")
    p.add_argument("--a1", type=int, help="trace coefficient for ln")
    p.add_argument("--a2", type=int, help="second coefficient for ln")
    p = add("foursquare", cmd_foursquare, [], help="deterministic four-square decomposition")
    p.add_argument("m", type=int)
    p = add("screen-charpoly", cmd_screen_charpoly, [with_input],
            help="screen candidate characteristic polynomials (JSON lines)")
    p.add_argument("--k-max", type=_positive, default=1)
    add("screen-minpoly", cmd_screen_minpoly, [with_input],
        help="minimal-polynomial obstruction; factor groups separated by blank lines")
    add("enumerate", cmd_enumerate, [enum], help="stream enumerated matrices (JSON lines)")
    p = add("campaign", cmd_campaign, [enum], help="exhaustive bound verification (JSON)")
    p.add_argument("--k-max", type=_positive, default=2)
    p.add_argument("--workers", type=_positive, default=1)
    p = add("spectrum", cmd_spectrum, [enum], help="absolute trace-k spectrum (CSV)")
    p.add_argument("--k", type=int, choices=[1, 2], default=1)
    p = add("density", cmd_density, [], help="density construction report (CSV)")
    p.add_argument("--r", type=_fraction, required=True)
    p.add_argument("--kind", choices=["trace", "trace2"], default="trace")
    p.add_argument("--N", type=_positive, nargs="+", required=True)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = args.func(args)
    except argparse.ArgumentTypeError as exc:
        parser.print_usage(sys.stderr)
        print(f"symtrace: error: {exc}", file=sys.stderr)
        return 2
    except SymtraceError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error[E_DOMAIN]: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
