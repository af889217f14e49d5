"""Command-line front end: ``planarharm build|verify|table|calogero check``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys

from . import calogero, pbasis, planar, special
from .exactalg import MultiPoly, Params, Rational, to_json_obj, to_latex, to_text
from .harmonic import HarmonicLabel, all_labels, build_harmonic
from .verify import SUITES, run_suites, sample_params

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


class UsageError(Exception):
    pass


def rational_arg(text: str) -> Rational:
    if not _RATIONAL.match(text.strip()):
        raise argparse.ArgumentTypeError(f"expected an integer or p/q, got {text!r}")
    num, _, den = text.strip().partition("/")
    if den and int(den) == 0:
        raise argparse.ArgumentTypeError("zero denominator")
    return Rational(int(num), int(den or 1))


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--N", type=int, default=3, help="number of variables (>= 2)")
    p.add_argument("--k", type=rational_arg, default=None, help="multiplicity k as p/q")
    p.add_argument("--k1", type=rational_arg, default=None, help="multiplicity k1 as p/q")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=3)
    p.add_argument("--format", choices=("json", "csv", "latex"), default=None)
    p.add_argument("--max-n", type=int, default=5, dest="max_n")
    return p


DEFAULT_K = Rational(1, 2)
DEFAULT_K1 = Rational(1, 3)


def _fixed_params(args) -> Params:
    if args.N < 2:
        raise UsageError("--N must be at least 2")
    k = DEFAULT_K if args.k is None else args.k
    k1 = DEFAULT_K1 if args.k1 is None else args.k1
    return Params(args.N, k, k1)


def _params_doc(P: Params) -> dict:
    return {"N": P.N, "k": str(P.k), "k1": str(P.k1)}


# build ------------------------------------------------------------------------

def cmd_build(args, out) -> int:
    P = _fixed_params(args)
    if args.basis is None:
        if args.n is None:
            raise UsageError("build needs --n (and optionally --eps) or --basis")
        try:
            label = HarmonicLabel(args.n, args.eps)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        poly = build_harmonic(label, P).poly
        name = f"h[{label.n},{label.eps}]"
    elif args.basis in (planar.PHI, planar.PSI):
        if args.order is None or args.j is None:
            raise UsageError(f"--basis {args.basis} needs --order and --j")
        if args.order < 0 or not 0 <= args.j <= args.order:
            raise UsageError(f"label ({args.order}, {args.j}) out of range")
        poly = planar.basis_element(args.basis, args.order, args.j, P)
        name = f"{args.basis}[{args.order},{args.j}]"
    else:
        if args.alpha is None:
            raise UsageError("--basis p needs --alpha a1,...,aN")
        try:
            alpha = tuple(int(a) for a in args.alpha.split(","))
            poly = pbasis.p_alpha(alpha, P)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        name = "p[" + ",".join(map(str, alpha)) + "]"
    _emit_poly(name, poly, P, args.format or "json", out)
    return 0


def _emit_poly(name: str, poly: MultiPoly, P: Params, fmt: str, out) -> None:
    if fmt == "json":
        doc = {"name": name, "params": _params_doc(P), "world": poly.world,
               "text": to_text(poly), "poly": to_json_obj(poly)}
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    elif fmt == "latex":
        out.write(to_latex(poly) + "\n")
    else:
        w = csv.writer(out, lineterminator="\n")
        w.writerow([f"e{i}" for i in range(1, P.N + 1)] + ["coef"])
        for m, c in poly.sorted_terms():
            w.writerow(list(m) + [str(c)])


# verify -----------------------------------------------------------------------

def cmd_verify(args, out) -> int:
    if args.N < 2 or args.samples < 1 or args.max_n < 0:
        raise UsageError("need N >= 2, samples >= 1, max-n >= 0")
    if args.k is not None or args.k1 is not None:
        params_list = [_fixed_params(args)]
    else:
        params_list = sample_params(args.N, args.samples, args.seed)
    names = args.suite or None
    unknown = set(names or ()) - set(SUITES)
    if unknown:
        raise UsageError(f"unknown suite(s): {', '.join(sorted(unknown))}")
    results = run_suites(params_list, args.max_n, args.seed, names, corrupt=args.inject_fault)
    ok = all(r.passed for r in results)
    if (args.format or "text") == "json":
        doc = {
            "params": [_params_doc(P) for P in params_list],
            "max_n": args.max_n,
            "seed": args.seed,
            "suites": [{"name": r.name, "passed": r.passed, "checked": r.checked,
                        "counterexample": r.failure} for r in results],
            "passed": ok,
        }
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        out.write("params: " + "; ".join(f"N={P.N} k={P.k} k1={P.k1}" for P in params_list) + "\n")
        for r in results:
            out.write(f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.checked} checks)\n")
            if r.failure is not None:
                out.write("  counterexample: " + json.dumps(r.failure, sort_keys=True) + "\n")
        out.write(("PASS" if ok else "FAIL") + f" {sum(r.passed for r in results)}/{len(results)}\n")
    return 0 if ok else 1


# table ------------------------------------------------------------------------

def _rows(kind: str, P: Params, max_n: int):
    labels = all_labels(max_n)
    if kind == "values":
        header = ["label", "closed_form", "direct", "agreement"]
        for lab in labels:
            a, b = special.value_at_ones(lab, P), special.value_at_ones_direct(lab, P)
            yield header, [str(lab), str(a), str(b), a == b]
    elif kind == "leading":
        header = ["label", "monomial", "closed_form", "direct", "agreement"]
        for lab in labels:
            seen = set()
            for which in (special.LEAD, special.MIRROR):
                mono = special.selector_monomial(lab, which, P.N)
                if mono in seen:
                    continue
                seen.add(mono)
                a = special.leading_coefficient(lab, which, P)
                b = special.leading_coefficient_direct(lab, which, P)
                yield header, [str(lab), "x^" + "".join(map(str, mono)), str(a), str(b), a == b]
    else:
        header = ["label", "pairing", "x0_times_tpower", "agreement"]
        for lab in labels:
            h = build_harmonic(lab, P).poly
            pairing = special.operator_pairing(h, h, P)
            alt = special.value_at_x0(lab, P) * special.tpower_scalar(lab, P)
            yield header, [str(lab), str(pairing), str(alt), pairing == alt]


def cmd_table(args, out) -> int:
    P = _fixed_params(args)
    if args.max_n < 0:
        raise UsageError("--max-n must be non-negative")
    rows = list(_rows(args.kind, P, args.max_n))
    header = rows[0][0] if rows else []
    body = [r for _, r in rows]
    fmt = args.format or "csv"
    if fmt == "latex":
        out.write("\\begin{tabular}{" + "l" * len(header) + "}\n")
        out.write(" & ".join(h.replace("_", "\\_") for h in header) + " \\\\\n\\hline\n")
        for r in body:
            out.write(" & ".join(_latex_cell(v) for v in r) + " \\\\\n")
        out.write("\\end{tabular}\n")
    elif fmt == "json":
        doc = {"kind": args.kind, "params": _params_doc(P),
               "rows": [dict(zip(header, r)) for r in body]}
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        for r in body:
            w.writerow([str(v).lower() if isinstance(v, bool) else v for v in r])
    return 0 if all(r[-1] for r in body) else 1


def _latex_cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    s = str(v)
    if "/" in s:
        num, den = s.split("/")
        sign = "-" if num.startswith("-") else ""
        return f"${sign}\\frac{{{num.lstrip('-')}}}{{{den}}}$"
    return s.replace("[", "_{").replace("]", "}") if s.startswith("h[") else s


# calogero ---------------------------------------------------------------------

def cmd_calogero(args, out) -> int:
    P = _fixed_params(args)
    if args.m < 0 or args.n < 0:
        raise UsageError("--m and --n must be non-negative")
    try:
        cp = calogero.CalogeroParams(P, args.omega)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    label = calogero.EigenLabel.natural(args.m, args.n, P)
    harmonics = [HarmonicLabel(args.m, 0)] + ([HarmonicLabel(args.m - 1, 1)] if args.m else [])
    ok = True
    out.write(f"eigenvalue 2*omega*(m+2n+N*k2) = {label.eigenvalue(cp)}\n")
    for h in harmonics:
        good = calogero.check_eigen(label, h, cp)
        ok &= good
        out.write(f"{'PASS' if good else 'FAIL'} L_{args.n}^({label.c})(omega|x|^2) {h}\n")
    return 0 if ok else 1


# entry point --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="planarharm",
                                     description="Exact planar harmonic polynomials of type B.")
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", parents=[common], help="emit a polynomial")
    b.add_argument("--n", type=int)
    b.add_argument("--eps", type=int, default=0)
    b.add_argument("--basis", choices=("phi", "psi", "p"))
    b.add_argument("--order", type=int)
    b.add_argument("--j", type=int)
    b.add_argument("--alpha", help="composition for --basis p, e.g. 2,0,1")
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", parents=[common], help="run the exact verification suites")
    v.add_argument("--suite", action="append", choices=sorted(SUITES))
    v.add_argument("--inject-fault", action="store_true",
                   help="corrupt one coefficient to confirm failures are reported")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", parents=[common], help="closed forms against direct values")
    t.add_argument("kind", choices=("values", "leading", "norms"))
    t.set_defaults(func=cmd_table)

    c = sub.add_parser("calogero", help="Calogero eigenfunction checks")
    csub = c.add_subparsers(dest="action", required=True)
    cc = csub.add_parser("check", parents=[common])
    cc.add_argument("--m", type=int, required=True)
    cc.add_argument("--n", type=int, required=True)
    cc.add_argument("--omega", type=rational_arg, required=True)
    cc.set_defaults(func=cmd_calogero)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run(argv=None) -> tuple[int, str]:
    """Run the CLI and capture stdout (convenience for tests)."""
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
