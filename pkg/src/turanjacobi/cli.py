"""Command-line front end.

Exit codes: 0 when every checked statement holds, 1 when a mathematical
check fails, 2 for usage errors (bad arguments, unwritable output).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import __version__
from .exact import Poly, format_rational, parse_rational
from .identities import DEFAULT_SLOPES, IDENTITY_CHECKS, certify_wronskian
from .jacobi import FamilyParams, jacobi_on_ray
from .numeric import (DIRECT_SUM, MODES, EvalRequest, eval_jacobi_float, parse_grid,
                      sweep_delta)
from .turan import CERTIFIED_NEGATIVE, CERTIFIED_POSITIVE, SignCertificate, certify_theorem

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

PASS, FAIL, NOT_CERTIFIED = "pass", "fail", "not-certified"

CSV_HEADER = ("n", "a", "b", "x", "delta", "sign", "est_rel_err")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _slope(text: str) -> Fraction:
    try:
        q = parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if q < 0:
        raise argparse.ArgumentTypeError(f"slope must be nonnegative: {text}")
    return q


def _slope_list(text: str) -> list[Fraction]:
    return [_slope(part) for part in text.split(",")]


def _fmt_float(v: float) -> str:
    return format(float(v), ".17g")


def _poly_record(p: Poly) -> list[str]:
    return [format_rational(c) for c in p.coeffs]


def certificate_record(cert: SignCertificate) -> dict:
    """Canonical JSON-ready form of a SignCertificate; exact fields as "p/q"."""
    return {
        "target": _poly_record(cert.target),
        "interval": cert.interval,
        "base_point": None if cert.base_point is None else format_rational(cert.base_point),
        "multiplicity_at_base": cert.multiplicity_at_base,
        "root_count_inside": cert.root_count_inside,
        "variations": list(cert.variations),
        "sample_point": format_rational(cert.sample_point),
        "sample_sign": cert.sample_sign,
        "verdict": cert.verdict,
        "diagnostics": list(cert.diagnostics),
    }


def _params(n, fam):
    return {"n": n, "a": format_rational(fam.a), "b": format_rational(fam.b)}


def build_report(config: dict, results: list[dict]) -> dict:
    summary = {"pass": 0, "fail": 0, "not_certified": 0}
    key = {PASS: "pass", FAIL: "fail", NOT_CERTIFIED: "not_certified"}
    for r in results:
        summary[key[r["status"]]] += 1
    return {"version": __version__, "config": config, "results": results, "summary": summary}


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def _text_report(report: dict) -> str:
    lines = []
    for r in report["results"]:
        p = r["parameters"]
        lines.append(f"{r['status']:>13}  {r['name']:<28} n={p['n']} a={p['a']} b={p['b']}")
    s = report["summary"]
    lines.append(f"pass={s['pass']} fail={s['fail']} not_certified={s['not_certified']}")
    return "\n".join(lines) + "\n"


def _grid(args) -> list[FamilyParams]:
    a_vals = args.a if args.a is not None else list(DEFAULT_SLOPES)
    b_vals = args.b if args.b is not None else list(DEFAULT_SLOPES)
    return [FamilyParams(a, b) for a in sorted(set(a_vals)) for b in sorted(set(b_vals))]


def _config(args, **extra) -> dict:
    cfg = {"command": args.command}
    cfg.update(extra)
    return cfg


def _emit(text: str, output):
    if output is None or output == "-":
        sys.stdout.write(text)
        return
    try:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {output}: {exc}") from None


def _render(report: dict, fmt: str) -> str:
    return _text_report(report) if fmt == "text" else dump_report(report)


# commands ----------------------------------------------------------------


def cmd_eval(args) -> int:
    fam = FamilyParams(args.a, args.b)
    if args.float:
        try:
            x = float(args.x)
        except ValueError:
            raise UsageError(f"not a float: {args.x!r}") from None
        if args.n == 0:
            value = 1.0
        else:
            value = eval_jacobi_float(args.n, float(fam.a * args.n), float(fam.b * args.n), x)
        out = repr(value)
    else:
        try:
            x = parse_rational(args.x)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        out = format_rational(jacobi_on_ray(args.n, fam)(x))
    _emit(out + "\n", args.output)
    return EXIT_OK


def cmd_poly(args) -> int:
    p = jacobi_on_ray(args.n, FamilyParams(args.a, args.b))
    _emit(", ".join(_poly_record(p)) + "\n", args.output)
    return EXIT_OK


def cmd_verify_identities(args) -> int:
    grid = _grid(args)
    results = []
    for n in range(1, args.n_max + 1):
        for fam in grid:
            for name, check in IDENTITY_CHECKS.items():
                rep = check(n, fam)
                results.append({
                    "name": name,
                    "parameters": _params(n, fam),
                    "status": PASS if rep.holds else FAIL,
                    "details": {"residual": _poly_record(rep.residual)},
                })
            cert = certify_wronskian(n, fam)
            results.append({
                "name": "wronskian_positive",
                "parameters": _params(n, fam),
                "status": PASS if cert.verdict == CERTIFIED_POSITIVE else FAIL,
                "details": {"certificate": certificate_record(cert)},
            })
    config = _config(args, n_max=args.n_max,
                     a=[format_rational(q) for q in sorted({f.a for f in grid})],
                     b=[format_rational(q) for q in sorted({f.b for f in grid})],
                     format=args.format)
    report = build_report(config, results)
    _emit(_render(report, args.format), args.output)
    return EXIT_OK if report["summary"]["fail"] == 0 else EXIT_FAIL


def cmd_certify(args) -> int:
    grid = _grid(args)
    results = []
    for n in range(1, args.n_max + 1):
        for fam in grid:
            cert = certify_theorem(n, fam)
            results.append({
                "name": "delta_negative_right_of_1",
                "parameters": _params(n, fam),
                "status": PASS if cert.verdict == CERTIFIED_NEGATIVE else NOT_CERTIFIED,
                "details": {"certificate": certificate_record(cert)},
            })
    config = _config(args, n_max=args.n_max,
                     a=[format_rational(q) for q in sorted({f.a for f in grid})],
                     b=[format_rational(q) for q in sorted({f.b for f in grid})],
                     format=args.format)
    report = build_report(config, results)
    _emit(_render(report, args.format), args.output)
    return EXIT_OK if report["summary"]["not_certified"] == 0 else EXIT_FAIL


def sweep_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([r.n, format_rational(r.a), format_rational(r.b), _fmt_float(r.x),
                    _fmt_float(r.delta_value), r.sign, _fmt_float(r.est_rel_err)])
    return buf.getvalue()


def cmd_sweep(args) -> int:
    try:
        xs = parse_grid(args.x_grid)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rows = []
    for fam in _grid(args):
        rows.extend(sweep_delta(EvalRequest(list(range(args.n_min, args.n_max + 1)), fam, xs,
                                            mode=args.mode)))
    _emit(sweep_csv(rows), args.output)
    return EXIT_OK


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {text}")
    return v


def _nonnegative(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="turanjacobi",
                description="Exact tools for Jacobi polynomials P_n^(an,bn) and their Turan-type determinant.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def single(sp):
        sp.add_argument("--n", type=_nonnegative, required=True)
        sp.add_argument("--a", type=_slope, required=True, help='slope of alpha, "p/q"')
        sp.add_argument("--b", type=_slope, required=True, help='slope of beta, "p/q"')
        sp.add_argument("--output", default=None)

    def grid(sp, n_max_default):
        sp.add_argument("--n-max", type=_positive, default=n_max_default)
        sp.add_argument("--a", type=_slope_list, default=None,
                        help='comma-separated slopes "p/q" (default 0,1/2,1,2,5/2)')
        sp.add_argument("--b", type=_slope_list, default=None)
        sp.add_argument("--output", default=None)

    sp = sub.add_parser("eval", help="evaluate P_n^(an,bn)(x)")
    single(sp)
    sp.add_argument("--x", required=True)
    sp.add_argument("--float", action="store_true", help="binary64 evaluation")
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("poly", help="exact coefficients of P_n^(an,bn), ascending")
    single(sp)
    sp.set_defaults(func=cmd_poly)

    sp = sub.add_parser("verify-identities", help="exact identity checks and Wronskian positivity")
    grid(sp, 8)
    sp.add_argument("--format", choices=("json", "text"), default="json")
    sp.set_defaults(func=cmd_verify_identities)

    sp = sub.add_parser("certify", help="Sturm certificates for Delta_n < 0 on (1, oo)")
    grid(sp, 6)
    sp.add_argument("--format", choices=("json", "text"), default="json")
    sp.set_defaults(func=cmd_certify)

    sp = sub.add_parser("sweep", help="binary64 sweep of Delta_n over an x grid, CSV out")
    grid(sp, 30)
    sp.add_argument("--n-min", type=_positive, default=1)
    sp.add_argument("--x-grid", default="1:10:0.5", help="start:stop:step")
    sp.add_argument("--mode", choices=MODES, default=DIRECT_SUM)
    sp.set_defaults(func=cmd_sweep)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "n_min", 1) > getattr(args, "n_max", 1):
            raise UsageError("--n-min exceeds --n-max")
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"{parser.prog}: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
