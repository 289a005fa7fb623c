"""Command-line front end: psi / pj / verify / converge / crosscheck.

Exit codes: 0 success, 1 usage or configuration error, 2 mathematical
identity failure, 3 budget exceeded.  Every run emits a manifest (the fully
resolved configuration, plus any warnings) on stderr; with --format json the
manifest is embedded in the output document instead.  Rationals serialize
as strings "p/q" so nothing is ever rounded; real logarithms are decimal
floats with 12 significant digits in CSV.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .algebra import Poly, QQ
from .catalan import admissible, dcv_product, catalan_hankel_det
from .curves import CurveSpec, random_curve
from .division import BudgetExceededError, hankel_psi, validate_psi
from .places import Place
from .series import METHODS, compare_tables, pj_table
from .verify import (
    converge_at_root,
    converge_resultant,
    crosscheck_elliptic,
    product_formula_check,
    resultant_identity,
    root_identity,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IDENTITY = 2
EXIT_BUDGET = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad flags; the contract here reserves 2 for
    # mathematical failures, so remap usage problems to exit code 1.
    def error(self, message):
        raise UsageError(message)


# -- serialization helpers ---------------------------------------------------


def rational_to_str(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def rational_from_str(s):
    return Fraction(s)


def poly_to_json(p):
    """JSON form of a rational polynomial: ascending coefficients as 'p/q' strings."""
    return {"coeffs": [rational_to_str(c) for c in p.coeffs]}


def poly_from_json(obj):
    return Poly(QQ, tuple(Fraction(s) for s in obj["coeffs"]))


def _fmt_float(x):
    return f"{x:.12g}"


# -- argument plumbing -------------------------------------------------------


def _parse_coeffs(text):
    try:
        return tuple(Fraction(part.strip()) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse --coeffs {text!r}: {exc}") from None


def _parse_n_range(text):
    """'a..b' or 'a..b..step' as an inclusive range."""
    parts = text.split("..")
    try:
        if len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
            step = 1
        elif len(parts) == 3:
            lo, hi, step = int(parts[0]), int(parts[1]), int(parts[2])
        else:
            raise ValueError("expected a..b or a..b..step")
        if step < 1 or hi < lo:
            raise ValueError("empty range")
    except ValueError as exc:
        raise UsageError(f"cannot parse --n-range {text!r}: {exc}") from None
    return list(range(lo, hi + 1, step))


def _resolve_ns(args):
    if getattr(args, "n_list", None):
        try:
            return sorted({int(s) for s in args.n_list.split(",")})
        except ValueError as exc:
            raise UsageError(f"cannot parse --n-list: {exc}") from None
    if getattr(args, "n_range", None):
        return _parse_n_range(args.n_range)
    raise UsageError("one of --n-range or --n-list is required")


def _curve_from_args(args):
    coeffs = _parse_coeffs(args.coeffs)
    try:
        return CurveSpec(args.genus, coeffs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _manifest(args, command, extra=None):
    config = {
        "command": command,
        "genus": args.genus,
        "coeffs": [rational_to_str(c) for c in _parse_coeffs(args.coeffs)]
        if getattr(args, "coeffs", None)
        else None,
        "format": getattr(args, "format", "text"),
        "out": getattr(args, "out", None),
        "jobs": getattr(args, "jobs", 1),
        "n_cap": getattr(args, "n_cap", None),
        "seed": getattr(args, "seed", None),
        "warnings": [],
    }
    if extra:
        config.update(extra)
    return config


def _emit(text_payload, manifest, args, json_results=None):
    """Write results to --out or stdout; manifest goes to stderr (or into JSON)."""
    fmt = getattr(args, "format", "text")
    if fmt == "json":
        document = {"manifest": manifest, "results": json_results}
        payload = json.dumps(document, indent=2, sort_keys=True) + "\n"
    else:
        payload = text_payload
        sys.stderr.write(json.dumps({"manifest": manifest}, sort_keys=True) + "\n")
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _pmap(fn, items, jobs):
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


# -- subcommands -------------------------------------------------------------


def _require_text_or_json(args):
    if getattr(args, "format", "text") == "csv":
        raise UsageError("csv output is only defined for the converge command")


def _cmd_psi(args):
    _require_text_or_json(args)
    curve = _curve_from_args(args)
    res = hankel_psi(curve, args.n, n_cap=args.n_cap)
    sign, ok = root_identity(curve, args.n, n_cap=args.n_cap)
    manifest = _manifest(args, "psi", {"n": args.n})
    record = {
        "n": res.n,
        "parity": res.parity,
        "degree": res.degree,
        "b": rational_to_str(res.b_n),
        "dim": res.dim,
        "d": res.d_n,
        "c": res.c_n,
        "sign": sign if ok else "unknown",
        "psi": poly_to_json(res.psi),
    }
    text = (
        f"psi_{res.n} = {res.psi}, deg {res.degree}, b={rational_to_str(res.b_n)}, "
        f"dim={res.dim}, d={res.d_n}, c={res.c_n}, sign={sign if ok else 'unknown'}\n"
    )
    _emit(text, manifest, args, json_results=[record])
    return EXIT_OK


def _cmd_pj(args):
    _require_text_or_json(args)
    curve = _curve_from_args(args)
    manifest = _manifest(args, "pj", {"max_j": args.max_j, "method": args.method})
    if args.method == "all":
        tables = {m: pj_table(curve, args.max_j, m) for m in METHODS}
        names = list(METHODS)
        reference = tables[names[0]]
        for other in names[1:]:
            diff = compare_tables(reference, tables[other])
            if diff is not None:
                j, k = diff
                manifest["warnings"].append(
                    f"methods {names[0]} and {other} disagree at P_{j}, x^{k}"
                )
                _emit(
                    f"DISAGREEMENT at P_{j}, coefficient of x^{k} "
                    f"({names[0]} vs {other})\n",
                    manifest,
                    args,
                    json_results=[{"disagreement": {"j": j, "exponent": k}}],
                )
                return EXIT_IDENTITY
        table = reference
    else:
        table = pj_table(curve, args.max_j, args.method)
    records = [
        {"j": j, "degree": table[j].degree, "p": poly_to_json(table[j])}
        for j in range(len(table))
    ]
    text = "".join(f"P_{j} = {table[j]}\n" for j in range(len(table)))
    _emit(text, manifest, args, json_results=records)
    return EXIT_OK


def _cmd_verify(args):
    _require_text_or_json(args)
    curve = _curve_from_args(args)
    ns = _resolve_ns(args)
    curves = [curve]
    if args.random_curves:
        rng = random.Random(args.seed if args.seed is not None else 0)
        curves += [random_curve(args.genus, rng) for _ in range(args.random_curves)]
    manifest = _manifest(
        args,
        "verify",
        {
            "n_values": ns,
            "random_curves": [
                [rational_to_str(a) for a in extra.coeffs] for extra in curves[1:]
            ],
        },
    )
    primes = [p for p in range(2, args.primes_max + 1) if all(p % q for q in range(2, p))]
    checks = []

    def run_one(task):
        cv, n = task
        local = []
        sign, ok = root_identity(cv, n, n_cap=args.n_cap)
        local.append(
            {"check": "root_identity", "n": n, "passed": ok, "sign": sign}
        )
        local.append(
            {
                "check": "resultant_identity",
                "n": n,
                "passed": resultant_identity(cv, n, n_cap=args.n_cap),
            }
        )
        pf = product_formula_check(cv, n, n_cap=args.n_cap)
        local.append(
            {
                "check": "product_formula",
                "n": n,
                "passed": pf.passes(),
                "total": pf.total,
            }
        )
        validation = validate_psi(hankel_psi(cv, n, n_cap=args.n_cap), primes)
        for c in validation.checks:
            local.append(
                {"check": f"psi_{c.name}", "n": n, "passed": c.passed, "detail": c.detail}
            )
        return local

    tasks = [(cv, n) for cv in curves for n in ns if n >= cv.genus]
    for result in _pmap(run_one, tasks, args.jobs):
        checks.extend(result)
    for l in range(1, 9):
        for m in range(1, 13):
            ok = catalan_hankel_det(l, m) == dcv_product(l, m)
            checks.append(
                {"check": "catalan_hankel_product", "l": l, "m": m, "passed": ok}
            )
    all_ok = all(c["passed"] for c in checks)
    lines = []
    for c in checks:
        tag = "PASS" if c["passed"] else "FAIL"
        where = f"n={c['n']}" if "n" in c else f"l={c['l']},m={c['m']}"
        lines.append(f"{tag} {c['check']} {where}\n")
    lines.append(("ALL PASS" if all_ok else "FAILURES PRESENT") + "\n")
    _emit("".join(lines), manifest, args, json_results=checks)
    return EXIT_OK if all_ok else EXIT_IDENTITY


def _cmd_converge(args):
    curve = _curve_from_args(args)
    ns = _resolve_ns(args)
    try:
        place = Place.parse(args.place)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    manifest = _manifest(
        args,
        "converge",
        {"place": str(place), "n_values": ns, "at_root": args.at_root},
    )
    if not place.is_archimedean:
        kept = []
        for n in ns:
            if admissible(curve.genus, n, place.prime):
                kept.append(n)
            else:
                manifest["warnings"].append(
                    f"n={n} skipped: p={place.prime} divides (n-g+1)...(n+g-1)"
                )
        ns = kept
    if args.at_root is not None:
        alpha = rational_from_str(args.at_root)
        try:
            rows = converge_at_root(curve, alpha, place, ns, n_cap=args.n_cap)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        # rows for distinct n are independent; fan out when asked to
        def row_of(n):
            return converge_resultant(curve, place, [n], n_cap=args.n_cap)[0]

        rows = _pmap(row_of, ns, args.jobs)
        rows.sort(key=lambda r: r.n)
    lines = ["n,value,target,error,bound\n"]
    for r in rows:
        lines.append(
            f"{r.n},{_fmt_float(r.value)},{_fmt_float(r.target)},"
            f"{_fmt_float(r.error)},{_fmt_float(r.bound)}\n"
        )
    records = [
        {
            "n": r.n,
            "value": r.value,
            "target": r.target,
            "error": r.error,
            "bound": r.bound,
        }
        for r in rows
    ]
    _emit("".join(lines), manifest, args, json_results=records)
    return EXIT_OK


def _cmd_crosscheck(args):
    _require_text_or_json(args)
    if args.genus != 1:
        raise UsageError("crosscheck is defined for genus 1 only")
    coeffs = _parse_coeffs(args.coeffs)
    if len(coeffs) != 3 or coeffs[0] != 0:
        raise UsageError(
            "crosscheck needs --coeffs 0,A,B (short Weierstrass y^2 = x^3 + Ax + B)"
        )
    A, B = coeffs[1], coeffs[2]
    try:
        report = crosscheck_elliptic(A, B, args.n_max, n_cap=args.n_cap)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    manifest = _manifest(args, "crosscheck", {"n_max": args.n_max})
    records = [
        {"n": n, "verdict": verdict, "sign": sign}
        for n, verdict, sign in report.verdicts
    ]
    lines = [f"n={n}: {verdict} (sign {sign})\n" for n, verdict, sign in report.verdicts]
    lines.append(("NO MISMATCH" if not report.has_mismatch else "MISMATCH FOUND") + "\n")
    _emit("".join(lines), manifest, args, json_results=records)
    return EXIT_OK if not report.has_mismatch else EXIT_IDENTITY


# -- parser ------------------------------------------------------------------


def _add_common(sub):
    sub.add_argument("--genus", type=int, required=True, help="curve genus g >= 1")
    sub.add_argument(
        "--coeffs",
        required=True,
        help="a_1,...,a_{2g+1} for f = x^(2g+1) + a_1 x^(2g) + ... + a_{2g+1} "
        "(rationals as p/q; constant term last)",
    )
    sub.add_argument("--format", choices=("text", "json", "csv"), default="text")
    sub.add_argument("--out", default=None, help="write results to this path")
    sub.add_argument("--jobs", type=int, default=1, help="worker threads for independent n")
    sub.add_argument("--n-cap", type=int, default=None, help="override the n budget cap")
    sub.add_argument("--seed", type=int, default=None, help="seed echoed in the manifest")


def build_parser():
    parser = _Parser(prog="cantordiv", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True)

    p_psi = subs.add_parser("psi", help="one division polynomial with its structure data")
    _add_common(p_psi)
    p_psi.add_argument("--n", type=int, required=True)
    p_psi.set_defaults(func=_cmd_psi)

    p_pj = subs.add_parser("pj", help="table of series coefficients P_j")
    _add_common(p_pj)
    p_pj.add_argument("--max-j", type=int, required=True)
    p_pj.add_argument("--method", choices=METHODS + ("all",), default="closed-form")
    p_pj.set_defaults(func=_cmd_pj)

    p_verify = subs.add_parser("verify", help="identity suite over a range of n")
    _add_common(p_verify)
    p_verify.add_argument("--n-range", default=None, help="inclusive a..b or a..b..step")
    p_verify.add_argument("--n-list", default=None, help="comma-separated n values")
    p_verify.add_argument("--primes-max", type=int, default=50)
    p_verify.add_argument(
        "--random-curves",
        type=int,
        default=0,
        help="additionally verify this many seeded random curves of the same genus",
    )
    p_verify.set_defaults(func=_cmd_verify)

    p_conv = subs.add_parser("converge", help="CSV convergence table at a place")
    _add_common(p_conv)
    p_conv.add_argument("--place", required=True, help="'arch' or 'p:<prime>'")
    p_conv.add_argument("--n-range", default=None)
    p_conv.add_argument("--n-list", default=None)
    p_conv.add_argument(
        "--at-root",
        default=None,
        help="rational root of f: table for psi_n^2 at that point instead of the resultant",
    )
    p_conv.set_defaults(func=_cmd_converge)

    p_cross = subs.add_parser("crosscheck", help="genus-1 comparison with the classical recurrence")
    _add_common(p_cross)
    p_cross.add_argument("--n-max", type=int, required=True)
    p_cross.set_defaults(func=_cmd_crosscheck)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except BudgetExceededError as exc:
        sys.stderr.write(f"budget exceeded: {exc}\n")
        return EXIT_BUDGET


def console_entry():
    sys.exit(main())


if __name__ == "__main__":
    console_entry()
