"""Command-line interface.

Exit codes: 0 success / no violated claim, 1 bad input or parse error,
2 brute-force cross-check mismatch, 3 a scanned claim was violated (for
``scan`` this is the expected outcome once the catalog contains the affine
Frobenius groups; for ``bijection`` it means no bijection exists).

Cayley-table file format: optional ``#`` comment lines; first data line is
the order n; then n lines of n whitespace-separated encodings in [0, n) with
entry (i, j) = encoding of element_i * element_j and 0 the identity.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import group_core, order_sums, verify
from .group_core import CayleyTableError
from .numtheory import frobenius_ratio_closed_form, psi_cyclic
from .subgroup_lattice import all_subgroups, generate
from .order_sums import (
    psi_relative,
    psi_relative_frobenius_formula,
    psi_relative_upper_bound,
    ratio_bounds_for_index,
)

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_BAD_INPUT = 1
EXIT_MISMATCH = 2
EXIT_VIOLATION = 3


def _rational(fr: Fraction) -> dict:
    return {"num": str(fr.numerator), "den": str(fr.denominator)}


def _emit_json(path: str, command: str, results, started: float) -> None:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "results": results,
        "timing_ms": int((time.monotonic() - started) * 1000),
    }
    text = json.dumps(doc, indent=2) + "\n"
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _approx(fr: Fraction) -> str:
    return f"{float(fr):.6g}"


def load_cayley_file(path: str):
    """Parse and validate a Cayley-table file; raises ValueError with the
    offending line number on malformed input."""
    rows = []
    n = None
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                values = [int(tok) for tok in line.split()]
            except ValueError:
                raise ValueError(f"{path}:{lineno}: non-integer token")
            if n is None:
                if len(values) != 1 or values[0] < 1:
                    raise ValueError(f"{path}:{lineno}: expected a single positive order")
                n = values[0]
                continue
            if len(values) != n:
                raise ValueError(f"{path}:{lineno}: expected {n} entries, got {len(values)}")
            rows.append(values)
    if n is None:
        raise ValueError(f"{path}: empty file")
    if len(rows) != n:
        raise ValueError(f"{path}: expected {n} table rows, got {len(rows)}")
    return group_core.from_cayley_table(rows, name=path)


def _parse_generators(text: str):
    try:
        return [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise ValueError(f"bad generator list {text!r}: expected comma-separated integers")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_psi_cyclic(args) -> int:
    started = time.monotonic()
    n = args.n
    if n < 1:
        print(f"error: need n >= 1, got {n}", file=sys.stderr)
        return EXIT_BAD_INPUT
    value = psi_cyclic(n)
    results = [{"n": n, "psi_cyclic": str(value)}]
    code = EXIT_OK
    if args.brute_force:
        if n > 10 ** 6:
            print("error: brute-force path capped at n = 10^6", file=sys.stderr)
            return EXIT_BAD_INPUT
        from math import gcd

        brute = sum(n // gcd(n, k) for k in range(n))
        verdict = "OK" if brute == value else "MISMATCH"
        print(f"{value} {brute} {verdict}")
        results[0]["brute_force"] = str(brute)
        results[0]["verdict"] = verdict
        if brute != value:
            code = EXIT_MISMATCH
    else:
        print(value)
    if args.json:
        _emit_json(args.json, f"psi-cyclic {n}", results, started)
    return code


def cmd_frobenius(args) -> int:
    started = time.monotonic()
    spec = verify.CounterexampleSpec(r=args.r, q=args.q or 0)
    try:
        spec.validate()
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    n, m = spec.group_order, spec.subgroup_order
    ratio = frobenius_ratio_closed_form(args.r)
    psi_h = psi_relative_frobenius_formula(2, args.r) * (spec.q or 1)
    print(f"group order n = {n}")
    print(f"subgroup order m = {m}")
    print(f"psi_H (closed form) = {psi_h}")
    result = {
        "r": args.r,
        "q": spec.q,
        "n": n,
        "m": m,
        "psi_h": str(psi_h),
        "ratio": _rational(ratio),
    }
    code = EXIT_OK
    if args.brute_force:
        G, H = verify.build_counterexample(spec)
        brute = psi_relative(G, H, threads=args.threads)
        verdict = "OK" if brute == psi_h else "MISMATCH"
        print(f"psi_H (brute force)  = {brute} {verdict}")
        result["brute_force"] = str(brute)
        result["verdict"] = verdict
        if verdict == "MISMATCH":
            code = EXIT_MISMATCH
    print(f"ratio = {ratio.numerator}/{ratio.denominator} (~{_approx(ratio)})")
    if ratio > 1:
        print("ratio > 1: VIOLATES the cyclic-reference upper bound")
    if args.json:
        cmd = f"frobenius --r {args.r}" + (f" --q {spec.q}" if spec.q else "")
        _emit_json(args.json, cmd, [result], started)
    return code


def cmd_scan(args) -> int:
    started = time.monotonic()
    catalog = verify.default_catalog(args.max_order, include_frobenius=args.include_frobenius)
    report = verify.scan_catalog(catalog, threads=args.threads)
    for res in report.results:
        mark = " VIOLATES" if res.violations else ""
        flags = "".join(
            [
                "N" if res.nilpotent else "-",
                "S" if res.solvable else "-",
                "C" if res.cyclic else "-",
            ]
        )
        print(f"{res.group:>14}  order {res.group_order:>4}  [{flags}]  "
              f"psi={res.psi_value}  psi(C_n)={res.psi_cyclic_value}{mark}")
    for name, err in report.errors:
        print(f"{name}: error: {err}", file=sys.stderr)
    print(f"{report.total_violations} violations across {len(report.results)} groups")
    if args.json:
        _emit_json(args.json, f"scan --max-order {args.max_order}", [report.to_json_dict()], started)
    return EXIT_VIOLATION if report.total_violations else EXIT_OK


def cmd_check_bounds(args) -> int:
    started = time.monotonic()
    try:
        G = load_cayley_file(args.group_file)
    except (ValueError, CayleyTableError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    failures = []
    rows = []
    for H in all_subgroups(G):
        m, q = H.order, H.index
        value = psi_relative(G, H, threads=args.threads)
        bound = psi_relative_upper_bound(m, q)
        checks = {"quadratic_bound": value <= bound}
        if q >= 2:
            bounds = ratio_bounds_for_index(q)
            ratio = Fraction(value, order_sums.cyclic_reference(G.order, m))
            checks["product_bound"] = ratio < bounds.product
            checks["spread_bound"] = ratio < bounds.spread
        max_rel = max(order_sums.relative_order(G, H, x) for x in G.elements())
        checks["relative_order_le_index"] = max_rel <= q
        ok = all(checks.values())
        if not ok:
            failures.append((m, checks))
        rows.append({"subgroup_order": m, "index": q, "psi_h": str(value),
                     "bound": str(bound), "checks": checks})
        status = "ok" if ok else "FAIL"
        print(f"subgroup order {m:>4} index {q:>4}: psi_H={value} <= {bound} [{status}]")
    print(f"{len(failures)} bound failures over {len(rows)} subgroups")
    if args.json:
        _emit_json(args.json, f"check-bounds {args.group_file}", rows, started)
    return EXIT_VIOLATION if failures else EXIT_OK


def cmd_ratios(args) -> int:
    started = time.monotonic()
    try:
        G = load_cayley_file(args.group_file)
    except (ValueError, CayleyTableError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    records = verify.subgroup_ratio_scan(G, threads=args.threads)
    for rec in records:
        mark = " VIOLATES" if rec.is_violation else ""
        print(f"subgroup order {rec.subgroup_order:>4}: psi_H={rec.psi_h}  "
              f"reference={rec.cyclic_reference}  "
              f"ratio={rec.ratio.numerator}/{rec.ratio.denominator}{mark}")
    violations = [rec for rec in records if rec.is_violation]
    print(f"{len(violations)} violations over {len(records)} subgroups")
    if args.json:
        _emit_json(args.json, f"ratios {args.group_file}",
                   [rec.to_json_dict() for rec in records], started)
    return EXIT_VIOLATION if violations else EXIT_OK


def cmd_bijection(args) -> int:
    started = time.monotonic()
    try:
        G = load_cayley_file(args.group_file)
        gens = _parse_generators(args.subgroup)
        for g in gens:
            G.check_encoding(g)
    except (ValueError, CayleyTableError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    H = generate(G, gens)
    result = verify.bijection_exists(G, H, threads=args.threads)
    if result.exists:
        print("BIJECTION EXISTS")
        doc = {"exists": True, "witness": list(result.witness)}
        code = EXIT_OK
    else:
        print("NO BIJECTION")
        print(f"deficient relative-order values (group side): {result.deficient_values}")
        print(f"reachable values (cyclic side): {result.neighborhood_values}")
        print(f"deficiency: {result.deficiency()}")
        doc = {
            "exists": False,
            "deficient_values": {str(k): v for k, v in result.deficient_values.items()},
            "neighborhood_values": {str(k): v for k, v in result.neighborhood_values.items()},
            "deficiency": result.deficiency(),
        }
        code = EXIT_VIOLATION
    if args.json:
        _emit_json(args.json, f"bijection {args.group_file} --subgroup {args.subgroup}",
                   [doc], started)
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relpsi",
        description="Exact sums of element orders of finite groups relative to subgroups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("psi-cyclic", help="order sum of the cyclic group C_n")
    p.add_argument("n", type=int)
    p.add_argument("--brute-force", action="store_true")
    p.add_argument("--json")
    p.set_defaults(func=cmd_psi_cyclic)

    p = sub.add_parser("frobenius", help="affine Frobenius counterexample pipeline")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--q", type=int, default=0)
    p.add_argument("--brute-force", action="store_true")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--json")
    p.set_defaults(func=cmd_frobenius)

    p = sub.add_parser("scan", help="scan the built-in group catalog")
    p.add_argument("--max-order", type=int, default=64)
    p.add_argument("--include-frobenius", action="store_true",
                   help="add the affine Frobenius field groups to the catalog")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("check-bounds", help="verify order-sum bounds on an ingested group")
    p.add_argument("group_file")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--json")
    p.set_defaults(func=cmd_check_bounds)

    p = sub.add_parser("ratios", help="per-subgroup ratio table for an ingested group")
    p.add_argument("group_file")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--json")
    p.set_defaults(func=cmd_ratios)

    p = sub.add_parser("bijection", help="order-divisibility bijection decision")
    p.add_argument("group_file")
    p.add_argument("--subgroup", required=True, help="comma-separated generator encodings")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--json")
    p.set_defaults(func=cmd_bijection)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_BAD_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (ValueError, CayleyTableError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
