"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Dict, List, Optional

from . import claims
from .combinat import perm_stats
from .errors import RiordanMomentsError
from .exactalg import ONE, parse_scalar
from .hankel import CLOSED_FORMS, HankelResult, hankel_det
from .matrix import Matrix
from .production import production_matrix
from .riordan import Family, family, moment_column, multiply, realize, stirling1_pair, stirling2_pair
from .series import DEFAULT_ORDER

EMIT_FAMILIES = {
    "sv": Family.SV_MOMENT,
    "keuler": Family.KEULER_MOMENT,
    "sv-shifted": Family.SV_SHIFTED_MOMENT,
    "keuler-shifted": Family.KEULER_SHIFTED_MOMENT,
}
EMIT_FAMILIES.update({f.value: f for f in Family})

TRIANGLES = ("bridge", "stirling1", "a079641-product", "x3-product", "production-keuler", "production-sv")


class UsageError(Exception):
    pass


def _check_n(n: int, order: int) -> None:
    if n < 0:
        raise UsageError(f"--n must be non-negative, got {n}")
    if n > order:
        raise UsageError(f"--n {n} exceeds --order {order}")


def _substitutions(args) -> Dict[str, object]:
    out = {}
    for var in ("x", "y", "k"):
        raw = getattr(args, var, None)
        if raw is None:
            continue
        try:
            out[var] = parse_scalar(raw)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"--{var} expects a rational number, got {raw!r}") from None
    return out


def _emit_lines(entries: List[str], payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for e in entries:
            print(e)


def _rows_text(m: Matrix) -> List[str]:
    return [" ".join(r) for r in m.to_strings(compact=True)]


def cmd_emit(args) -> int:
    _check_n(args.n, args.order)
    fam = EMIT_FAMILIES[args.family]
    subs = _substitutions(args)
    mu = moment_column(family(fam, args.order), args.n)
    entries = [str(p.subs(**subs)) for p in mu]
    payload = {
        "family": args.family,
        "n": args.n,
        "entries": entries,
        "substitutions": {k: str(v) for k, v in subs.items()},
    }
    _emit_lines(entries, payload, args.format)
    return 0


def cmd_verify(args) -> int:
    ids = args.claim or ["all"]
    if "all" in ids:
        ids = list(claims.REGISTRY)
    unknown = [c for c in ids if c not in claims.REGISTRY]
    if unknown:
        raise UsageError(f"unknown claim id(s): {', '.join(unknown)}; known: {', '.join(claims.REGISTRY)}")
    if args.n is not None and args.n < 0:
        raise UsageError("--n must be non-negative")
    reports = claims.run_claims(ids, args.n, args.order)
    if args.format == "json":
        print(json.dumps([{"claim": r.claim, "status": r.status, "witness": r.witness,
                           "elapsed": round(r.elapsed, 6)} for r in reports]))
    else:
        for r in reports:
            line = f"{r.claim}: {r.status}"
            if args.timing:
                line += f" ({r.elapsed:.3f}s)"
            if r.witness:
                line += f" -- {r.witness}"
            print(line)
    return 0 if all(r.passed for r in reports) else 1


def build_triangle(name: str, n: int, order: int, x: Optional[object] = None) -> Matrix:
    size = n + 1
    order = max(order, size + 1)
    if name == "bridge":
        m = realize(family(Family.STIRLING_BRIDGE, order), size)
    elif name == "stirling1":
        m = realize(stirling1_pair(order), size)
    elif name == "a079641-product":
        m = realize(multiply(stirling2_pair(ONE, order), stirling1_pair(order)), size)
    elif name == "x3-product":
        m = realize(multiply(stirling2_pair(2, order), stirling1_pair(order)), size)
    elif name == "production-keuler":
        m = production_matrix(family(Family.KEULER_MOMENT, order), size)
    elif name == "production-sv":
        m = production_matrix(family(Family.SV_MOMENT, order), size)
    else:
        raise UsageError(f"unknown triangle {name!r}")
    return m if x is None else m.subs(x=x)


def _print_matrix(label: str, n: int, m: Matrix, subs: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps({"name": label, "n": n, "rows": m.to_strings(compact=True),
                          "substitutions": {k: str(v) for k, v in subs.items()}}, sort_keys=True))
    else:
        for line in _rows_text(m):
            print(line)


def cmd_triangle(args) -> int:
    _check_n(args.n, args.order)
    subs = _substitutions(args)
    m = build_triangle(args.name, args.n, args.order).subs(**subs)
    _print_matrix(args.name, args.n, m, subs, args.format)
    return 0


def cmd_production(args) -> int:
    _check_n(args.n, args.order)
    if args.n < 1:
        raise UsageError("--n is the matrix size and must be at least 1")
    fam = EMIT_FAMILIES[args.family]
    m = production_matrix(family(fam, max(args.order, args.n + 1)), args.n)
    _print_matrix(args.family, args.n, m, {}, args.format)
    return 0


def cmd_hankel(args) -> int:
    _check_n(args.n, args.order)
    fam = EMIT_FAMILIES[args.family]
    mu = moment_column(family(fam, max(args.order, 2 * args.n)), 2 * args.n)
    res = HankelResult(args.n, hankel_det(mu, args.n), CLOSED_FORMS[args.family](args.n))
    if args.format == "json":
        print(json.dumps({"family": args.family, "n": args.n, "determinant": str(res.determinant),
                          "closed_form": str(res.closed_form), "match": res.match}, sort_keys=True))
    else:
        print(f"determinant: {res.determinant}")
        print(f"closed form: {res.closed_form}")
        print(f"match: {'yes' if res.match else 'no'}")
    return 0 if res.match else 1


def cmd_oracle(args) -> int:
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    stats = perm_stats(args.n)
    poly = stats.polynomial()
    hist = sorted(stats.histogram.items())
    if args.format == "json":
        print(json.dumps({"n": args.n, "total": stats.total, "polynomial": str(poly),
                          "histogram": [{"exc": e, "cyc": c, "count": v} for (e, c), v in hist]}))
    else:
        print("exc cyc count")
        for (e, c), v in hist:
            print(f"{e} {c} {v}")
        print(f"total: {stats.total}")
        print(f"polynomial: {poly}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int, default=argparse.SUPPRESS,
                        help=f"series truncation order (default {DEFAULT_ORDER})")
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="riordanmoments", parents=[common],
                                description="Exact Riordan-array moment computations.")
    sub = p.add_subparsers(dest="command", required=True)

    def subst(sp):
        for var in ("x", "y", "k"):
            sp.add_argument(f"--{var}", help=f"substitute a rational value for {var}")

    e = sub.add_parser("emit", parents=[common], help="print the moment polynomials mu_0 .. mu_n")
    e.add_argument("--family", required=True, choices=sorted(EMIT_FAMILIES))
    e.add_argument("--n", type=int, required=True)
    subst(e)
    e.set_defaults(func=cmd_emit)

    v = sub.add_parser("verify", parents=[common], help="run registered symbolic claims")
    v.add_argument("--claim", nargs="+", metavar="ID", help="claim ids, or 'all'")
    v.add_argument("--n", type=int, default=None, help="override each claim's default size")
    v.add_argument("--timing", action="store_true", help="append elapsed time to each line")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("triangle", parents=[common], help="print rows 0 .. n of a named array")
    t.add_argument("--name", required=True, choices=TRIANGLES)
    t.add_argument("--n", type=int, required=True)
    subst(t)
    t.set_defaults(func=cmd_triangle)

    pr = sub.add_parser("production", parents=[common], help="print the n x n production matrix")
    pr.add_argument("--family", required=True, choices=sorted(EMIT_FAMILIES))
    pr.add_argument("--n", type=int, required=True)
    pr.set_defaults(func=cmd_production)

    h = sub.add_parser("hankel", parents=[common], help="Hankel determinant against its closed form")
    h.add_argument("--family", required=True, choices=sorted(CLOSED_FORMS))
    h.add_argument("--n", type=int, required=True)
    h.set_defaults(func=cmd_hankel)

    o = sub.add_parser("oracle", parents=[common], help="brute-force (exc, cyc) histogram over S_n")
    o.add_argument("--n", type=int, required=True)
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.order = getattr(args, "order", DEFAULT_ORDER)
    args.format = getattr(args, "format", "text")
    if args.order < 1:
        print("error: --order must be positive", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RiordanMomentsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
