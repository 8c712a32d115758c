"""Command-line front end: ``anzahl {count,verify,bounds,identity,table}``."""

from __future__ import annotations

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import bounds as B
from . import hermitian as H
from . import identity as I
from . import oracle as O
from . import symplectic as S
from .errors import AnzahlError
from .field import construct_field, is_prime_power
from .forms import standard_form
from .qseries import Q, segre_count
from .report import RunReport, bound_item, identity_item, oracle_item, value_item

GEOMETRY_NOTE = (
    "Dimension conventions: --q is always the base parameter.  A hermitian "
    "geometry with --q 2 lives on GF(4)^n (the field has q^2 elements); a "
    "symplectic geometry with --q 2 lives on GF(2)^dim.  Symplectic dimensions "
    "(--dim, --j, --k) are raw, so they are usually even."
)

STATS = ("alpha", "beta", "gamma", "gamma-span", "rho", "segre")


def parse_q_list(text: str) -> list[int]:
    """``"2"``, ``"2,3,5"`` or ``"2..16"`` (every prime power in the range)."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = (int(x) for x in part.split(".."))
            out.extend(x for x in range(lo, hi + 1) if is_prime_power(x))
        else:
            x = int(part)
            if not is_prime_power(x):
                raise argparse.ArgumentTypeError(f"{x} is not a prime power")
            out.append(x)
    if not out:
        raise argparse.ArgumentTypeError(f"no prime powers in {text!r}")
    return out


def evaluate(geometry: str, stat: str, n: int, i: int, j: int, k: int, q):
    """Dispatch one closed-form evaluation; symplectic dimensions are raw."""
    if stat == "segre":
        return segre_count(n, k, j, q)
    if geometry == "hermitian":
        table = {
            "alpha": lambda: H.alpha_h(i, j, n, q),
            "beta": lambda: H.beta_h(i, j, n, k, q),
            "gamma": lambda: H.gamma_h(i, j, n, k, q),
            "gamma-span": lambda: H.gamma_h_span(i, j, n, q),
            "rho": lambda: H.rho_h(j, k, n, q),
        }
    else:
        table = {
            "alpha": lambda: S.alpha_s(i, j, n, q),
            "beta": lambda: S.beta_s(i, j, n, k, q),
            "gamma": lambda: S.gamma_s_raw(i, j, n, k, q),
            "gamma-span": lambda: S.gamma_s_span_raw(i, j, n, q),
            "rho": lambda: S.rho_s_raw(j, k, n, q),
        }
    return table[stat]()


def _stat_params(stat: str, n: int, i: int, j: int, k: int) -> dict:
    keep = {
        "alpha": ("n", "i", "j"),
        "beta": ("n", "i", "j", "k"),
        "gamma": ("n", "i", "j", "k"),
        "gamma-span": ("n", "i", "j"),
        "rho": ("n", "j", "k"),
        "segre": ("n", "j", "k"),
    }[stat]
    full = {"n": n, "i": i, "j": j, "k": k}
    return {key: full[key] for key in keep}


def _dimension(args) -> int:
    n = args.dim if args.dim is not None else args.n
    if n is None:
        raise AnzahlError("give the ambient dimension with --n or --dim")
    return n


def _qpoint(args):
    if args.symbolic:
        return Q
    if args.q is None:
        raise AnzahlError("give --q or --symbolic")
    return args.q


def cmd_count(args) -> RunReport:
    n = _dimension(args)
    q = _qpoint(args)
    value = evaluate(args.geometry, args.stat, n, args.i, args.j, args.k, q)
    grid = {"geometry": args.geometry, "q": "q" if args.symbolic else args.q}
    report = RunReport("count", grid)
    report.items.append(value_item(args.geometry, args.stat, _stat_params(args.stat, n, args.i, args.j, args.k), value))
    return report


def _verify_dims(args) -> list[int]:
    if args.geometry == "hermitian":
        top = args.max_n if args.max_n is not None else (args.max_dim or 3)
        return list(range(1, top + 1))
    top = args.max_dim if args.max_dim is not None else (args.max_n or 4)
    return list(range(2, top + 1, 2))


def cmd_verify(args) -> RunReport:
    qs = args.q_list or [2]
    dims = _verify_dims(args)
    stats = tuple(args.stats.split(",")) if args.stats else ("alpha", "beta", "gamma", "rho")
    report = RunReport("verify", {"geometry": args.geometry, "q": qs, "dims": dims, "budget": str(args.budget), "statistics": list(stats)})
    for q in qs:
        order = q * q if args.geometry == "hermitian" else q
        for n in dims:
            form = standard_form(args.geometry, n, construct_field(order))
            for r in O.run_campaign(form, stats, args.budget, args.jobs):
                report.items.append(oracle_item(r))
    return report


def _bounds_for_q(which, q, max_jk, max_gap, max_ab, a_values):
    return B.sweep(which, (q,), max_jk, max_gap, max_ab, a_values)


def cmd_bounds(args) -> RunReport:
    qs = args.q_list or list(B.DEFAULT_QS)
    a_values = [args.a] if args.a is not None else None
    grid = {"which": args.which, "q": qs, "max_jk": args.max_jk, "max_gap": args.max_gap, "max_ab": args.max_ab}
    if a_values:
        grid["a"] = args.a
    report = RunReport("bounds", grid)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            futures = [pool.submit(_bounds_for_q, args.which, q, args.max_jk, args.max_gap, args.max_ab, a_values) for q in qs]
            checks = [c for f in futures for c in f.result()]
    else:
        checks = B.sweep(args.which, qs, args.max_jk, args.max_gap, args.max_ab, a_values)
    report.items.extend(bound_item(c) for c in checks)
    report.sort()
    return report


def cmd_identity(args) -> RunReport:
    geometries = ("hermitian", "symplectic") if args.geometry == "both" else (args.geometry,)
    max_j = args.max_j if args.max_j is not None else 3
    max_n = args.max_n if args.max_n is not None else 6
    report = RunReport("identity", {"geometry": list(geometries), "max_j": max_j, "max_n": max_n, "structural": args.structural})
    for g in geometries:
        report.items.extend(identity_item(r) for r in I.identity_sweep(g, max_j, max_n))
    if args.structural:
        report.items.extend(identity_item(r) for r in I.structural_sweep())
    return report


def cmd_table(args) -> RunReport:
    q = _qpoint(args)
    top = _dimension(args) if (args.n is not None or args.dim is not None) else (args.max_dim or args.max_n or 4)
    grid = {"geometry": args.geometry, "statistic": args.stat, "q": "q" if args.symbolic else args.q, "max_dim": top}
    report = RunReport("table", grid)
    step = 2 if args.geometry == "symplectic" else 1
    for n in range(step, top + 1, step):
        for i, j, k in _table_tuples(args.stat, n):
            try:
                value = evaluate(args.geometry, args.stat, n, i, j, k, q)
            except AnzahlError:
                continue
            report.items.append(value_item(args.geometry, args.stat, _stat_params(args.stat, n, i, j, k), value))
    report.sort()
    return report


def _table_tuples(stat, n):
    uses_i = stat not in ("rho", "segre")
    uses_k = stat not in ("alpha", "gamma-span")
    for i in range(n + 1) if uses_i else (0,):
        for j in range(n + 1):
            for k in range(n + 1) if uses_k else (0,):
                yield i, j, k


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="anzahl",
        description="Exact counts of subspaces in hermitian and symplectic geometries over finite fields.",
        epilog=GEOMETRY_NOTE,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, q_many=False):
        p.add_argument("--geometry", choices=("hermitian", "symplectic"), default="hermitian")
        if q_many:
            p.add_argument("--q", dest="q_list", type=parse_q_list, metavar="Q",
                           help="base parameter(s): 2, 2,3,5 or 2..16 (hermitian field has q^2 elements)")
        else:
            p.add_argument("--q", type=int, help="base parameter q (hermitian field has q^2 elements)")
        p.add_argument("--format", choices=("json", "csv", "plain"), default="plain")
        p.add_argument("--jobs", type=int, default=1, help="worker processes")

    def indices(p):
        p.add_argument("--n", type=int, help="ambient dimension (hermitian)")
        p.add_argument("--dim", type=int, help="ambient dimension (symplectic, raw)")
        p.add_argument("--i", type=int, default=0)
        p.add_argument("--j", type=int, default=0)
        p.add_argument("--k", type=int, default=0)
        p.add_argument("--symbolic", action="store_true", help="evaluate at the indeterminate q")
        p.add_argument("--stat", choices=STATS, default="alpha")

    p = sub.add_parser("count", help="evaluate one statistic", epilog=GEOMETRY_NOTE)
    common(p)
    indices(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="compare formulas with brute-force enumeration", epilog=GEOMETRY_NOTE)
    common(p, q_many=True)
    p.add_argument("--max-n", type=int, help="largest hermitian dimension")
    p.add_argument("--max-dim", type=int, help="largest symplectic dimension (raw)")
    p.add_argument("--budget", type=int, default=O.DEFAULT_BUDGET, help="cap on enumerated objects per item")
    p.add_argument("--stats", help="comma-separated subset of alpha,beta,gamma,rho")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="check the inequalities over a grid", epilog=GEOMETRY_NOTE)
    common(p, q_many=True)
    p.add_argument("--which", choices=B.BOUND_IDS + ("all",), default="all")
    p.add_argument("--max-jk", type=int, default=5)
    p.add_argument("--max-gap", type=int, default=3, help="n ranges over j+k .. j+k+max-gap")
    p.add_argument("--max-ab", type=int, default=10)
    p.add_argument("--a", type=int, help="check only this value of the parameter a of the product bounds")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("identity", help="verify the recursions symbolically", epilog=GEOMETRY_NOTE)
    p.add_argument("--geometry", choices=("hermitian", "symplectic", "both"), default="both")
    p.add_argument("--format", choices=("json", "csv", "plain"), default="plain")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-j", type=int)
    p.add_argument("--max-n", type=int, help="largest n (half dimension for symplectic)")
    p.add_argument("--structural", action="store_true", help="also run the double-count and partition checks")
    p.set_defaults(func=cmd_identity)

    p = sub.add_parser("table", help="tabulate a statistic over all valid parameters", epilog=GEOMETRY_NOTE)
    common(p)
    indices(p)
    p.add_argument("--max-n", type=int)
    p.add_argument("--max-dim", type=int)
    p.set_defaults(func=cmd_table, format="csv")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        report = args.func(args)
    except AnzahlError as exc:
        print(f"anzahl {args.command}: {exc}", file=sys.stderr)
        return 2
    report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    if args.command == "count" and args.format == "plain":
        print(report.items[0]["value"])
    else:
        print(report.render(args.format))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
