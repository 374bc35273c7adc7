"""
Command-line front end.

Exit codes: 0 ok, 2 bad parameters, 3 construction class not applicable,
4 realization failed, 5 verification failed.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction
from typing import List, Optional

from . import bounds, construct
from .code import check_params, min_distance
from .errors import BadParams, NotApplicable, RealizationFailed, LocLibError
from .field import make_field
from .io import CodeFile, dump_code, fmt_rational, load_code, load_code_file, rational_dict
from .linalg import matmul, rank
from .locality import (
    TannerGraph,
    build_local_groups,
    locality_graph,
    locality_profile,
    validate_locality_tanner,
)
from .repair import RepairConfig, node_failure_stats

EXIT_OK, EXIT_PARAMS, EXIT_NOT_APPLICABLE, EXIT_REALIZATION, EXIT_VERIFY = 0, 2, 3, 4, 5


def _default_seed() -> int:
    return int(os.environ.get("LOCLIB_SEED", "0"))


def cmd_bounds(args) -> int:
    try:
        rep = bounds.bound_report(args.n, args.k, args.d)
    except BadParams as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    rows = [
        ("J", str(rep.J)),
        ("r_lb", str(rep.r_lb)),
        ("rbar_general", fmt_rational(rep.rbar_lb_general)),
        ("alpha", fmt_rational(rep.alpha)),
        ("rate_condition", str(rep.rate_condition_holds)),
        ("rbar_tight", "n/a" if rep.rbar_lb_tight is None else fmt_rational(rep.rbar_lb_tight)),
        ("theta_star", "n/a" if rep.theta_star is None else str(rep.theta_star)),
        ("a_theta", "n/a" if rep.a_theta is None else str(rep.a_theta)),
        ("gap", fmt_rational(rep.gap)),
        ("classes", ",".join(map(str, sorted(construct.applicability(args.n, args.k, args.d)))) or "none"),
    ]
    if not args.json_only:
        print(f"bounds for (n, k, d) = ({args.n}, {args.k}, {args.d})")
        for name, val in rows:
            print(f"  {name:<15} {val}")
    print(json.dumps(rep.to_dict(), sort_keys=True))
    return EXIT_OK


def cmd_construct(args) -> int:
    try:
        check_params(args.n, args.k, args.d)
        plan = construct.plan(args.cls, args.n, args.k, args.d, make_field(args.field))
    except BadParams as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except NotApplicable as exc:
        avail = sorted(construct.applicability(args.n, args.k, args.d))
        print(f"not applicable: {exc}", file=sys.stderr)
        print(f"applicable classes: {avail if avail else 'none'}", file=sys.stderr)
        return EXIT_NOT_APPLICABLE
    seed = _default_seed() if args.seed is None else args.seed
    cfg = construct.RealizationConfig(make_field(args.field), seed, args.max_retries)
    try:
        code = construct.realize(plan, cfg)
    except RealizationFailed as exc:
        print(f"realization failed after {exc.attempts} attempts: {exc}", file=sys.stderr)
        return EXIT_REALIZATION
    prof = locality_profile(code)
    print(f"class {plan.class_id} ({args.n}, {args.k}, {args.d}) over GF(2^{args.field}), seed {seed}")
    print(f"  attempts  {code.meta['attempts']}")
    print(f"  d         {min_distance(code.H)}")
    print(f"  r         {prof.r_max}")
    print(f"  rbar      {fmt_rational(prof.r_avg)}")
    print(f"  profile   {prof.histogram()}")
    if args.out:
        dump_code(code, args.out, plan.graph)
        print(f"wrote {args.out}")
    return EXIT_OK


def verify_file(cf: CodeFile) -> List[tuple]:
    """Recompute every invariant of a code file; list of (name, ok, detail)."""
    results = []

    def record(name, ok, detail=""):
        results.append((name, bool(ok), detail))

    try:
        H = cf.H()
    except (ValueError, LocLibError) as exc:
        record("H_entries", False, str(exc))
        return results
    record("H_shape", H.shape == (cf.n - cf.k, cf.n), f"{H.shape}")
    r = rank(H)
    record("H_rank", r == cf.n - cf.k, f"rank {r}")
    G = None
    if cf.G_rows is not None:
        try:
            G = cf.G()
            record("G_H_orthogonal", matmul(G, H.transpose()).is_zero())
            record("G_rank", rank(G) == cf.k, f"rank {rank(G)}")
        except (ValueError, LocLibError) as exc:
            record("G_entries", False, str(exc))
    d = min_distance(H)
    record("min_distance", d >= cf.d, f"d={d} (design {cf.d})")
    if not all(ok for _, ok, _ in results) or d < 2:
        return results
    code = cf.to_code()
    prof = locality_profile(code)
    rep = bounds.bound_report(cf.n, cf.k, cf.d)
    record("r_max_bound", prof.r_max >= rep.r_lb, f"r={prof.r_max} >= {rep.r_lb}")
    record("rbar_general_bound", prof.r_avg >= rep.rbar_lb_general,
           f"rbar={fmt_rational(prof.r_avg)} >= {fmt_rational(rep.rbar_lb_general)}")
    if rep.rbar_lb_tight is not None:
        record("rbar_tight_bound", prof.r_avg >= rep.rbar_lb_tight,
               f"rbar={fmt_rational(prof.r_avg)} >= {fmt_rational(rep.rbar_lb_tight)}")
    cls = cf.meta.get("class")
    if cls in (1, 2, 3):
        target = rep.rbar_lb_tight if cls == 3 else rep.rbar_lb_general
        record("rbar_equals_bound", prof.r_avg == target,
               f"class {cls}: rbar={fmt_rational(prof.r_avg)}, bound {fmt_rational(target)}")
    if cf.tanner is not None:
        ok, problems = validate_locality_tanner(cf.tanner, code)
        record("locality_tanner", ok, "; ".join(problems))
    return results


def cmd_verify(args) -> int:
    try:
        cf = load_code_file(args.file)
    except (KeyError, ValueError, LocLibError) as exc:
        print(f"FAIL  parse: {exc}")
        return EXIT_VERIFY
    try:
        cf.params
    except BadParams as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    results = verify_file(cf)
    for name, ok, detail in results:
        print(f"{'PASS' if ok else 'FAIL'}  {name:<20} {detail}")
    return EXIT_OK if all(ok for _, ok, _ in results) else EXIT_VERIFY


def cmd_locality(args) -> int:
    code = load_code(args.file)
    prof = locality_profile(code)
    part = build_local_groups(code)
    print(f"{'index':>5} {'loc':>4}")
    for i, v in enumerate(prof.loc):
        print(f"{i:>5} {v:>4}")
    print(f"r = {prof.r_max}, rbar = {fmt_rational(prof.r_avg)}")
    print("local groups (greedy):")
    for g, rj, psi in zip(part.groups, part.localities, part.repair_sets):
        print(f"  r={rj}  new={sorted(g)}  repair set={sorted(psi)}")
    if args.json:
        print(json.dumps({
            "loc": list(prof.loc),
            "r": prof.r_max,
            "rbar": rational_dict(prof.r_avg),
            "groups": [sorted(g) for g in part.groups],
            "localities": list(part.localities),
            "tanner": locality_graph(code, part).to_dict(),
        }, sort_keys=True))
    return EXIT_OK


def cmd_repair(args) -> int:
    code = load_code(args.file)
    cfg = RepairConfig(Fraction(args.node_capacity), Fraction(args.block_size))
    stats = node_failure_stats(code, cfg)
    if args.csv:
        sys.stdout.write(stats.to_csv())
        return EXIT_OK
    print(f"{'index':>5} {'reads':>5}  helpers")
    for rep in stats.per_symbol:
        print(f"{rep.failed_index:>5} {rep.symbols_downloaded:>5}  {list(rep.helpers)}")
    print(f"r = {stats.r_max}, rbar = {fmt_rational(stats.r_avg)}")
    print(f"node repair bandwidth = rbar * S_DN = {fmt_rational(stats.bandwidth)} units")
    return EXIT_OK


def cmd_export_g0(args) -> int:
    code = construct.embedded_g0()
    code.meta["class"] = 3
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(construct.g0_csv())
        print(f"wrote {args.csv}")
    if args.out:
        dump_code(code, args.out, locality_graph(code))
        print(f"wrote {args.out}")
    if not args.out and not args.csv:
        sys.stdout.write(construct.g0_csv())
    return EXIT_OK


def cmd_sweep(args) -> int:
    n, d = args.n, args.d
    rows = []
    for k in range(1, n - d + 2):
        rep = bounds.bound_report(n, k, d)
        rows.append([
            k, rep.J, rep.r_lb,
            str(rep.rbar_lb_general), float(rep.rbar_lb_general),
            "" if rep.rbar_lb_tight is None else str(rep.rbar_lb_tight),
            "" if rep.rbar_lb_tight is None else float(rep.rbar_lb_tight),
            "" if rep.theta_star is None else rep.theta_star,
            str(rep.gap),
        ])
    header = ["k", "J", "r_lb", "rbar_general", "rbar_general_dec", "rbar_tight", "rbar_tight_dec", "theta_star", "gap"]
    if n < 2 or d < 2 or not rows:
        print("error: no valid k for this (n, d)", file=sys.stderr)
        return EXIT_PARAMS
    if args.csv:
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    else:
        print(" ".join(f"{h:>16}" for h in header))
        for r in rows:
            print(" ".join(f"{str(v):>16}" for v in r))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="loclib", description="Average-locality LRC toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bounds", help="locality bounds for (n, k, d)")
    b.add_argument("n", type=int)
    b.add_argument("k", type=int)
    b.add_argument("d", type=int)
    b.add_argument("--json-only", action="store_true")
    b.set_defaults(func=cmd_bounds)

    c = sub.add_parser("construct", help="build an average-locality-optimal code")
    c.add_argument("cls", type=int, choices=(1, 2, 3), metavar="class")
    c.add_argument("n", type=int)
    c.add_argument("k", type=int)
    c.add_argument("d", type=int)
    c.add_argument("--seed", type=int, default=None, help="default: $LOCLIB_SEED or 0")
    c.add_argument("--field", type=int, default=8, help="extension degree m of GF(2^m)")
    c.add_argument("--max-retries", type=int, default=64)
    c.add_argument("--out")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="recheck every invariant of a code file")
    v.add_argument("file")
    v.set_defaults(func=cmd_verify)

    lo = sub.add_parser("locality", help="per-symbol locality and greedy local groups")
    lo.add_argument("file")
    lo.add_argument("--json", action="store_true")
    lo.set_defaults(func=cmd_locality)

    r = sub.add_parser("repair", help="repair cost per symbol and node bandwidth")
    r.add_argument("file")
    r.add_argument("--node-capacity", default="1")
    r.add_argument("--block-size", default="1")
    r.add_argument("--csv", action="store_true")
    r.set_defaults(func=cmd_repair)

    e = sub.add_parser("export-g0", help="write the embedded (16,10,5) code")
    e.add_argument("--out")
    e.add_argument("--csv")
    e.set_defaults(func=cmd_export_g0)

    s = sub.add_parser("sweep", help="bounds for every k at fixed n, d")
    s.add_argument("n", type=int)
    s.add_argument("d", type=int)
    s.add_argument("--csv", action="store_true")
    s.set_defaults(func=cmd_sweep)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
