"""Command line interface.

Subcommands: count, verify, howe, gauss, fixed-points.  Output is
deterministic (byte-identical across runs for the same arguments).
Exit codes: 0 success, 1 verification failure, 2 usage or budget error.
The environment variable FFVERIFY_OUTDIR sets the default directory for
--output paths that are not absolute.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .fields import FieldError, build_tower
from .cyclotomic import AdditiveCharacter, CycError, conductor, gauss_sum
from .varieties import (BudgetExceededError, VarietySpec, VARIETY_KINDS,
                        count_points, counts_to_csv)
from .fixed_points import closed_form_fixed_count, fixed_points_surface
from .howe import (report_to_markdown, theta_mod_ell, theta_ordinary,
                   verify_all)
from .characters import CharacterError


class UsageError(ValueError):
    pass


def _emit(args, text: str):
    if getattr(args, "output", None):
        path = args.output
        if not os.path.isabs(path):
            path = os.path.join(os.environ.get("FFVERIFY_OUTDIR", "."), path)
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def cmd_count(args) -> int:
    ctx = build_tower(args.p, args.e)
    rows = []
    if args.torsor:
        base = count_points(ctx, VarietySpec("Y", args.n), args.level,
                            args.budget)
        cover = count_points(ctx, VarietySpec("Ytilde", args.n), args.level,
                             args.budget)
        rows.append(("Y", args.n, args.level, base))
        rows.append(("Ytilde", args.n, args.level, cover))
        ratio = cover / base if base else float("nan")
        if args.format == "json":
            _emit(args, _json_dumps({
                "rows": [dict(zip(("variety", "n", "level", "count"), r))
                         for r in rows],
                "ratio": cover // base if base and cover % base == 0 else ratio,
                "ratio_equals_q_plus_1": base * (ctx.q + 1) == cover,
            }))
        else:
            text = counts_to_csv(rows)
            text += f"# ratio = {cover}/{base}"
            text += f" (q+1 = {ctx.q + 1})\n"
            _emit(args, text)
        return 0 if base * (ctx.q + 1) == cover else 1
    for kind in args.variety:
        rows.append((kind, args.n, args.level,
                     count_points(ctx, VarietySpec(kind, args.n),
                                  args.level, args.budget)))
    if args.format == "json":
        _emit(args, _json_dumps(
            [dict(zip(("variety", "n", "level", "count"), r)) for r in rows]))
    elif args.format == "md":
        lines = ["| variety | n | level | count |", "| --- | --- | --- | --- |"]
        lines += [f"| {k} | {n} | {lv} | {c} |" for k, n, lv, c in rows]
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, counts_to_csv(rows))
    return 0


def cmd_verify(args) -> int:
    report = verify_all(args.n, args.p, args.e, args.ell)
    if args.format == "md":
        _emit(args, report_to_markdown(report))
    else:
        _emit(args, _json_dumps(report))
    return 0 if report["all_passed"] else 1


def cmd_howe(args) -> int:
    if args.ell is None:
        table = theta_ordinary(args.n, args.p ** args.e)
    else:
        table = theta_mod_ell(args.n, args.p ** args.e, args.ell)
    if args.format == "md":
        _emit(args, table.to_markdown())
    else:
        _emit(args, _json_dumps(table.to_json()))
    return 0 if all(c["pass"] for c in table.checks) else 1


def cmd_gauss(args) -> int:
    ctx = build_tower(args.p, args.e)
    if ctx.p == 2:
        raise UsageError("quadratic Gauss sums need odd characteristic")
    m = conductor(ctx)
    out = {"q": ctx.q, "conductor": m, "sums": [], "identity_holds": True}
    sign = ctx.legendre(-ctx.one(1))
    from .cyclotomic import CycNumber
    expected_sq = CycNumber.from_rational(m, sign * ctx.q)
    for a in ctx.enumerate_level(1):
        if a.is_zero():
            continue
        psi = AdditiveCharacter(ctx, a)
        g = gauss_sum(ctx, psi)
        ok = g * g == expected_sq
        out["sums"].append({"a": a.encoding(), "gauss": g.to_json(),
                            "square_identity": ok})
        out["identity_holds"] = out["identity_holds"] and ok
    if args.format == "md":
        lines = [f"# Gauss sums, q = {ctx.q}", "",
                 "| a | G(psi_a)^2 = (-1|F_q) q |", "| --- | --- |"]
        lines += [f"| {row['a']} | {'yes' if row['square_identity'] else 'no'} |"
                  for row in out["sums"]]
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, _json_dumps(out))
    return 0 if out["identity_holds"] else 1


def cmd_fixed_points(args) -> int:
    ctx = build_tower(args.p, args.e)
    q = ctx.q
    rows = []
    all_ok = True
    for with_u in (True, False):
        for zeta in ctx.enumerate_mu(q + 1):
            for eta in ctx.enumerate_level(1):
                rep = fixed_points_surface(ctx, eta, zeta, with_u)
                try:
                    expected = closed_form_fixed_count(ctx, eta, zeta, with_u)
                    ok = rep.total == expected
                except FieldError:
                    expected, ok = None, True
                all_ok = all_ok and ok
                rows.append({
                    "with_unipotent": with_u,
                    "eta": eta.encoding(),
                    "zeta": zeta.encoding(),
                    "total": rep.total,
                    "strata": rep.sigma_counts,
                    "closed_form": expected,
                    "match": ok,
                })
    if args.format == "csv":
        lines = ["with_unipotent,eta,zeta,total,closed_form,match"]
        lines += [f"{r['with_unipotent']},{r['eta']},{r['zeta']},"
                  f"{r['total']},{r['closed_form']},{r['match']}"
                  for r in rows]
        _emit(args, "\n".join(lines) + "\n")
    elif args.format == "md":
        lines = [f"# Fixed point grid, q = {q}", "",
                 "| u | eta | zeta | total | closed form | match |",
                 "| --- | --- | --- | --- | --- | --- |"]
        lines += [f"| {r['with_unipotent']} | {r['eta']} | {r['zeta']} "
                  f"| {r['total']} | {r['closed_form']} "
                  f"| {'yes' if r['match'] else 'no'} |" for r in rows]
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, _json_dumps({"q": q, "rows": rows, "all_match": all_ok}))
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ffverify",
        description="Exact verification of finite-field point counts, "
                    "character identities and theta tables.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--p", type=int, required=True, help="characteristic")
        p.add_argument("--e", type=int, default=1, help="q = p^e")
        p.add_argument("--format", choices=("json", "csv", "md"),
                       default="json")
        p.add_argument("--output", help="write to file instead of stdout")
        p.add_argument("--workers", type=int, default=1,
                       help="accepted for interface stability; kernels "
                            "are deterministic and run serially")

    pc = sub.add_parser("count", help="point counts over tower levels")
    common(pc)
    pc.add_argument("--variety", nargs="+", choices=VARIETY_KINDS,
                    default=["Ytilde"])
    pc.add_argument("--n", type=int, default=1)
    pc.add_argument("--level", type=int, choices=(1, 2, 4), default=2)
    pc.add_argument("--budget", type=int, default=50_000_000)
    pc.add_argument("--torsor", action="store_true",
                    help="count the torsor pair (Y, Ytilde) and check the "
                         "ratio q+1")
    pc.set_defaults(func=cmd_count)

    pv = sub.add_parser("verify", help="run all identity checks")
    common(pv)
    pv.add_argument("--n", type=int, default=2)
    pv.add_argument("--ell", type=int, required=True)
    pv.set_defaults(func=cmd_verify)

    ph = sub.add_parser("howe", help="theta correspondence tables")
    common(ph)
    ph.add_argument("--n", type=int, default=2)
    ph.add_argument("--ell", type=int, default=None)
    ph.set_defaults(func=cmd_howe)

    pg = sub.add_parser("gauss", help="quadratic Gauss sums and identities")
    common(pg)
    pg.set_defaults(func=cmd_gauss)

    pf = sub.add_parser("fixed-points", help="surface fixed point grid")
    common(pf)
    pf.set_defaults(func=cmd_fixed_points)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if args.workers < 1:
        sys.stderr.write("error: --workers must be positive\n")
        return 2
    try:
        return args.func(args)
    except (BudgetExceededError, UsageError, FieldError, CycError,
            CharacterError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
