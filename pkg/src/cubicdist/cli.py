"""``cubicdist`` command line.

Exit status: 0 when every check passed, 1 when a mathematical check failed
(diagnostics are still written), 2 for usage, configuration or budget errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__, config, reports
from .classify import scan_all_d
from .closed_forms import cubic_target
from .distributions import (check_basic_equations, intersection_distribution,
                            monomial_nonhitting_table, multiplicity_distribution,
                            multiplicity_row, multiplicity_row_nonzero)
from .field import FieldError, build_field, parse_field, parse_modulus
from .kakeya import cubic_kakeya_table, kakeya_size, known_sizes, table_sizes
from .polyfn import Cubic, parse_poly
from .reference import NONHIT
from .steiner import (PreconditionError, TripleSystem, build_sts, is_affine, isomorphic,
                      pasch_count, validate_sts)
from .verify import verify_all, verify_cubic

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# argument parsing

def _common(p, field=True, poly=False):
    if field:
        p.add_argument("--p", type=int, required=True, help="characteristic")
        p.add_argument("--m", type=int, default=1, help="extension degree (default 1)")
        p.add_argument("--modulus", help="defining polynomial c0,c1,...,cm (constant first)")
    if poly:
        p.add_argument("--poly", required=True,
                       help="monomial:d | cubic:a | dense:c0,c1,...")
    p.add_argument("--format", choices=("json", "csv", "text"), default=None)
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--max-q", type=int, default=None,
                   help=f"override every size budget (also {config.ENV_VAR})")


def build_parser():
    ap = argparse.ArgumentParser(prog="cubicdist", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"cubicdist {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    _common(sub.add_parser("field-info", help="describe GF(p^m) and its primitive element"))

    p = sub.add_parser("muldist", help="multiplicity rows M_i(f, b)")
    _common(p, poly=True)
    p.add_argument("--b", type=int, help="a single slope (default: all)")
    p.add_argument("--nonzero", action="store_true", help="count nonzero roots only")

    _common(sub.add_parser("intdist", help="intersection distribution v_i(f)"), poly=True)

    _common(sub.add_parser("verify-cubic",
                           help="closed forms against enumeration for one field"))

    p = sub.add_parser("nonhit-table", help="v_0(x^d) for every d")
    _common(p)
    p.add_argument("--figure", help="also render a PNG/SVG/PDF bar chart here")

    p = sub.add_parser("scan", help="exponents with the distribution of x^3")
    _common(p)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--confirm", dest="confirm", action="store_true", default=None,
                   help="confirm each hit by enumeration")
    g.add_argument("--no-confirm", dest="confirm", action="store_false")
    p.add_argument("--json", dest="json_out", help="same as --format json --out PATH")
    p.add_argument("--figure", help="plot |image of g_d| against d")

    sts = sub.add_parser("sts", help="Steiner triple systems over GF(3^m)")
    ssub = sts.add_subparsers(dest="sts_command", required=True)
    p = ssub.add_parser("build", help="blocks of the system defined by --poly")
    _common(p, poly=True)
    p = ssub.add_parser("check", help="validate a block file")
    _common(p, field=False)
    p.add_argument("--blocks", required=True)
    p.add_argument("--field", help="p,m,c0,...,cm to also test the block sums")
    p = ssub.add_parser("iso", help="decide isomorphism of two systems")
    _common(p, field=False)
    p.add_argument("--p", type=int)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--modulus")
    p.add_argument("--poly", help="first system from a polynomial")
    p.add_argument("--poly2", help="second system from a polynomial")
    p.add_argument("--blocks", help="first system from a block file")
    p.add_argument("--blocks2", help="second system from a block file")
    p.add_argument("--budget", type=int, default=1_000_000, help="search node budget")

    p = sub.add_parser("kakeya", help="Kakeya sets from x^3 - a x^2")
    _common(p)
    p.add_argument("--a", type=int, default=0)
    p.add_argument("--b", type=int, default=0)
    p.add_argument("--poly", help="use this polynomial instead of x^3 - a x^2")
    p.add_argument("--table", action="store_true", help="all sizes over representative (a, b)")
    p.add_argument("--figure", help="with --table, plot sizes against the known list")

    p = sub.add_parser("verify-all", help="the complete check suite up to a size cap")
    _common(p, field=False)
    p.add_argument("--cap", type=int, default=729, help="largest field order to include")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    return ap


# ---------------------------------------------------------------------------
# helpers

def _field(args):
    modulus = parse_modulus(args.modulus) if args.modulus else None
    return build_field(args.p, args.m, modulus)


def _emit(args, payload, csv_text=None, default="json"):
    fmt = args.format or default
    if fmt == "csv":
        if csv_text is None:
            raise UsageError(f"--format csv is not available for {args.command}")
        text = csv_text
    elif fmt == "text":
        text = _as_text(payload)
    else:
        text = reports.to_json(payload)
    reports.write(text, args.out, sys.stdout)


def _as_text(obj, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.append(_as_text(v, indent + 1).rstrip("\n"))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v, default=reports._default)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and not _flat(v):
                lines.append(f"{pad}-")
                lines.append(_as_text(v, indent + 1).rstrip("\n"))
            else:
                lines.append(f"{pad}- {json.dumps(v, default=reports._default)}")
    return "\n".join(lines) + "\n"


def _flat(v):
    items = v.values() if isinstance(v, dict) else v
    return all(not isinstance(x, (dict, list)) for x in items)


def _plot(kind, *args):
    from . import plotting
    return getattr(plotting, kind)(*args)


# ---------------------------------------------------------------------------
# commands

def cmd_field_info(args):
    F = _field(args)
    payload = reports.envelope("field-info", F, p=F.p, m=F.m, q=F.q,
                               modulus=list(F.modulus), alpha=F.alpha,
                               alpha_order=F.order(F.alpha) if F.q > 1 else None)
    _emit(args, payload)
    return OK


def cmd_muldist(args):
    F = _field(args)
    f = parse_poly(F, args.poly)
    if args.b is not None:
        if not 0 <= args.b < F.q:
            raise UsageError(f"--b must lie in range({F.q})")
        row = (multiplicity_row_nonzero if args.nonzero else multiplicity_row)(f, args.b)
        rows = [row]
    elif args.nonzero:
        rows = [multiplicity_row_nonzero(f, b) for b in range(F.q)]
    else:
        rows = multiplicity_distribution(f, jobs=args.jobs)
    payload = reports.envelope("muldist", F, poly=f.describe(), nonzero_only=args.nonzero,
                               rows=[r.as_dict() for r in rows])
    _emit(args, payload)
    return OK


def cmd_intdist(args):
    F = _field(args)
    f = parse_poly(F, args.poly)
    dist = intersection_distribution(f, jobs=args.jobs)
    check = check_basic_equations(dist, F.q)
    payload = reports.envelope("intdist", F, poly=f.describe(), counts=dist.as_dict(),
                               basic_equations={"passed": check.passed,
                                                "residuals": check.residuals},
                               same_as_cubic=dist == cubic_target(F))
    _emit(args, payload)
    return OK if check.passed else FAILED


def cmd_verify_cubic(args):
    F = _field(args)
    config.check_budget("verify_cubic", F.q)
    result = verify_cubic(F, jobs=args.jobs)
    _emit(args, reports.envelope("verify-cubic", F, **result))
    return OK if result["passed"] else FAILED


def cmd_nonhit_table(args):
    F = _field(args)
    entries = monomial_nonhitting_table(F, jobs=args.jobs)
    status = OK
    payload = reports.envelope("nonhit-table", F, rows=[
        {"d": list(e.exponents), "v0": e.v0} for e in entries])
    if F.q in NONHIT:
        want = {e: v for e, v, _ in NONHIT[F.q]}
        got = {e.exponents: e.v0 for e in entries}
        payload["matches_reference"] = got == want
        if got != want:
            status = FAILED
    if args.figure:
        _plot("nonhit_figure", F.q, entries, cubic_target(F).non_hitting, args.figure)
    _emit(args, payload, reports.nonhit_csv(F, entries), default="csv")
    return status


def cmd_scan(args):
    F = _field(args)
    if args.json_out:
        args.format, args.out = "json", args.json_out
    report = scan_all_d(F, confirm=args.confirm, jobs=args.jobs)
    payload = reports.envelope("scan", F, **report.as_dict())
    if args.figure:
        _plot("scan_figure", report, report.image_sizes, args.figure)
    if not report.agreement:
        print(f"note: scan differs from the known families: missing {report.missing}, "
              f"extra {report.extra}", file=sys.stderr)
    _emit(args, payload)
    return OK if report.oracle_ok else FAILED


def _load_blocks(path):
    with open(path, encoding="utf-8") as fh:
        return TripleSystem.parse(fh.read())


def _sts_summary(ts, F=None):
    check = validate_sts(ts)
    out = {"v": ts.v, "blocks": len(ts), "valid": check.as_dict()}
    if check.passed:
        out["pasch_count"] = pasch_count(ts)
        if F is not None:
            out["affine"] = is_affine(ts, F)
    return out, check.passed


def cmd_sts(args):
    if args.sts_command == "build":
        F = _field(args)
        ts = build_sts(F, parse_poly(F, args.poly))
        if (args.format or "text") == "text":
            reports.write(ts.format(), args.out, sys.stdout)
            return OK
        summary, ok = _sts_summary(ts, F)
        _emit(args, reports.envelope("sts-build", F, poly=args.poly, **summary,
                                     block_list=ts.blocks.tolist()))
        return OK if ok else FAILED
    if args.sts_command == "check":
        ts = _load_blocks(args.blocks)
        F = None
        if args.field:
            F = parse_field(args.field)
        summary, ok = _sts_summary(ts, F)
        _emit(args, reports.envelope("sts-check", F, **summary))
        return OK if ok else FAILED
    # iso
    F = _field(args) if args.p else None
    systems = []
    for poly, blocks in ((args.poly, args.blocks), (args.poly2, args.blocks2)):
        if (poly is None) == (blocks is None):
            raise UsageError("give each system as exactly one of --poly/--blocks "
                             "(second: --poly2/--blocks2)")
        if poly is not None:
            if F is None:
                raise UsageError("--poly needs --p/--m")
            systems.append(build_sts(F, parse_poly(F, poly)))
        else:
            systems.append(_load_blocks(blocks))
    verdict = isomorphic(*systems, budget=args.budget)
    _emit(args, reports.envelope("sts-iso", F, **verdict.as_dict()))
    return OK


def cmd_kakeya(args):
    F = _field(args)
    if args.table:
        entries = cubic_kakeya_table(F)
        sizes = table_sizes(entries)
        known = known_sizes(F.q)
        payload = reports.envelope("kakeya-table", F, sizes=list(sizes),
                                   entries=[e.as_dict() for e in entries],
                                   table=[{"size": s, "status": st} for s, st in known])
        if args.figure:
            _plot("kakeya_figure", F.q, sizes, known, args.figure)
        _emit(args, payload, reports.kakeya_csv(F, sizes), default="csv")
        return OK
    if args.figure:
        raise UsageError("--figure needs --table")
    f = parse_poly(F, args.poly) if args.poly else Cubic(F, args.a)
    if not 0 <= args.b < F.q:
        raise UsageError(f"--b must lie in range({F.q})")
    result = kakeya_size(F, f, args.b)
    _emit(args, reports.envelope("kakeya", F, poly=f.describe(), **result))
    return OK


def cmd_verify_all(args):
    result = verify_all(max_q=args.cap, jobs=args.jobs, seed=args.seed)
    _emit(args, reports.envelope("verify-all", None, **result))
    return OK if result["passed"] else FAILED


COMMANDS = {
    "field-info": cmd_field_info,
    "muldist": cmd_muldist,
    "intdist": cmd_intdist,
    "verify-cubic": cmd_verify_cubic,
    "nonhit-table": cmd_nonhit_table,
    "scan": cmd_scan,
    "sts": cmd_sts,
    "kakeya": cmd_kakeya,
    "verify-all": cmd_verify_all,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    previous = config._override
    if args.max_q is not None:
        config.set_override(args.max_q)
    try:
        return COMMANDS[args.command](args)
    except (PreconditionError, AssertionError, ArithmeticError) as exc:
        reports.write(reports.to_json({"error": type(exc).__name__, "message": str(exc)}),
                      None, sys.stdout)
        return FAILED
    except (UsageError, config.BudgetExceeded, FieldError, ValueError, OSError) as exc:
        print(f"cubicdist: error: {exc}", file=sys.stderr)
        return USAGE
    finally:
        config.set_override(previous)


if __name__ == "__main__":
    sys.exit(main())
