"""Command-line surface: build graphs, run the theorem builders, verify
colorings, query the brute-force oracles, convert matrix files, and
reproduce the shipped fixtures.

Exit codes for `color`: 0 success, 2 precondition failed, 3 verification
failed, 4 search budget exceeded.  All runs are deterministic.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import golden
from .coloring import (
    TotalColoring,
    coloring_to_json_dict,
    from_matrix,
    matrix_csv_rows,
    read_coloring_json,
    read_matrix_csv,
    write_coloring_json,
    write_matrix_csv,
)
from .constructions import (
    canonical_complete_coloring,
    color_power_cycle_even,
    color_power_cycle_odd,
    color_thm31,
    color_thm32,
    color_thm33,
    color_thm34,
    equitable_nsd_power_cycle,
)
from .errors import (
    CirculantColoringError,
    FixtureMissing,
    MismatchFound,
    PreconditionFailed,
    RainbowPropertyFailed,
    SearchBudgetExceeded,
    VerificationFailed,
)
from .graphs import GeneratorSet, build_circulant, normalize_half_set
from .oracle import Mode, exact_chromatic_index, exact_feasible, exact_total_chromatic
from .verifiers import verify_nsd, verify_total_coloring

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PRECONDITION = 2
EXIT_VERIFICATION = 3
EXIT_BUDGET = 4


def _parse_gens(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise PreconditionFailed("generator list %r is not comma-separated integers" % text)


def _half_set(n: int, text: str) -> GeneratorSet:
    return GeneratorSet(n, normalize_half_set(n, _parse_gens(text)))


def _report_dict(rep) -> dict:
    return {
        "colors_used": rep.colors_used,
        "bound_claimed": rep.bound_claimed,
        "fallback_used": rep.fallback_used,
        "notes": rep.notes,
    }


def _emit(tc: TotalColoring, fmt: str, out: str | None, suffix: str = "",
          extra: dict | None = None) -> None:
    if out:
        base = out + suffix
        write_matrix_csv(tc, base + ".csv")
        write_coloring_json(tc, base + ".json")
        if extra is not None:
            with open(base + ".report.json", "w") as fh:
                json.dump(extra, fh, indent=1, sort_keys=True)
                fh.write("\n")
        return
    if fmt == "json":
        payload = coloring_to_json_dict(tc)
        if extra is not None:
            payload["report"] = extra
        json.dump(payload, sys.stdout, indent=1, sort_keys=True)
        sys.stdout.write("\n")
    else:
        for row in matrix_csv_rows(tc):
            print(",".join(row))
        if extra is not None:
            print("# " + json.dumps(extra, sort_keys=True))


def cmd_build(args) -> int:
    g = build_circulant(args.n, _parse_gens(args.gens))
    json.dump(g.to_json_dict(), sys.stdout, sort_keys=True)
    sys.stdout.write("\n")
    return EXIT_OK


def cmd_color(args) -> int:
    method = args.method
    fmt, out = args.format, args.out
    if method == "thm21-even":
        rep = color_power_cycle_even(args.n, args.k, args.i)
        _emit(rep.coloring, fmt, out, extra=_report_dict(rep))
    elif method == "thm21-odd":
        rep = color_power_cycle_odd(args.n, args.k, args.i)
        _emit(rep.coloring, fmt, out, extra=_report_dict(rep))
    elif method == "thm22":
        eq, nsd = equitable_nsd_power_cycle(args.n, args.k)
        _emit(eq.coloring, fmt, out, "-equitable", _report_dict(eq))
        _emit(nsd.coloring, fmt, out, "-nsd", _report_dict(nsd))
    elif method == "thm31":
        if not args.gens:
            raise PreconditionFailed("--gens is required for thm31")
        g = build_circulant(args.n, _parse_gens(args.gens))
        s1_text = args.s1_gens or ",".join(
            str(d) for d in range(1, args.n // 4 + 1))
        rep = color_thm31(g, _half_set(args.n, s1_text))
        _emit(rep.coloring, fmt, out, extra=_report_dict(rep))
    elif method == "thm32":
        if not args.gens:
            raise PreconditionFailed("--gens is required for thm32")
        rep = color_thm32(build_circulant(args.n, _parse_gens(args.gens)))
        _emit(rep.coloring, fmt, out, extra=_report_dict(rep))
    elif method == "thm33":
        if not (args.gens and args.m_gens):
            raise PreconditionFailed("--gens and --m-gens are required for thm33")
        g = build_circulant(args.n, _parse_gens(args.gens))
        rep = color_thm33(g, _half_set(args.n, args.m_gens))
        _emit(rep.coloring, fmt, out, extra=_report_dict(rep))
    elif method == "thm34":
        if not (args.gens and args.s1_gens):
            raise PreconditionFailed("--gens and --s1-gens are required for thm34")
        g = build_circulant(args.n, _parse_gens(args.gens))
        eq, nsd = color_thm34(g, _half_set(args.n, args.s1_gens))
        _emit(eq.coloring, fmt, out, "-equitable", _report_dict(eq))
        _emit(nsd.coloring, fmt, out, "-nsd", _report_dict(nsd))
    elif method == "canonical":
        result = canonical_complete_coloring(args.n)
        _emit(result.coloring, fmt, out,
              extra=result.report.to_json_dict())
    else:
        raise PreconditionFailed("unknown method %r" % method)
    return EXIT_OK


def _load_coloring(path: str) -> TotalColoring:
    if path.endswith(".json"):
        return read_coloring_json(path)
    matrix, wildcards = read_matrix_csv(path)
    if wildcards:
        raise PreconditionFailed(
            "input matrix has wildcard cells; cannot verify: %s"
            % sorted(wildcards)[:5])
    return from_matrix(matrix)


def cmd_verify(args) -> int:
    g = build_circulant(args.n, _parse_gens(args.gens))
    tc = _load_coloring(args.infile)
    if args.nsd:
        report = verify_nsd(g, tc)
        ok = report.proper and report.nsd
    else:
        report = verify_total_coloring(g, tc)
        ok = report.proper and (report.equitable or not args.equitable)
    json.dump(report.to_json_dict(), sys.stdout, indent=1, sort_keys=True)
    sys.stdout.write("\n")
    return EXIT_OK if ok else EXIT_VERIFICATION


def cmd_oracle(args) -> int:
    g = build_circulant(args.n, _parse_gens(args.gens))
    q = args.quantity
    if q == "total-chromatic":
        res = exact_total_chromatic(g)
    elif q == "chromatic-index":
        res = exact_chromatic_index(g)
    elif q == "equitable-feasible":
        res = exact_feasible(g, args.k, Mode.EQUITABLE)
    elif q == "nsd-feasible":
        res = exact_feasible(g, args.k, Mode.NSD)
    else:
        raise PreconditionFailed("unknown quantity %r" % q)
    print(json.dumps({
        "quantity": res.quantity.value,
        "value": res.value,
        "nodes_explored": res.nodes_explored,
    }, sort_keys=True))
    return EXIT_OK


def cmd_export(args) -> int:
    tc = _load_coloring(args.infile)
    if args.format == "json":
        write_coloring_json(tc, args.out)
    else:
        write_matrix_csv(tc, args.out)
    return EXIT_OK


def cmd_reproduce(args) -> int:
    ids = golden.TABLE_IDS if args.table == "all" else (int(args.table),)
    status = EXIT_OK
    for tid in ids:
        try:
            checked = golden.reproduce_table(tid)
            print("table %d: OK (%d cells checked)" % (tid, checked))
        except MismatchFound as exc:
            print("table %d: MISMATCH: %s" % (tid, exc))
            status = EXIT_FAIL
    return status


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="circulant-coloring",
        description="Total, equitable, and NSD total colorings of "
                    "circulant graphs, with verification and oracles.")
    p.add_argument("--budget", type=int, default=None,
                   help="search node budget (overrides TC_BUDGET)")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="print a circulant graph as JSON")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--gens", required=True, help="comma-separated distances")
    b.set_defaults(func=cmd_build)

    c = sub.add_parser("color", help="run a theorem builder")
    c.add_argument("--method", required=True,
                   choices=["thm21-even", "thm21-odd", "thm22", "thm31",
                            "thm32", "thm33", "thm34", "canonical"])
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int, default=None)
    c.add_argument("--i", type=int, default=None)
    c.add_argument("--gens", default=None)
    c.add_argument("--s1-gens", dest="s1_gens", default=None)
    c.add_argument("--m-gens", dest="m_gens", default=None)
    c.add_argument("--format", choices=["csv", "json"], default="csv")
    c.add_argument("--out", default=None,
                   help="output path prefix (writes .csv/.json/.report.json)")
    c.set_defaults(func=cmd_color)

    v = sub.add_parser("verify", help="verify a coloring file")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--gens", required=True)
    v.add_argument("--in", dest="infile", required=True)
    v.add_argument("--equitable", action="store_true")
    v.add_argument("--nsd", action="store_true")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="exact brute force on a tiny instance")
    o.add_argument("--quantity", required=True,
                   choices=["total-chromatic", "chromatic-index",
                            "equitable-feasible", "nsd-feasible"])
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--gens", required=True)
    o.add_argument("--k", type=int, default=None,
                   help="palette size for the feasibility quantities")
    o.set_defaults(func=cmd_oracle)

    e = sub.add_parser("export", help="convert a coloring between csv and json")
    e.add_argument("--in", dest="infile", required=True)
    e.add_argument("--format", choices=["csv", "json"], required=True)
    e.add_argument("--out", required=True)
    e.set_defaults(func=cmd_export)

    r = sub.add_parser("reproduce", help="rebuild and diff a shipped fixture")
    r.add_argument("--table", default="all",
                   help="fixture number 1..6, or 'all'")
    r.set_defaults(func=cmd_reproduce)
    return p


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    if args.budget is not None:
        os.environ["TC_BUDGET"] = str(args.budget)
    try:
        return args.func(args)
    except PreconditionFailed as exc:
        print("precondition failed: %s" % exc, file=sys.stderr)
        return EXIT_PRECONDITION
    except (VerificationFailed, RainbowPropertyFailed) as exc:
        print("verification failed: %s" % exc, file=sys.stderr)
        return EXIT_VERIFICATION
    except SearchBudgetExceeded as exc:
        print("search budget exceeded: %s" % exc, file=sys.stderr)
        return EXIT_BUDGET
    except FixtureMissing as exc:
        print("fixture missing: %s" % exc, file=sys.stderr)
        return EXIT_FAIL
    except CirculantColoringError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
