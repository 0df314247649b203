"""Command-line surface.

Exit codes: 0 on full success, 1 when an identity check fails (or a
roundtrip/closure check does), 2 on usage or configuration errors.
Output is deterministic: identical invocations produce identical bytes.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import bijections as bij
from . import multipartite as multi
from . import series
from .pairs import PairError, builtin_pair, catalog_entries
from .partitions import Partition, PartitionError, format_partition, parse_partition
from .stats import REPORT_COLUMNS, beck_statistics


def _parse_range(text: str) -> range:
    """'A..B' inclusive, or a single integer."""
    if ".." in text:
        lo, _, hi = text.partition("..")
        return range(int(lo), int(hi) + 1)
    n = int(text)
    return range(n, n + 1)


def _load_config(args: argparse.Namespace) -> None:
    """Fill unset options from a JSON config file mirroring the flags."""
    if not getattr(args, "config", None):
        return
    with open(args.config) as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise PairError("config file must contain a JSON object")
    for key, value in data.items():
        attr = key.replace("-", "_")
        if getattr(args, attr, None) is None:
            setattr(args, attr, value)


def _pair_from_args(args: argparse.Namespace):
    if args.pair is None:
        raise PairError("no pair selected (use --pair or a config file)")
    residues = args.residues
    if isinstance(residues, str):
        residues = [int(x) for x in residues.split(",")]
    return builtin_pair(args.pair, r=args.r, p=args.p,
                        modulus=args.modulus, residues=residues)


def _print_table(rows: list[dict], columns: list[str]) -> None:
    widths = {c: max(len(c), *(len(str(row[c])) for row in rows)) if rows else len(c)
              for c in columns}
    print("  ".join(c.rjust(widths[c]) for c in columns))
    for row in rows:
        print("  ".join(str(row[c]).rjust(widths[c]) for c in columns))


def _emit_rows(rows: list[dict], columns: list[str], fmt: str) -> None:
    if fmt == "json":
        for row in rows:
            print(json.dumps(row))
    elif fmt == "csv":
        writer = csv.DictWriter(sys.stdout, fieldnames=columns)
        writer.writeheader()
        writer.writerows(rows)
    else:
        _print_table(rows, columns)


# -- subcommands -----------------------------------------------------------------


def cmd_pairs(args) -> int:
    if args.action == "list":
        for name, sig, desc in catalog_entries():
            params = f"({sig})" if sig else ""
            print(f"{name}{params}: {desc}")
        return 0
    # validate
    pair = _pair_from_args(args)
    bound = args.bound if args.bound is not None else 1000
    report = pair.validate(bound)
    print(f"pair: {pair!r}")
    print(f"closure check up to {bound}: "
          + ("ok" if report.ok else "FAIL, " + report.message()))
    status = 0 if report.ok else 1
    if report.ok and pair.closed_s2 is not None:
        diffs = pair.s2_discrepancies(bound)
        if diffs:
            print(f"S2 closed-form cross-check up to {bound}: "
                  f"{len(diffs)} discrepancies, first at m={diffs[0]}")
            status = 1
        else:
            print(f"S2 closed-form cross-check up to {bound}: ok")
    return status


def cmd_verify(args) -> int:
    pair = _pair_from_args(args)
    ns = _parse_range(args.n if args.n is not None else "0..30")
    pair.ensure_valid(max(ns))
    rows = []
    failed = False
    for n in ns:
        rep = beck_statistics(pair, n)
        rows.append(rep.to_dict())
        if args.identity == "beck1" and not rep.ok_beck1:
            failed = True
        elif args.identity == "beck2" and not rep.ok_beck2:
            failed = True
        elif args.identity == "counts" and rep.count_o != rep.count_d:
            failed = True
    _emit_rows(rows, REPORT_COLUMNS, args.format or "table")
    return 1 if failed else 0


def cmd_series(args) -> int:
    pair = _pair_from_args(args)
    degree = args.degree if args.degree is not None else 60
    # A failed closure is reported but does not abort: the comparisons
    # below then act as the negative control and surface the first
    # mismatching degree.
    closure = pair.validate(max(degree, pair.r))
    r = pair.r
    gf_d, gf_o = series.gf_counts(pair, degree)
    checks = [
        ("gf_D == gf_O", gf_d, gf_o),
        ("(r-1)*gf_a == gf_b", series.gf_a(pair, degree).scale(r - 1),
         series.gf_b(pair, degree)),
        ("gf_b == (r-1)*gf_c", series.gf_b(pair, degree),
         series.gf_c(pair, degree).scale(r - 1)),
        ("gf_b' == gf_c'", series.gf_b_prime(pair, degree),
         series.gf_c_prime(pair, degree)),
        ("sets identity", *series.sets_identity_sides(pair, degree)),
    ]
    print(f"pair: {pair!r}, degree bound {degree}")
    status = 0
    if not closure.ok:
        print(f"closure: FAIL, {closure.message()}")
        status = 1
    for label, lhs, rhs in checks:
        miss = series.first_mismatch(lhs, rhs)
        if miss is None:
            print(f"check {label}: ok")
        else:
            deg, left, right = miss
            print(f"check {label}: MISMATCH at degree {deg}: lhs={left} rhs={right}")
            status = 1
    return status


_MAPS = {
    # name: (parse input, forward, inverse or None, format output)
    "glaisher-merge": (parse_partition, bij.glaisher_merge, bij.glaisher_split,
                       format_partition),
    "glaisher-split": (parse_partition, bij.glaisher_split, bij.glaisher_merge,
                       format_partition),
    "dd-to-o1r": (bij.parse_decorated, bij.decorated_to_o1r, bij.o1r_to_decorated,
                  format_partition),
    "o1r-to-dd": (parse_partition, bij.o1r_to_decorated, bij.decorated_to_o1r,
                  bij.format_decorated),
    "dd-to-d1r": (bij.parse_decorated, bij.decorated_to_d1r, bij.d1r_to_decorated,
                  format_partition),
    "d1r-to-dd": (parse_partition, bij.d1r_to_decorated, bij.decorated_to_d1r,
                  bij.format_decorated),
    "overlined-to-t": (bij.parse_overlined, bij.overlined_to_t, bij.t_to_overlined,
                       format_partition),
    "t-to-overlined": (parse_partition, bij.t_to_overlined, bij.overlined_to_t,
                       bij.format_overlined),
    "marked-to-dd": (bij.parse_marked, bij.marked_to_decorated, None,
                     bij.format_decorated),
}


def cmd_map(args) -> int:
    pair = _pair_from_args(args)
    parse, forward, inverse, fmt = _MAPS[args.name]
    obj = parse(args.input)
    result = forward(pair, obj)
    if args.format == "json":
        payload = (result.to_json() if hasattr(result, "to_json")
                   else {"parts": [[v, m] for v, m in result.parts]})
        print(json.dumps(payload))
    else:
        print(fmt(result))
    if args.roundtrip:
        if inverse is None:
            back = bij.decorated_fiber(pair, result)
            ok = obj in back
        else:
            ok = inverse(pair, result) == obj
        print("roundtrip: " + ("ok" if ok else "FAIL"))
        return 0 if ok else 1
    return 0


def cmd_multi(args) -> int:
    pair = _pair_from_args(args)
    if args.target:
        targets = [tuple(int(x) for x in args.target.split(","))]
    else:
        s = args.s if args.s is not None else 2
        max_sum = args.max_component_sum if args.max_component_sum is not None else 8
        targets = multi.targets_with_component_sum(s, max_sum)
    rows = []
    failed = False
    for target in targets:
        rep = multi.v_beck_statistics(pair, target)
        row = rep.to_dict()
        row["target"] = ",".join(map(str, target))
        rows.append(row)
        if not (rep.ok_i and rep.ok_ii):
            failed = True
    columns = ["target", "VD_r", "VO_r", "vb_r", "vb'_r", "one_repeated",
               "one_nonprimitive", "t_analogue", "ok_i", "ok_ii"]
    _emit_rows(rows, columns, args.format or "table")
    return 1 if failed else 0


# -- parser ----------------------------------------------------------------------


def _add_pair_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--pair", help="catalog family id (see `pairs list`)")
    sub.add_argument("--r", type=int, help="order r, for parameterized families")
    sub.add_argument("--p", type=int, help="prime p, for family-viii")
    sub.add_argument("--modulus", type=int, help="modulus, for custom pairs")
    sub.add_argument("--residues", help="comma-separated residues, for custom pairs")
    sub.add_argument("--config", help="JSON config file mirroring the flags")
    sub.add_argument("--format", choices=["table", "json", "csv"],
                     help="output format (default table)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="beckpairs",
        description="Exact verification of Beck-type companion identities "
                    "for Euler pairs of order r.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("pairs", help="list the pair catalog or validate one pair")
    p.add_argument("action", choices=["list", "validate"])
    p.add_argument("--bound", type=int, help="closure check bound (default 1000)")
    _add_pair_options(p)
    p.set_defaults(func=cmd_pairs)

    p = subs.add_parser("verify", help="sweep n and check the identities by enumeration")
    p.add_argument("identity", choices=["beck1", "beck2", "counts"])
    p.add_argument("--n", help="size range A..B (default 0..30)")
    _add_pair_options(p)
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("series", help="compare the generating-function routes")
    p.add_argument("--degree", type=int, help="degree bound (default 60)")
    _add_pair_options(p)
    p.set_defaults(func=cmd_series)

    p = subs.add_parser("map", help="apply one bijection to one input")
    p.add_argument("name", choices=sorted(_MAPS))
    p.add_argument("--input", required=True, help="partition or annotated text form")
    p.add_argument("--roundtrip", action="store_true",
                   help="apply the inverse and check identity")
    _add_pair_options(p)
    p.set_defaults(func=cmd_map)

    p = subs.add_parser("multi", help="verify the vector-partition identities")
    p.add_argument("--s", type=int, help="tuple length (default 2)")
    p.add_argument("--max-component-sum", type=int, dest="max_component_sum",
                   help="sweep bound on component sums (default 8)")
    p.add_argument("--target", help="single target, e.g. 7,4")
    _add_pair_options(p)
    p.set_defaults(func=cmd_multi)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _load_config(args)
        return args.func(args)
    except (PairError, PartitionError, bij.MappingError, multi.MultipartError,
            series.SeriesError, OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
