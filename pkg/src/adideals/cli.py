"""Command line surface: enumerate, classify, count, verify, tables.

Exit codes: 0 on success, 1 on a verification mismatch, 2 on usage
errors (including refused oversized dumps).  Output is deterministic:
identical invocations produce identical bytes.
"""

import argparse
import csv
import io
import json
import sys

from .rootsys import Root, build
from . import ideals as I
from . import affine as A
from . import classical_types as C
from . import lattice_count as L
from . import verify as V

IDEAL_RECORD_SCHEMA_ID = "adideals/ideal-record/v1"

IDEAL_RECORD_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "$id": IDEAL_RECORD_SCHEMA_ID,
    "type": "object",
    "required": [
        "generators", "size", "strictly_positive", "abelian", "minimax",
        "heisenberg_contained", "rootlet", "length_min", "lattice_image", "y",
    ],
    "properties": {
        "generators": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer"}},
        },
        "size": {"type": "integer", "minimum": 0},
        "strictly_positive": {"type": "boolean"},
        "abelian": {"type": "boolean"},
        "minimax": {"type": "boolean"},
        "heisenberg_contained": {"type": "boolean"},
        "rootlet": {
            "type": "object",
            "required": ["level", "root"],
            "properties": {
                "level": {"type": "integer"},
                "root": {"type": "array", "items": {"type": "integer"}},
            },
            "additionalProperties": False,
        },
        "length_min": {"type": "integer", "minimum": 0},
        "lattice_image": {"type": "array", "items": {"type": "integer"}},
        "y": {"type": "array", "items": {"type": "integer"}},
    },
    "additionalProperties": False,
}

# refuse unguarded dumps beyond these budgets
MAX_TEXT_RECORDS = 100_000
MAX_CLASSIFY_WORK = 100_000_000

_CLASS_TOKENS = {
    "all", "strictly-positive", "abelian", "non-abelian", "minimax",
    "heisenberg-contained", "nontrivial",
}


def ideal_record(ideal: I.Ideal) -> dict:
    """Full classification record of one ideal (schema ideal-record/v1)."""
    rs = ideal.rs
    w = A.w_min(ideal)
    nu, level = A.rootlet(w)
    point = A.lattice_image(w)
    y = [int(rs.bilinear(point, rs.alpha(i).coords)) for i in range(rs.rank)]
    heis = I.heisenberg_root_mask(rs)
    return {
        "generators": [list(r.coords) for r in I.generators(ideal).roots],
        "size": ideal.size,
        "strictly_positive": I.is_strictly_positive(ideal),
        "abelian": I.is_abelian(ideal),
        "minimax": I.is_minimax(ideal),
        "heisenberg_contained": not ideal.mask & ~heis,
        "rootlet": {"level": level, "root": list(nu.coords)},
        "length_min": A.length(w),
        "lattice_image": list(point),
        "y": y,
    }


def _record_line(rec: dict) -> str:
    gens = ";".join(",".join(map(str, g)) for g in rec["generators"]) or "-"
    flags = "".join(
        tag if rec[key] else "-"
        for tag, key in (("P", "strictly_positive"), ("A", "abelian"),
                         ("M", "minimax"), ("H", "heisenberg_contained"))
    )
    return "gens=%s size=%d flags=%s rootlet=%d:[%s] len=%d y=(%s)" % (
        gens, rec["size"], flags, rec["rootlet"]["level"],
        ",".join(map(str, rec["rootlet"]["root"])), rec["length_min"],
        ",".join(map(str, rec["y"])),
    )


def _parse_class(raw: str):
    tokens = [t.strip() for t in raw.split(",") if t.strip()]
    bad = [t for t in tokens if t not in _CLASS_TOKENS]
    if bad:
        raise ValueError(
            "unknown class %r; tokens may be %s" % (bad[0], sorted(_CLASS_TOKENS))
        )
    return tokens or ["all"]


def _matches(rec: dict, tokens) -> bool:
    for t in tokens:
        if t == "strictly-positive" and not rec["strictly_positive"]:
            return False
        if t == "abelian" and not rec["abelian"]:
            return False
        if t == "non-abelian" and rec["abelian"]:
            return False
        if t == "minimax" and not rec["minimax"]:
            return False
        if t == "heisenberg-contained" and not rec["heisenberg_contained"]:
            return False
        if t == "nontrivial" and rec["size"] == 0:
            return False
    return True


def cmd_enumerate(args, out) -> int:
    rs = build(args.type, args.rank)
    tokens = _parse_class(args.klass)
    expected = L.count_AD(rs).value
    # element reconstruction per ideal costs about length^2, and lengths
    # are bounded by the summed root heights
    height_sum = sum(r.height for r in rs.positive_roots)
    work = expected * height_sum ** 2
    if not args.force:
        if args.format == "text" and expected > MAX_TEXT_RECORDS:
            print(
                "refusing to dump %d records as text; pass --force to insist"
                % expected, file=sys.stderr)
            return 2
        if work > MAX_CLASSIFY_WORK:
            print(
                "refusing to classify %d ideals of %s (heavy sweep); "
                "pass --force to insist"
                % (expected, V.system_name(args.type, args.rank)),
                file=sys.stderr)
            return 2
    records = (
        rec for rec in (ideal_record(idl) for idl in I.enumerate_ideals(rs))
        if _matches(rec, tokens)
    )
    if args.format == "json":
        payload = {
            "schema": IDEAL_RECORD_SCHEMA_ID,
            "type": args.type,
            "rank": args.rank,
            "class": ",".join(tokens),
            "records": list(records),
        }
        payload["count"] = len(payload["records"])
        json.dump(payload, out, indent=1, sort_keys=True)
        out.write("\n")
    elif args.format == "csv":
        writer = csv.writer(out)
        writer.writerow(["generators", "size", "strictly_positive", "abelian",
                         "minimax", "heisenberg_contained", "rootlet_level",
                         "rootlet_root", "length_min", "lattice_image", "y"])
        for rec in records:
            writer.writerow([
                ";".join(",".join(map(str, g)) for g in rec["generators"]),
                rec["size"], rec["strictly_positive"], rec["abelian"],
                rec["minimax"], rec["heisenberg_contained"],
                rec["rootlet"]["level"],
                ",".join(map(str, rec["rootlet"]["root"])),
                rec["length_min"],
                ",".join(map(str, rec["lattice_image"])),
                ",".join(map(str, rec["y"])),
            ])
    else:
        count = 0
        for rec in records:
            out.write(_record_line(rec) + "\n")
            count += 1
        out.write("# %d record(s) for %s class=%s\n"
                  % (count, V.system_name(args.type, args.rank),
                     ",".join(tokens)))
    return 0


def cmd_classify(args, out) -> int:
    rs = build(args.type, args.rank)
    gens = json.loads(args.generators)
    antichain = I.Antichain(rs, [Root(tuple(g)) for g in gens])
    rec = ideal_record(I.ideal_of(antichain))
    if args.format == "json":
        json.dump({"schema": IDEAL_RECORD_SCHEMA_ID, "record": rec}, out,
                  indent=1, sort_keys=True)
        out.write("\n")
    else:
        out.write(_record_line(rec) + "\n")
    return 0


def cmd_count(args, out) -> int:
    rs = build(args.type, args.rank)
    if args.quantity == "AD":
        report = L.count_AD(rs)
    elif args.quantity == "AD0":
        report = L.count_AD0(rs)
    elif args.quantity == "minimax":
        report = L.count_minimax(rs)
    else:  # heisenberg_nontrivial = #(Delta_long \ Pi)
        n_long = rs.long_mask.bit_count()
        n_long_simple = sum(1 for i in rs.simple_indices if rs.long_mask >> i & 1)
        report = L.CountReport(rs.type_label, rs.rank, "heisenberg_nontrivial",
                               2 * n_long - n_long_simple, "closed_form")
    if args.format == "json":
        json.dump(report.__dict__, out, indent=1, sort_keys=True)
        out.write("\n")
    elif args.format == "csv":
        writer = csv.writer(out)
        writer.writerow(["type", "rank", "quantity", "value", "method",
                         "congruence_applied"])
        writer.writerow(report.csv_row())
    else:
        out.write(
            "type=%s rank=%d quantity=%s value=%d method=%s congruence_applied=%s\n"
            % (report.type_label, report.rank, report.quantity, report.value,
               report.method, report.congruence_applied))
    return 0


def cmd_verify(args, out) -> int:
    names = V.SUITE_NAMES if args.suite == "all" else (args.suite,)
    failures = 0
    results = []
    for name in names:
        for row in V.run_suite(name):
            results.append(row)
            if not row.ok:
                failures += 1
    if args.format == "json":
        json.dump(
            {
                "suites": list(names),
                "passed": failures == 0,
                "results": [
                    {"suite": r.suite, "name": r.name, "ok": r.ok,
                     "expected": repr(r.expected), "computed": repr(r.computed)}
                    for r in results
                ],
            },
            out, indent=1, sort_keys=True)
        out.write("\n")
    else:
        for r in results:
            if r.ok:
                out.write("ok   [%s] %s = %s\n" % (r.suite, r.name, r.computed))
            else:
                out.write("FAIL [%s] %s: expected=%s computed=%s\n"
                          % (r.suite, r.name, r.expected, r.computed))
        out.write("# %d check(s), %d failure(s)\n" % (len(results), failures))
    return 1 if failures else 0


def cmd_tables(args, out) -> int:
    which = args.which
    if which in ("sequences", "all"):
        out.write("n        : " + " ".join("%6d" % n for n in range(1, 9)) + "\n")
        out.write("A_n      : " + " ".join(
            "%6d" % L.count_minimax(build("A", n)).value for n in range(1, 9)) + "\n")
        out.write("B_n/C_n  : " + "   -   " + " ".join(
            "%6d" % L.count_minimax(build("C", n)).value for n in range(2, 9)) + "\n")
        out.write("D_n      : " + "   -   " * 3 + " ".join(
            "%6d" % L.count_minimax(build("D", n)).value for n in range(4, 9)) + "\n")
        out.write("exceptional: " + " ".join(
            "%s=%d" % (t, L.count_minimax(build(t, r)).value)
            for t, r in (("G2", 2), ("F4", 4), ("E6", 6), ("E7", 7), ("E8", 8)))
            + "\n")
    if which in ("f4", "all"):
        out.write("non-Abelian minimax ideals of F4:\n")
        out.write("generators | #I | #I^2 | w(alpha_0) | y\n")
        for row in V.minimax_table_rows(build("F4", 4)):
            out.write("%s | %d | %d | %s | %s\n" % (
                " ".join("[%s]" % ",".join(map(str, g)) for g in row["generators"]),
                row["size"], row["size2"], row["w_alpha0"], row["y"]))
    if which in ("fmm", "all"):
        for n in range(1, 7):
            out.write("F_mm(A%d) = %s\n" % (n, C.generating_function_Fmm("A", n)))
        for n in range(2, 7):
            out.write("F_mm(C%d) = %s\n" % (n, C.generating_function_Fmm("C", n)))
        for label, lo in (("B", 2), ("D", 4)):
            for n in range(lo, 6):
                dist = C.minimax_generator_distribution(build(label, n))
                out.write("F_mm(%s%d) = %s (empirical; no closed form)\n"
                          % (label, n, dist))
    return 0


def _add_system_args(p):
    p.add_argument("--type", required=True,
                   choices=["A", "B", "C", "D", "E6", "E7", "E8", "F4", "G2"])
    p.add_argument("--rank", required=True, type=int)


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="adideals",
        description="Ideals of positive root posets: enumeration, minimax "
                    "classification, and lattice-point counts.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="stream classified ideal records")
    _add_system_args(p)
    p.add_argument("--class", dest="klass", default="all",
                   help="comma-joined filters: " + ", ".join(sorted(_CLASS_TOKENS)))
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.add_argument("--out", default=None)
    p.add_argument("--force", action="store_true",
                   help="allow oversized dumps")

    p = sub.add_parser("classify", help="classify one ideal given its generators")
    _add_system_args(p)
    p.add_argument("--generators", required=True,
                   help="JSON list of coordinate vectors, e.g. [[1,1,0],[0,1,1]]")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out", default=None)

    p = sub.add_parser("count", help="count a quantity with method provenance")
    _add_system_args(p)
    p.add_argument("--quantity", required=True,
                   choices=["AD", "AD0", "minimax", "heisenberg_nontrivial"])
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.add_argument("--out", default=None)

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument("--suite", default="all", choices=("all",) + V.SUITE_NAMES)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out", default=None)

    p = sub.add_parser("tables", help="print the reproduced tables")
    p.add_argument("--which", default="all",
                   choices=["all", "sequences", "f4", "fmm"])
    p.add_argument("--out", default=None)
    return parser


_HANDLERS = {
    "enumerate": cmd_enumerate,
    "classify": cmd_classify,
    "count": cmd_count,
    "verify": cmd_verify,
    "tables": cmd_tables,
}


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        if args.out:
            buf = io.StringIO()
            code = _HANDLERS[args.command](args, buf)
            with open(args.out, "w") as fh:
                fh.write(buf.getvalue())
        else:
            code = _HANDLERS[args.command](args, sys.stdout)
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    return code


if __name__ == "__main__":
    sys.exit(main())
