"""Command-line front end.

Subcommands mirror the library: efficiency, digits, codes, benford,
logic, and report.  Tabular output is rendered as markdown (default),
CSV or JSON; values are formatted once at row-building time so every
format shows the same figures.  Exit codes: 0 success, 1 computation or
input error, 2 usage error.
"""

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

from . import benford, codes, logic, numerals, radix, report as report_mod

PROBABILITY_DECIMALS = 3


def _fmt_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator} ({float(x):.3f})"


def _fmt_float(x: float, decimals: int = PROBABILITY_DECIMALS) -> str:
    return f"{x:.{decimals}f}"


def _fmt_base(b: float) -> str:
    return str(int(b)) if float(b).is_integer() else f"{b:g}"


def render(fmt: str, columns: list[str], rows: list[list]) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        writer.writerows(rows)
        return buf.getvalue()
    if fmt == "markdown":
        lines = [
            "| " + " | ".join(str(c) for c in columns) + " |",
            "| " + " | ".join("---" for _ in columns) + " |",
        ]
        lines += ["| " + " | ".join(str(v) for v in row) + " |" for row in rows]
        return "\n".join(lines) + "\n"
    if fmt == "json":
        return json.dumps([dict(zip(columns, row)) for row in rows], indent=2) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def _emit(args, columns: list[str], rows: list[list]) -> int:
    sys.stdout.write(render(args.format, columns, rows))
    return 0


# --- efficiency -------------------------------------------------------------


def _parse_base_list(text: str, parser) -> list[float]:
    out = []
    for part in text.split(","):
        part = part.strip()
        try:
            value = math.e if part.lower() == "e" else float(part)
        except ValueError:
            parser.error(f"not a base: {part!r}")
        if value <= 1:
            parser.error(f"bases must be > 1, got {part}")
        out.append(value)
    if not out:
        parser.error("empty base list")
    return out


def cmd_efficiency(args, parser) -> int:
    if args.table1:
        from .refdata import TABLE1_BASES

        bases = list(TABLE1_BASES)
    elif args.bases:
        bases = _parse_base_list(args.bases, parser)
    elif args.start is not None or args.stop is not None:
        if args.start is None or args.stop is None:
            parser.error("--from and --to must be given together")
        if not (1 < args.start < args.stop) or args.step <= 0:
            parser.error("need 1 < --from < --to and --step > 0")
        bases = [p.base for p in radix.efficiency_curve(args.start, args.stop, args.step)]
    else:
        parser.error("choose --table1, --bases, or --from/--to/--step")
    rows = [
        [
            _fmt_base(b),
            _fmt_float(radix.efficiency(b, radix.NATS)),
            _fmt_float(radix.efficiency(b, radix.BITS)),
        ]
        for b in bases
    ]
    return _emit(args, ["base", "nats", "bits"], rows)


# --- digits -----------------------------------------------------------------


def cmd_digits(args, parser) -> int:
    if args.table2:
        section = report_mod.build_report().section("table2")
        return _emit(args, list(section.columns), [list(r) for r in section.rows])
    bases = [int(b) for b in args.bases.split(",")] if args.bases else [2, 3]
    if any(b < 2 for b in bases):
        parser.error("bases must be >= 2")
    if args.n is not None:
        ns = [args.n]
    elif args.start is not None and args.stop is not None:
        if args.start > args.stop:
            parser.error("--from must not exceed --to")
        ns = list(range(args.start, args.stop + 1))
    else:
        parser.error("choose --table2, --n, or --from/--to")
    if ns[0] < 1:
        parser.error("N must be >= 1")
    rows = []
    for n in ns:
        for b in bases:
            tally = numerals.range_count(n, b)
            rows.append([n, b, tally.total_digits, tally.range_count])
    return _emit(args, ["N", "base", "total_digits", "range_count"], rows)


# --- codes ------------------------------------------------------------------


def _code_rows(table: codes.CodeTable, weights=None) -> tuple[list[str], list[list]]:
    if weights is None:
        columns = ["symbol", "codeword", "length"]
        rows = [[i, str(c), len(c)] for i, c in enumerate(table.codewords)]
    else:
        columns = ["symbol", "weight", "codeword", "length"]
        rows = [
            [i, f"{w:g}", str(c), len(c)]
            for i, (w, c) in enumerate(zip(weights, table.codewords))
        ]
    return columns, rows


def cmd_codes(args, parser) -> int:
    if getattr(args, "table3", False):
        section = report_mod.build_report().section("table3")
        return _emit(args, list(section.columns), [list(r) for r in section.rows])
    if getattr(args, "table4", False):
        rows = [
            [
                r.num_symbols,
                _fmt_rational(r.binary_bits),
                _fmt_rational(r.ternary_trits),
                _fmt_float(r.ternary_bits),
            ]
            for r in codes.table4_report()
        ]
        return _emit(
            args, ["symbols", "binary_bits", "ternary_trits", "ternary_bits"], rows
        )
    if args.mode == "enum":
        if args.symbols < 2:
            parser.error("--symbols must be >= 2")
        if args.radix < 2:
            parser.error("--radix must be >= 2")
        table = codes.enumeration_code(args.symbols, args.radix)
        columns, rows = _code_rows(table)
        avg = codes.average_length(table)
        rows.append(["average", "", _fmt_rational(avg)])
        rows.append(["average_bits", "", _fmt_float(codes.to_bits(avg, args.radix))])
        return _emit(args, columns, rows)
    if args.mode == "huffman":
        if args.radix < 2:
            parser.error("--radix must be >= 2")
        try:
            with open(args.weights, encoding="utf-8") as fh:
                weights = codes.parse_weights(fh)
            table = codes.huffman(weights, args.radix)
        except (OSError, ValueError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        columns, rows = _code_rows(table, weights)
        expected = codes.expected_length(table, weights)
        rows.append(["expected", "", "", _fmt_float(expected)])
        rows.append(["expected_bits", "", "", _fmt_float(codes.to_bits(expected, args.radix))])
        return _emit(args, columns, rows)
    parser.error("choose a codes subcommand (enum, huffman) or --table3/--table4")


# --- benford ----------------------------------------------------------------


def cmd_benford(args, parser) -> int:
    if args.table5:
        section = report_mod.build_report().section("table5")
        return _emit(args, list(section.columns), [list(r) for r in section.rows])
    if args.base is None:
        parser.error("choose --base or --table5")
    if args.base < 3:
        parser.error("--base must be >= 3")
    if args.identities:
        rows = [
            [
                f"P({ident.lhs})",
                "P(" + ")+P(".join(str(d) for d in ident.rhs) + ")",
                _fmt_float(ident.lhs_value, 6),
                _fmt_float(ident.rhs_value, 6),
                f"{ident.residual:.2e}",
            ]
            for ident in benford.digit_identities(args.base)
        ]
        return _emit(args, ["lhs", "rhs", "lhs_value", "rhs_value", "residual"], rows)
    if args.coding_cost:
        if args.base < 4:
            parser.error("--coding-cost needs --base >= 4")
        cost = benford.coding_cost_comparison(args.base)
        rows = [
            [
                cost.base,
                _fmt_float(cost.binary_bits),
                _fmt_float(cost.ternary_trits),
                _fmt_float(cost.ternary_bits),
            ]
        ]
        return _emit(args, ["base", "binary_bits", "ternary_trits", "ternary_bits"], rows)
    dist = benford.first_digit_probs(args.base)
    rows = [[d, _fmt_float(dist.p(d))] for d in range(1, args.base)]
    return _emit(args, ["digit", "probability"], rows)


# --- logic ------------------------------------------------------------------

_TRIT_ALIASES = {
    "T": logic.Trit.TRUE,
    "TRUE": logic.Trit.TRUE,
    "1": logic.Trit.TRUE,
    "+1": logic.Trit.TRUE,
    "U": logic.Trit.UNKNOWN,
    "UNKNOWN": logic.Trit.UNKNOWN,
    "0": logic.Trit.UNKNOWN,
    "F": logic.Trit.FALSE,
    "FALSE": logic.Trit.FALSE,
    "-1": logic.Trit.FALSE,
}


def _parse_bindings(args, parser) -> logic.Bindings:
    env = logic.Bindings()
    for item in args.bind or []:
        name, sep, value = item.partition("=")
        if not sep or not name:
            parser.error(f"--bind expects NAME=VALUE, got {item!r}")
        trit = _TRIT_ALIASES.get(value.strip().upper())
        if trit is None:
            parser.error(f"--bind value must be one of T/U/F, TRUE/UNKNOWN/FALSE, -1/0/1; got {value!r}")
        env.trits[name.strip()] = trit
    for item in args.data or []:
        name, sep, value = item.partition("=")
        if not sep or not name:
            parser.error(f"--data expects NAME=VALUE, got {item!r}")
        value = value.strip()
        if value.upper() == "NULL":
            env.data[name.strip()] = None
        else:
            try:
                env.data[name.strip()] = int(value)
            except ValueError:
                parser.error(f"--data value must be an integer or NULL, got {value!r}")
    return env


def cmd_logic(args, parser) -> int:
    try:
        expr = logic.parse(args.expression)
    except logic.ExprError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.mode == "eval":
        env = _parse_bindings(args, parser)
        try:
            result = logic.evaluate(expr, env)
        except logic.EvaluationError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        print(int(result))
        return 0
    # mode == "table"
    try:
        table = logic.truth_table(expr)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    columns = list(table.variables) + ["result"]
    rows = [[int(v) for v in row] for row in table.rows]
    return _emit(args, columns, rows)


# --- report -----------------------------------------------------------------


def cmd_report(args, parser) -> int:
    rep = report_mod.build_report()
    if args.format == "json":
        payload = {
            "sections": [
                {
                    "key": s.key,
                    "title": s.title,
                    "columns": list(s.columns),
                    "rows": [list(r) for r in s.rows],
                    "notes": list(s.notes),
                }
                for s in rep.sections
            ],
            "discrepancies": [
                {
                    "table": d.table,
                    "cell": d.cell,
                    "published": d.published,
                    "computed": d.computed,
                    "note": d.note,
                }
                for d in rep.discrepancies
            ],
        }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
        return 0
    if args.format == "csv":
        parser.error("report is a document; use --format markdown or json")
    out = ["# Reference table reproduction report", ""]
    for s in rep.sections:
        out.append(f"## {s.title}")
        out.append("")
        out.append(render("markdown", list(s.columns), [list(r) for r in s.rows]).rstrip())
        for note in s.notes:
            out.append("")
            out.append(f"- {note}")
        out.append("")
    out.append("## Discrepancies")
    out.append("")
    if rep.discrepancies:
        out.append(
            render(
                "markdown",
                ["table", "cell", "published", "computed", "note"],
                [[d.table, d.cell, d.published, d.computed, d.note] for d in rep.discrepancies],
            ).rstrip()
        )
    else:
        out.append("none")
    out.append("")
    sys.stdout.write("\n".join(out))
    return 0


# --- wiring -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tritlab",
        description="Number-base efficiency, digit tallies, prefix codes, "
        "first-digit law, and three-valued logic workbench.",
    )
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument(
        "--format",
        choices=("csv", "markdown", "json"),
        default="markdown",
        help="output format (default: markdown)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("efficiency", parents=[fmt], help="per-symbol coding efficiency by base")
    p.add_argument("--table1", action="store_true", help="the 10 reference bases including e")
    p.add_argument("--bases", help="comma-separated bases, e.g. 2,e,3")
    p.add_argument("--from", dest="start", type=float, help="curve start")
    p.add_argument("--to", dest="stop", type=float, help="curve end")
    p.add_argument("--step", type=float, default=1.0, help="curve step (default 1)")
    p.set_defaults(func=cmd_efficiency)

    p = sub.add_parser("digits", parents=[fmt], help="digit tallies and range counts")
    p.add_argument("--table2", action="store_true", help="reference range counts with oracle column")
    p.add_argument("--n", type=int, help="single upper bound N")
    p.add_argument("--from", dest="start", type=int, help="range of N: start")
    p.add_argument("--to", dest="stop", type=int, help="range of N: end")
    p.add_argument("--bases", help="comma-separated integer bases (default 2,3)")
    p.set_defaults(func=cmd_digits)

    p = sub.add_parser("codes", parents=[fmt], help="prefix code construction")
    p.add_argument("--table3", action="store_true", help="reference enumeration codes")
    p.add_argument("--table4", action="store_true", help="binary vs ternary length comparison")
    codes_sub = p.add_subparsers(dest="mode")
    pe = codes_sub.add_parser("enum", parents=[fmt], help="enumeration code for equiprobable symbols")
    pe.add_argument("--symbols", type=int, required=True)
    pe.add_argument("--radix", type=int, default=2)
    ph = codes_sub.add_parser("huffman", parents=[fmt], help="Huffman code from a weights file")
    ph.add_argument("--weights", required=True, help="file with one nonnegative weight per line")
    ph.add_argument("--radix", type=int, default=2)
    p.set_defaults(func=cmd_codes, mode=None)

    p = sub.add_parser("benford", parents=[fmt], help="first-digit law distributions")
    p.add_argument("--base", type=int, help="base for the distribution")
    p.add_argument("--table5", action="store_true", help="reference frequencies for bases 3..10")
    p.add_argument("--identities", action="store_true", help="digit-sum identities for --base")
    p.add_argument(
        "--coding-cost",
        dest="coding_cost",
        action="store_true",
        help="binary vs ternary Huffman cost for --base",
    )
    p.set_defaults(func=cmd_benford)

    p = sub.add_parser("logic", parents=[fmt], help="three-valued logic expressions")
    logic_sub = p.add_subparsers(dest="mode", required=True)
    pv = logic_sub.add_parser("eval", parents=[fmt], help="evaluate an expression")
    pv.add_argument("expression")
    pv.add_argument("--bind", action="append", metavar="NAME=T|U|F", help="trit variable binding")
    pv.add_argument("--data", action="append", metavar="NAME=INT|NULL", help="data variable binding")
    pt = logic_sub.add_parser("table", parents=[fmt], help="truth table of an expression")
    pt.add_argument("expression")
    p.set_defaults(func=cmd_logic)

    p = sub.add_parser("report", parents=[fmt], help="full reproduction report with discrepancies")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
