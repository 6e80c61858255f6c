"""Command line front end.

Subcommands:
  metrics   vector file -> paper count, totals, impact factor, h, g,
            and both decompositions
  windowed  publication + citation-event logs -> windowed impact factor
  rank      aggregate table -> stable ranking by a chosen key
  table3    aggregate table -> derived analytical columns
  verify    vector file -> decomposition identity report (exit 2 on any
            false verdict)
  plotdata  aggregate table -> csv series for one of the figure shapes

Exit codes: 0 success, 1 validation or i/o error, 2 verification failure.
Validation errors go to stderr and leave stdout empty. Decimal output is
rendered round-half-up at --precision places; --format json carries exact
ratios as numerator/denominator pairs.
"""

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .analysis import (
    FIGURES,
    RANK_KEYS,
    derive_analytical_table,
    derived_table_to_csv,
    emit_plot_series,
    erratum_check,
    plot_series_to_csv,
    rank_journals,
)
from .core import (
    G_CONVENTIONS,
    compute_journal_metrics,
    decompose_g,
    decompose_h,
    verify_relation,
)
from .errors import IngestError, UndefinedRatioError, ValidationError
from .ingest import (
    parse_aggregate_table,
    parse_citation_vector,
    parse_event_log,
    serialize_aggregate_table,
)
from .render import format_rational
from .windowed import build_ledger, window_counts, windowed_impact_factor


class _ArgumentError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # map argparse's own exit(2) onto the validation-error path
    def error(self, message):
        raise _ArgumentError(message)


def _fraction_json(value: Fraction, precision: int) -> dict:
    return {
        "numerator": value.numerator,
        "denominator": value.denominator,
        "rendered": format_rational(value, precision),
    }


def _print_csv_row(headers, values) -> None:
    import csv
    import io

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(headers)
    writer.writerow(values)
    print(buf.getvalue(), end="")


def _table(headers, rows) -> str:
    cells = [[str(c) for c in row] for row in rows]
    widths = [len(h) for h in headers]
    for row in cells:
        widths = [max(w, len(c)) for w, c in zip(widths, row)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    for row in cells:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def _load_vector(args):
    path = Path(args.vector_file)
    fmt = args.input_format or ("json" if path.suffix.lower() == ".json" else "csv")
    text = path.read_text(encoding="utf-8")
    return parse_citation_vector(text, format=fmt, name=path.stem)


def _load_table(path_text: str):
    return parse_aggregate_table(Path(path_text).read_text(encoding="utf-8"))


def cmd_metrics(args) -> int:
    dataset = _load_vector(args)
    v = dataset.vector
    m = compute_journal_metrics(v, g_convention=args.g_convention)
    hd = decompose_h(v)
    gd = decompose_g(v)
    p = args.precision
    if args.format == "json":
        payload = {
            "name": dataset.name,
            "papers": m.papers,
            "total_citations": m.total_citations,
            "impact_factor": _fraction_json(m.i_f, p),
            "h_index": m.h,
            "g_index": m.g,
            "g_convention": args.g_convention,
            "h_decomposition": {"h_sq": hd.h_sq, "excess": hd.excess, "tail": hd.tail_h},
            "g_decomposition": {"g_sq": gd.g_sq, "slack": gd.slack, "tail": gd.tail_g},
        }
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        _print_csv_row(
            [
                "name", "papers", "total_citations", "impact_factor", "h", "g",
                "h_sq", "h_excess", "h_tail", "g_sq", "g_slack", "g_tail",
            ],
            [
                dataset.name, m.papers, m.total_citations, format_rational(m.i_f, p),
                m.h, m.g, hd.h_sq, hd.excess, hd.tail_h, gd.g_sq, gd.slack, gd.tail_g,
            ],
        )
    else:
        print(f"name: {dataset.name}")
        print(f"papers: {m.papers}")
        print(f"total_citations: {m.total_citations}")
        print(
            f"impact_factor: {format_rational(m.i_f, p)} "
            f"(exact {m.i_f.numerator}/{m.i_f.denominator})"
        )
        print(f"h_index: {m.h}")
        print(f"g_index: {m.g} ({args.g_convention} convention)")
        print(
            f"h_decomposition: h_sq={hd.h_sq} excess={hd.excess} tail={hd.tail_h}"
            f" (sum {hd.h_sq + hd.excess + hd.tail_h})"
        )
        print(
            f"g_decomposition: g_sq={gd.g_sq} slack={gd.slack} tail={gd.tail_g}"
            f" (sum {gd.g_sq + gd.slack + gd.tail_g})"
        )
    return 0


def cmd_windowed(args) -> int:
    pubs_text = Path(args.pubs_file).read_text(encoding="utf-8")
    events_text = Path(args.events_file).read_text(encoding="utf-8")
    pubs, events = parse_event_log(pubs_text, events_text)
    ledger = build_ledger(pubs, events)
    value = windowed_impact_factor(ledger, args.base, args.window)
    citations, papers = window_counts(ledger, args.base, args.window)
    evaluation_year = args.base + args.window
    p = args.precision
    if args.format == "json":
        payload = {
            "base_year": args.base,
            "window": args.window,
            "evaluation_year": evaluation_year,
            "papers_in_window": papers,
            "citations_counted": citations,
            "impact_factor": _fraction_json(value, p),
        }
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        _print_csv_row(
            [
                "base_year", "window", "evaluation_year",
                "papers_in_window", "citations_counted", "impact_factor",
            ],
            [args.base, args.window, evaluation_year, papers, citations,
             format_rational(value, p)],
        )
    else:
        print(f"base_year: {args.base}")
        print(f"window: {args.window} ({args.base}..{args.base + args.window - 1})")
        print(f"evaluation_year: {evaluation_year}")
        print(f"papers_in_window: {papers}")
        print(f"citations_counted: {citations}")
        print(
            f"impact_factor: {format_rational(value, p)} "
            f"(exact {value.numerator}/{value.denominator})"
        )
    return 0


def _row_payload(row, precision: int) -> dict:
    return {
        "name": row.name,
        "acronym": row.acronym,
        "total_citations": row.total_citations,
        "papers": row.papers,
        "printed_if": row.printed_if,
        "computed_if": _fraction_json(Fraction(row.total_citations, row.papers), precision),
        "h": row.h,
        "g": row.g,
    }


def cmd_rank(args) -> int:
    rows = _load_table(args.table_file)
    ranked = rank_journals(rows, key=args.key, direction=args.direction)
    p = args.precision
    if args.format == "json":
        print(json.dumps([_row_payload(r, p) for r in ranked], indent=2))
    elif args.format == "csv":
        print(serialize_aggregate_table(ranked), end="")
    else:
        headers = ["rank", "acronym", "name", "total_citations", "papers", "i_f", "h", "g"]
        body = [
            [
                i,
                r.acronym,
                r.name,
                r.total_citations,
                r.papers,
                format_rational(Fraction(r.total_citations, r.papers), p),
                r.h,
                r.g,
            ]
            for i, r in enumerate(ranked, start=1)
        ]
        print(_table(headers, body))
    return 0


def cmd_table3(args) -> int:
    rows = _load_table(args.table_file)
    derived = derive_analytical_table(rows)
    p = args.precision
    if args.format == "json":
        payload = [
            {
                "acronym": d.acronym,
                "total_citations": d.total_citations,
                "papers": d.papers,
                "i_f": _fraction_json(d.i_f, p),
                "h": d.h,
                "g": d.g,
                "h_sq": d.h_sq,
                "g_sq": d.g_sq,
                "g_remainder": d.g_remainder,
                "h_remainder": d.h_remainder,
                "g_sq_minus_h_sq": d.g_sq_minus_h_sq,
            }
            for d in derived
        ]
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        print(derived_table_to_csv(derived, precision=p), end="")
    else:
        headers = [
            "acronym", "total_citations", "papers", "i_f", "h", "g",
            "h_sq", "g_sq", "g_remainder", "h_remainder", "g_sq_minus_h_sq",
        ]
        body = [
            [
                d.acronym, d.total_citations, d.papers, format_rational(d.i_f, p),
                d.h, d.g, d.h_sq, d.g_sq, d.g_remainder, d.h_remainder,
                d.g_sq_minus_h_sq,
            ]
            for d in derived
        ]
        print(_table(headers, body))
        findings = erratum_check(rows)
        for f in findings:
            print(f"note [{f.kind}]: {f.detail}")
    return 0


def cmd_verify(args) -> int:
    dataset = _load_vector(args)
    report = verify_relation(dataset.vector)
    if args.format == "json":
        payload = {
            "name": dataset.name,
            "h": report.h,
            "g": report.g,
            "lhs": report.lhs,
            "rhs_upper": report.rhs_upper,
            "slack": report.slack,
            "excess": report.excess,
            "tail_h": report.tail_h,
            "tail_g": report.tail_g,
            "exact_holds": report.exact_holds,
            "bound_holds": report.bound_holds,
            "tail_diff_nonneg": report.tail_diff_nonneg,
            "all_hold": report.all_hold,
        }
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        _print_csv_row(
            [
                "name", "h", "g", "lhs", "rhs_upper", "slack", "excess",
                "tail_h", "tail_g", "exact_holds", "bound_holds",
                "tail_diff_nonneg",
            ],
            [
                dataset.name, report.h, report.g, report.lhs, report.rhs_upper,
                report.slack, report.excess, report.tail_h, report.tail_g,
                str(report.exact_holds).lower(), str(report.bound_holds).lower(),
                str(report.tail_diff_nonneg).lower(),
            ],
        )
    else:
        print(f"name: {dataset.name}")
        print(f"h_index: {report.h}")
        print(f"g_index: {report.g}")
        print(
            f"identity: lhs {report.lhs} = rhs {report.rhs_upper} - slack {report.slack}"
        )
        print(f"excess: {report.excess}")
        print(f"tail_h: {report.tail_h}")
        print(f"tail_g: {report.tail_g}")
        print(f"exact_holds: {str(report.exact_holds).lower()}")
        print(f"bound_holds: {str(report.bound_holds).lower()}")
        print(f"tail_diff_nonneg: {str(report.tail_diff_nonneg).lower()}")
    return 0 if report.all_hold else 2


def cmd_plotdata(args) -> int:
    rows = _load_table(args.table_file)
    series = emit_plot_series(rows, figure=args.figure)
    p = args.precision
    if args.format == "json":
        payload = {
            "figure": args.figure,
            "ordering": series[0].ordering_key if series else None,
            "series": [
                {
                    "label": s.label,
                    "x": [_value_json(v, p) for v in s.x_values],
                    "y": [_value_json(v, p) for v in s.y_values],
                }
                for s in series
            ],
        }
        out = json.dumps(payload, indent=2) + "\n"
    else:
        out = plot_series_to_csv(series, precision=p)
    if args.out:
        Path(args.out).write_text(out, encoding="utf-8")
    else:
        print(out, end="")
    return 0


def _value_json(value, precision: int):
    if isinstance(value, Fraction):
        return _fraction_json(value, precision)
    return value


def _add_common(sub, formats=("text", "csv", "json")) -> None:
    sub.add_argument(
        "--format", choices=formats, default=formats[0], help="output format"
    )
    sub.add_argument(
        "--precision", type=int, default=3, metavar="N",
        help="decimal places for rendered ratios (round-half-up, default 3)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="citemetrics", description=__doc__.splitlines()[0])
    subs = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    m = subs.add_parser("metrics", help="indices and impact factor of one vector file")
    m.add_argument("vector_file")
    m.add_argument("--input-format", choices=("csv", "json"), default=None,
                   help="vector file format (default: by file extension)")
    m.add_argument("--g-convention", choices=G_CONVENTIONS, default="cap",
                   dest="g_convention", help="bound g by paper count (cap) or pad with zeros")
    _add_common(m)
    m.set_defaults(handler=cmd_metrics)

    w = subs.add_parser("windowed", help="windowed impact factor from event logs")
    w.add_argument("pubs_file")
    w.add_argument("events_file")
    w.add_argument("--base", type=int, required=True, help="first year of the window")
    w.add_argument("--window", type=int, required=True, help="window length in years")
    _add_common(w)
    w.set_defaults(handler=cmd_windowed)

    r = subs.add_parser("rank", help="rank an aggregate journal table")
    r.add_argument("table_file")
    r.add_argument("--key", choices=RANK_KEYS, required=True)
    r.add_argument("--direction", choices=("asc", "desc"), default="asc")
    _add_common(r)
    r.set_defaults(handler=cmd_rank)

    t = subs.add_parser("table3", help="derived analytical table from aggregates")
    t.add_argument("table_file")
    _add_common(t)
    t.set_defaults(handler=cmd_table3)

    v = subs.add_parser("verify", help="check the decomposition identities of a vector")
    v.add_argument("vector_file")
    v.add_argument("--input-format", choices=("csv", "json"), default=None)
    _add_common(v)
    v.set_defaults(handler=cmd_verify)

    p = subs.add_parser("plotdata", help="emit plot series for a figure shape")
    p.add_argument("table_file")
    p.add_argument("--figure", choices=FIGURES, required=True)
    p.add_argument("--out", default=None, help="write to this file instead of stdout")
    _add_common(p, formats=("csv", "json"))
    p.set_defaults(handler=cmd_plotdata)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _ArgumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        return args.handler(args)
    except (ValidationError, IngestError, UndefinedRatioError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
