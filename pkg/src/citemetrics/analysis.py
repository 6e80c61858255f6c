"""Ranking, derived analytical tables, plot-data series and erratum checks
over aggregate journal rows."""

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

from .errors import ValidationError
from .render import format_rational

RANK_KEYS = ("if", "h", "g", "citations")
DIRECTIONS = ("asc", "desc")
FIGURES = ("fig2", "fig3", "fig4", "fig5")
ORDER_BY_IF = "increasing_if"
ORDER_BY_CITATIONS = "increasing_citations"
ORDERINGS = (ORDER_BY_IF, ORDER_BY_CITATIONS)
FINDING_KINDS = ("if_mismatch", "duplicate_acronym", "other")

DERIVED_COLUMNS = [
    "acronym",
    "total_citations",
    "papers",
    "i_f",
    "h",
    "g",
    "h_sq",
    "g_sq",
    "g_remainder",
    "h_remainder",
    "g_sq_minus_h_sq",
]


@dataclass(frozen=True)
class DerivedRow:
    """One journal with the index arithmetic spelled out.

    The remainder columns reconstruct, from totals alone, the citations
    not absorbed by each index square: g_remainder = total - g*g (the
    beyond-g tail when the top-g sum is taken as exactly g*g, i.e. zero
    slack) and h_remainder = total - h*h (the h core's excess plus the
    beyond-h tail). With per-paper data available, core.decompose_g
    gives the true tail and slack instead.
    """

    acronym: str
    total_citations: int
    papers: int
    i_f: Fraction
    h: int
    g: int
    h_sq: int
    g_sq: int
    g_remainder: int
    h_remainder: int
    g_sq_minus_h_sq: int


@dataclass(frozen=True)
class PlotSeries:
    """A labeled y-series over a shared x axis, pre-sorted for plotting."""

    label: str
    x_values: tuple
    y_values: tuple
    ordering_key: str

    def __post_init__(self):
        if self.ordering_key not in ORDERINGS:
            raise ValidationError(f"unknown ordering {self.ordering_key!r}")
        if len(self.x_values) != len(self.y_values):
            raise ValidationError(
                f"series '{self.label}': {len(self.x_values)} x values "
                f"vs {len(self.y_values)} y values"
            )
        if any(a > b for a, b in zip(self.x_values, self.x_values[1:])):
            raise ValidationError(f"series '{self.label}': x values must be non-decreasing")


@dataclass(frozen=True)
class ErratumFinding:
    """A detected inconsistency inside an aggregate table."""

    row: str
    kind: str
    detail: str


def _computed_if(row) -> Fraction:
    return Fraction(row.total_citations, row.papers)


_RANK_KEYFUNCS = {
    "if": _computed_if,
    "h": lambda r: r.h,
    "g": lambda r: r.g,
    "citations": lambda r: r.total_citations,
}


def rank_journals(rows, key: str, direction: str = "asc") -> list:
    """Stable sort of aggregate rows; ties keep input order.

    The 'if' key ranks by the recomputed exact quotient, not by the
    printed string.
    """
    if key not in RANK_KEYS:
        raise ValidationError(f"unknown rank key {key!r}; expected one of {RANK_KEYS}")
    if direction not in DIRECTIONS:
        raise ValidationError(f"unknown direction {direction!r}; expected 'asc' or 'desc'")
    return sorted(rows, key=_RANK_KEYFUNCS[key], reverse=direction == "desc")


def derive_analytical_table(rows) -> list[DerivedRow]:
    """Compute the squared-index columns for each journal from
    (total, papers, h, g) alone, ordered by increasing citation total."""
    out = []
    for r in sorted(rows, key=lambda r: r.total_citations):
        h_sq = r.h * r.h
        g_sq = r.g * r.g
        out.append(
            DerivedRow(
                acronym=r.acronym,
                total_citations=r.total_citations,
                papers=r.papers,
                i_f=_computed_if(r),
                h=r.h,
                g=r.g,
                h_sq=h_sq,
                g_sq=g_sq,
                g_remainder=r.total_citations - g_sq,
                h_remainder=r.total_citations - h_sq,
                g_sq_minus_h_sq=g_sq - h_sq,
            )
        )
    return out


def emit_plot_series(rows, figure: str) -> list[PlotSeries]:
    """Numeric series underlying the four figure shapes.

    fig2: h and g against the impact factor, increasing impact factor.
    fig3: impact factor, h and g against the citation total.
    fig4: h*h, g*g and their difference against the citation total.
    fig5: the g*g - h*h difference and its two remainder constituents
          against the citation total.
    """
    if figure not in FIGURES:
        raise ValidationError(f"unknown figure {figure!r}; expected one of {FIGURES}")
    if figure == "fig2":
        ordered = rank_journals(rows, key="if", direction="asc")
        x = tuple(_computed_if(r) for r in ordered)
        return [
            PlotSeries("h_index", x, tuple(r.h for r in ordered), ORDER_BY_IF),
            PlotSeries("g_index", x, tuple(r.g for r in ordered), ORDER_BY_IF),
        ]
    derived = derive_analytical_table(rows)
    x = tuple(d.total_citations for d in derived)
    if figure == "fig3":
        columns = [("impact_factor", "i_f"), ("h_index", "h"), ("g_index", "g")]
    elif figure == "fig4":
        columns = [("h_sq", "h_sq"), ("g_sq", "g_sq"), ("g_sq_minus_h_sq", "g_sq_minus_h_sq")]
    else:
        columns = [
            ("g_sq_minus_h_sq", "g_sq_minus_h_sq"),
            ("g_remainder", "g_remainder"),
            ("h_remainder", "h_remainder"),
        ]
    return [
        PlotSeries(label, x, tuple(getattr(d, attr) for d in derived), ORDER_BY_CITATIONS)
        for label, attr in columns
    ]


def erratum_check(rows) -> list[ErratumFinding]:
    """Recheck printed impact factors and flag reused acronyms.

    A printed value with d decimals passes when it lies within 10**-d of
    the recomputed quotient, which accepts both truncated and rounded
    renderings; anything further off is flagged. Rows without a printed
    value are skipped. Each reused acronym yields one finding.
    """
    findings = []
    for r in rows:
        if r.printed_if is None:
            continue
        decimals = len(r.printed_if.partition(".")[2])
        printed = Fraction(r.printed_if)
        computed = _computed_if(r)
        if abs(computed - printed) >= Fraction(1, 10**decimals):
            findings.append(
                ErratumFinding(
                    row=r.acronym,
                    kind="if_mismatch",
                    detail=(
                        f"{r.name} ({r.acronym}): computed impact factor "
                        f"{format_rational(computed, decimals)} differs from "
                        f"printed {r.printed_if}"
                    ),
                )
            )
    uses: dict[str, list[tuple[int, str]]] = {}
    for position, r in enumerate(rows, start=1):
        uses.setdefault(r.acronym, []).append((position, r.name))
    for acronym, rows_using in uses.items():
        if len(rows_using) > 1:
            where = ", ".join(f"row {pos} ({name})" for pos, name in rows_using)
            findings.append(
                ErratumFinding(
                    row=acronym,
                    kind="duplicate_acronym",
                    detail=f"acronym '{acronym}' reused: {where}",
                )
            )
    return findings


def _cell(value, precision: int) -> str:
    if isinstance(value, Fraction):
        return format_rational(value, precision)
    return str(value)


def derived_table_to_csv(derived, precision: int = 3) -> str:
    """csv dump of a derived table, one journal per row."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(DERIVED_COLUMNS)
    for d in derived:
        writer.writerow([_cell(getattr(d, col), precision) for col in DERIVED_COLUMNS])
    return buf.getvalue()


def plot_series_to_csv(series, precision: int = 3) -> str:
    """csv dump of co-indexed series: header x,<label...>, one row per journal."""
    if not series:
        raise ValidationError("no series to serialize")
    x = series[0].x_values
    for s in series[1:]:
        if s.x_values != x or s.ordering_key != series[0].ordering_key:
            raise ValidationError("series in one dump must share x values and ordering")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["x"] + [s.label for s in series])
    for i, xv in enumerate(x):
        writer.writerow([_cell(xv, precision)] + [_cell(s.y_values[i], precision) for s in series])
    return buf.getvalue()
