"""Citation analytics from per-paper counts, aggregates and event logs."""

from .analysis import (
    DerivedRow,
    ErratumFinding,
    PlotSeries,
    derive_analytical_table,
    derived_table_to_csv,
    emit_plot_series,
    erratum_check,
    plot_series_to_csv,
    rank_journals,
)
from .core import (
    CitationVector,
    GDecomposition,
    HDecomposition,
    JournalMetrics,
    RelationReport,
    canonicalize,
    compute_g,
    compute_h,
    compute_journal_metrics,
    decompose_g,
    decompose_h,
    generalized_if,
    verify_relation,
)
from .errors import IngestError, UndefinedRatioError, ValidationError
from .ingest import (
    AggregateRow,
    JournalDataset,
    parse_aggregate_table,
    parse_citation_vector,
    parse_event_log,
    serialize_aggregate_table,
    serialize_citation_vector,
    serialize_event_log,
)
from .render import format_rational
from .windowed import (
    CitationEvent,
    PublicationRecord,
    ResolvedCitation,
    YearLedger,
    build_ledger,
    window_counts,
    windowed_impact_factor,
)

__version__ = "0.1.0"

__all__ = [
    "AggregateRow",
    "CitationEvent",
    "CitationVector",
    "DerivedRow",
    "ErratumFinding",
    "GDecomposition",
    "HDecomposition",
    "IngestError",
    "JournalDataset",
    "JournalMetrics",
    "PlotSeries",
    "PublicationRecord",
    "RelationReport",
    "ResolvedCitation",
    "UndefinedRatioError",
    "ValidationError",
    "YearLedger",
    "build_ledger",
    "canonicalize",
    "compute_g",
    "compute_h",
    "compute_journal_metrics",
    "decompose_g",
    "decompose_h",
    "derive_analytical_table",
    "derived_table_to_csv",
    "emit_plot_series",
    "erratum_check",
    "format_rational",
    "generalized_if",
    "parse_aggregate_table",
    "parse_citation_vector",
    "parse_event_log",
    "plot_series_to_csv",
    "rank_journals",
    "serialize_aggregate_table",
    "serialize_citation_vector",
    "serialize_event_log",
    "verify_relation",
    "window_counts",
    "windowed_impact_factor",
]
