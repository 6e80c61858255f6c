"""Windowed impact factor over year-stamped publication and citation data."""

import warnings
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import UndefinedRatioError, ValidationError

YEAR_MIN = 1600
YEAR_MAX = 2200


@dataclass(frozen=True)
class PublicationRecord:
    paper_id: str
    pub_year: int

    def __post_init__(self):
        if not self.paper_id:
            raise ValidationError("paper_id must be a non-empty string")
        if not YEAR_MIN <= self.pub_year <= YEAR_MAX:
            raise ValidationError(
                f"publication year {self.pub_year} outside {YEAR_MIN}..{YEAR_MAX}"
            )


@dataclass(frozen=True)
class CitationEvent:
    cited_paper_id: str
    cite_year: int


@dataclass(frozen=True)
class ResolvedCitation:
    """A citation event joined to the publication year of the cited paper."""

    cited_paper_id: str
    cite_year: int
    pub_year: int


@dataclass(frozen=True)
class YearLedger:
    """Immutable aggregation: paper counts per year plus resolved citations."""

    papers_by_year: dict[int, int]
    events: tuple[ResolvedCitation, ...]


def build_ledger(
    pubs: Iterable[PublicationRecord], events: Iterable[CitationEvent]
) -> YearLedger:
    """Index publications by year and resolve each citation to its target.

    Fails if any event cites an unknown paper (all unresolved ids are
    listed) or predates the cited paper's publication year. Exact
    duplicate (id, year) events are kept but trigger a warning, since
    deduplication is the data provider's call.
    """
    pubs = list(pubs)
    events = list(events)

    year_of = {}
    dupes = set()
    for p in pubs:
        if p.paper_id in year_of:
            dupes.add(p.paper_id)
        year_of[p.paper_id] = p.pub_year
    if dupes:
        raise ValidationError(f"duplicate paper_id(s): {', '.join(sorted(dupes))}")

    unknown = sorted({e.cited_paper_id for e in events if e.cited_paper_id not in year_of})
    if unknown:
        raise ValidationError(
            f"citation events reference unknown paper_id(s): {', '.join(unknown)}"
        )

    backwards = [e for e in events if e.cite_year < year_of[e.cited_paper_id]]
    if backwards:
        shown = "; ".join(
            f"'{e.cited_paper_id}' cited in {e.cite_year} "
            f"but published in {year_of[e.cited_paper_id]}"
            for e in backwards
        )
        raise ValidationError(f"citation events predate publication: {shown}")

    repeated = sorted(
        pair
        for pair, n in Counter((e.cited_paper_id, e.cite_year) for e in events).items()
        if n > 1
    )
    if repeated:
        shown = ", ".join(f"('{pid}', {year})" for pid, year in repeated)
        warnings.warn(f"exact duplicate citation events: {shown}", stacklevel=2)

    resolved = tuple(
        ResolvedCitation(e.cited_paper_id, e.cite_year, year_of[e.cited_paper_id])
        for e in events
    )
    return YearLedger(
        papers_by_year=dict(Counter(p.pub_year for p in pubs)),
        events=resolved,
    )


def window_counts(ledger: YearLedger, base_year: int, window: int) -> tuple[int, int]:
    """Raw (citations, papers) for a window, before reduction to a ratio.

    Papers span base_year..base_year+window-1; citations are the events
    of exactly the year base_year+window that cite papers published in
    that span. Years absent from the ledger contribute zero papers.
    """
    if window < 1:
        raise ValidationError(f"window must be >= 1, got {window}")
    papers = sum(
        ledger.papers_by_year.get(y, 0) for y in range(base_year, base_year + window)
    )
    evaluation_year = base_year + window
    citations = sum(
        1
        for e in ledger.events
        if e.cite_year == evaluation_year and base_year <= e.pub_year < evaluation_year
    )
    return citations, papers


def windowed_impact_factor(ledger: YearLedger, base_year: int, window: int) -> Fraction:
    """Citations in year base+window to the window's papers, per paper, exact."""
    citations, papers = window_counts(ledger, base_year, window)
    if papers == 0:
        raise UndefinedRatioError(
            f"no papers published in {base_year}..{base_year + window - 1}"
        )
    return Fraction(citations, papers)
