"""Parsing and serialization of the three on-disk dataset shapes.

Per-paper citation vectors:
    csv with header ``paper_id,citations``, one row per paper, or a json
    object ``{"name": ..., "citations": [...]}``.
Aggregate journal tables:
    csv with header ``name,acronym,total_citations,papers,if,h,g``; the
    ``if`` column may be omitted or left empty. Its value is kept as the
    verbatim string so later checks can compare at printed precision.
Publication / citation event logs:
    two csv files, ``paper_id,pub_year`` and ``cited_paper_id,cite_year``.

All files are UTF-8, comma separated, standard csv quoting. Parsers
collect every violation before failing (see IngestError) and never drop
rows silently.
"""

import csv
import io
import json
import re
from dataclasses import dataclass

from .core import CitationVector, canonicalize
from .errors import IngestError, ValidationError
from .windowed import CitationEvent, PublicationRecord

VECTOR_HEADER = ["paper_id", "citations"]
AGGREGATE_HEADER = ["name", "acronym", "total_citations", "papers", "if", "h", "g"]
AGGREGATE_HEADER_NO_IF = ["name", "acronym", "total_citations", "papers", "h", "g"]
PUBS_HEADER = ["paper_id", "pub_year"]
EVENTS_HEADER = ["cited_paper_id", "cite_year"]

_PRINTED_IF_RE = re.compile(r"^\d+(\.\d+)?$")


@dataclass(frozen=True)
class JournalDataset:
    """A named per-paper citation vector."""

    name: str
    vector: CitationVector


@dataclass(frozen=True)
class AggregateRow:
    """One journal known only through its aggregate numbers.

    printed_if is the impact factor exactly as printed in the source
    table (or None); it is deliberately a string, not a float.
    """

    name: str
    acronym: str
    total_citations: int
    papers: int
    printed_if: str | None
    h: int
    g: int

    def __post_init__(self):
        if self.total_citations < 0:
            raise ValidationError(f"total_citations must be >= 0, got {self.total_citations}")
        if self.papers < 1:
            raise ValidationError(f"papers must be >= 1, got {self.papers}")
        if not 0 <= self.h <= self.papers:
            raise ValidationError(f"h-index {self.h} outside [0, papers={self.papers}]")
        if not self.h <= self.g <= self.papers:
            raise ValidationError(
                f"g-index {self.g} outside [h={self.h}, papers={self.papers}]"
            )


def _read_rows(text: str) -> list[tuple[int, list[str]]]:
    """csv rows as (line_number, stripped cells), blank lines skipped."""
    reader = csv.reader(io.StringIO(text))
    rows = []
    for row in reader:
        if not row or all(not cell.strip() for cell in row):
            continue
        rows.append((reader.line_num, [cell.strip() for cell in row]))
    return rows


def _parse_int(text: str) -> int | None:
    try:
        return int(text)
    except ValueError:
        return None


def parse_citation_vector(text: str, format: str = "csv", name: str = "") -> JournalDataset:
    """Parse a per-paper citation file into a canonicalized dataset.

    ``name`` labels csv input (json carries its own name). Input order
    is irrelevant; the vector comes back sorted descending. An empty
    body is a valid empty vector.
    """
    if format == "csv":
        return _parse_vector_csv(text, name)
    if format == "json":
        return _parse_vector_json(text)
    raise ValidationError(f"unknown vector format {format!r}; expected 'csv' or 'json'")


def _parse_vector_csv(text: str, name: str) -> JournalDataset:
    rows = _read_rows(text)
    if not rows:
        return JournalDataset(name=name, vector=CitationVector())
    first_line, first = rows[0]
    if first != VECTOR_HEADER:
        raise IngestError(
            [f"line {first_line}: expected header 'paper_id,citations', got '{','.join(first)}'"]
        )
    issues = []
    counts = []
    for line, row in rows[1:]:
        if len(row) != 2:
            issues.append(f"line {line}: expected 2 fields, got {len(row)}")
            continue
        pid, cites = row
        if not pid:
            issues.append(f"line {line}: empty paper_id")
            continue
        n = _parse_int(cites)
        if n is None:
            issues.append(f"line {line}: citations must be an integer, got '{cites}'")
        elif n < 0:
            issues.append(f"line {line}: negative citation count {n}")
        else:
            counts.append(n)
    if issues:
        raise IngestError(issues)
    return JournalDataset(name=name, vector=canonicalize(counts))


def _parse_vector_json(text: str) -> JournalDataset:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise IngestError([f"invalid json: {exc}"]) from None
    if not isinstance(obj, dict):
        raise IngestError(["top-level json value must be an object"])
    issues = []
    name = obj.get("name")
    if not isinstance(name, str):
        issues.append("'name' must be a string")
    citations = obj.get("citations")
    if not isinstance(citations, list):
        issues.append("'citations' must be an array")
        citations = []
    counts = []
    for i, c in enumerate(citations):
        if isinstance(c, bool) or not isinstance(c, int):
            issues.append(f"citations[{i}]: must be an integer, got {c!r}")
        elif c < 0:
            issues.append(f"citations[{i}]: negative citation count {c}")
        else:
            counts.append(c)
    if issues:
        raise IngestError(issues)
    return JournalDataset(name=name, vector=canonicalize(counts))


def parse_aggregate_table(text: str) -> list[AggregateRow]:
    """Parse an aggregate journal table, in file order.

    Arithmetic consistency of the printed impact factor is not checked
    here; that is analysis work. Structural problems (bad counts, h/g
    outside their ranges) are all collected and reported together.
    """
    rows = _read_rows(text)
    if not rows:
        return []
    first_line, first = rows[0]
    if first == AGGREGATE_HEADER:
        has_if = True
    elif first == AGGREGATE_HEADER_NO_IF:
        has_if = False
    else:
        raise IngestError(
            [
                f"line {first_line}: expected header '{','.join(AGGREGATE_HEADER)}' "
                f"(the 'if' column may be omitted), got '{','.join(first)}'"
            ]
        )
    expected_width = len(first)
    issues = []
    out = []
    for line, row in rows[1:]:
        if len(row) != expected_width:
            issues.append(f"line {line}: expected {expected_width} fields, got {len(row)}")
            continue
        name, acronym = row[0], row[1]
        label = acronym or name or "?"
        ok = True
        if not name:
            issues.append(f"line {line}: empty name")
            ok = False
        if not acronym:
            issues.append(f"line {line} ({name}): empty acronym")
            ok = False
        values = {}
        for field, cell in (
            ("total_citations", row[2]),
            ("papers", row[3]),
            ("h", row[-2]),
            ("g", row[-1]),
        ):
            n = _parse_int(cell)
            if n is None:
                issues.append(f"line {line} ({label}): {field} must be an integer, got '{cell}'")
                ok = False
            else:
                values[field] = n
        printed_if = None
        if has_if and row[4]:
            if _PRINTED_IF_RE.match(row[4]):
                printed_if = row[4]
            else:
                issues.append(f"line {line} ({label}): malformed impact factor '{row[4]}'")
                ok = False
        if not ok:
            continue
        try:
            out.append(
                AggregateRow(
                    name=name,
                    acronym=acronym,
                    total_citations=values["total_citations"],
                    papers=values["papers"],
                    printed_if=printed_if,
                    h=values["h"],
                    g=values["g"],
                )
            )
        except ValidationError as exc:
            issues.append(f"line {line} ({label}): {exc}")
    if issues:
        raise IngestError(issues)
    return out


def parse_event_log(
    pubs_text: str, events_text: str
) -> tuple[list[PublicationRecord], list[CitationEvent]]:
    """Parse publication and citation-event csv files.

    Referential checks (unknown cited ids, citations predating the
    paper) belong to build_ledger; this only validates shape, years and
    paper_id uniqueness.
    """
    issues = []

    pubs = []
    seen: dict[str, int] = {}
    rows = _read_rows(pubs_text)
    if rows:
        first_line, first = rows[0]
        if first != PUBS_HEADER:
            issues.append(
                f"pubs line {first_line}: expected header 'paper_id,pub_year', "
                f"got '{','.join(first)}'"
            )
        else:
            for line, row in rows[1:]:
                if len(row) != 2:
                    issues.append(f"pubs line {line}: expected 2 fields, got {len(row)}")
                    continue
                pid, year_text = row
                year = _parse_int(year_text)
                if not pid:
                    issues.append(f"pubs line {line}: empty paper_id")
                    continue
                if year is None:
                    issues.append(
                        f"pubs line {line}: pub_year must be an integer, got '{year_text}'"
                    )
                    continue
                if pid in seen:
                    issues.append(
                        f"pubs line {line}: duplicate paper_id '{pid}' (first at line {seen[pid]})"
                    )
                    continue
                seen[pid] = line
                try:
                    pubs.append(PublicationRecord(paper_id=pid, pub_year=year))
                except ValidationError as exc:
                    issues.append(f"pubs line {line}: {exc}")

    events = []
    rows = _read_rows(events_text)
    if rows:
        first_line, first = rows[0]
        if first != EVENTS_HEADER:
            issues.append(
                f"events line {first_line}: expected header 'cited_paper_id,cite_year', "
                f"got '{','.join(first)}'"
            )
        else:
            for line, row in rows[1:]:
                if len(row) != 2:
                    issues.append(f"events line {line}: expected 2 fields, got {len(row)}")
                    continue
                pid, year_text = row
                year = _parse_int(year_text)
                if not pid:
                    issues.append(f"events line {line}: empty cited_paper_id")
                    continue
                if year is None:
                    issues.append(
                        f"events line {line}: cite_year must be an integer, got '{year_text}'"
                    )
                    continue
                events.append(CitationEvent(cited_paper_id=pid, cite_year=year))

    if issues:
        raise IngestError(issues)
    return pubs, events


def serialize_citation_vector(dataset: JournalDataset, format: str = "csv") -> str:
    """Inverse of parse_citation_vector; csv paper ids are synthesized."""
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(VECTOR_HEADER)
        for i, c in enumerate(dataset.vector.counts, start=1):
            writer.writerow([f"p{i}", c])
        return buf.getvalue()
    if format == "json":
        payload = {"name": dataset.name, "citations": list(dataset.vector.counts)}
        return json.dumps(payload, indent=2) + "\n"
    raise ValidationError(f"unknown vector format {format!r}; expected 'csv' or 'json'")


def serialize_aggregate_table(rows) -> str:
    """Inverse of parse_aggregate_table; printed_if is emitted verbatim."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(AGGREGATE_HEADER)
    for r in rows:
        writer.writerow(
            [r.name, r.acronym, r.total_citations, r.papers, r.printed_if or "", r.h, r.g]
        )
    return buf.getvalue()


def serialize_event_log(pubs, events) -> tuple[str, str]:
    """Inverse of parse_event_log; returns (pubs_text, events_text)."""
    pubs_buf = io.StringIO()
    writer = csv.writer(pubs_buf, lineterminator="\n")
    writer.writerow(PUBS_HEADER)
    for p in pubs:
        writer.writerow([p.paper_id, p.pub_year])
    events_buf = io.StringIO()
    writer = csv.writer(events_buf, lineterminator="\n")
    writer.writerow(EVENTS_HEADER)
    for e in events:
        writer.writerow([e.cited_paper_id, e.cite_year])
    return pubs_buf.getvalue(), events_buf.getvalue()
