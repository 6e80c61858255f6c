"""Core citation metrics.

Everything here is a pure function of a CitationVector: the h-index and
g-index, the window-free impact factor, and the integer decompositions
that tie the three together. Arithmetic is exact throughout; counts,
squares and partial sums are native ints, ratios are fractions.Fraction.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable

from .errors import UndefinedRatioError, ValidationError

G_CONVENTIONS = ("cap", "pad")


def _check_counts(counts) -> None:
    # bool is an int subclass, reject it explicitly
    bad = [
        i
        for i, c in enumerate(counts)
        if isinstance(c, bool) or not isinstance(c, int) or c < 0
    ]
    if bad:
        where = ", ".join(f"index {i} (value {counts[i]!r})" for i in bad)
        raise ValidationError(f"citation counts must be non-negative integers: {where}")


@dataclass(frozen=True)
class CitationVector:
    """A venue's per-paper citation counts, sorted non-increasing.

    Direct construction requires already-sorted counts; canonicalize()
    accepts any order.
    """

    counts: tuple[int, ...] = ()

    def __post_init__(self):
        _check_counts(self.counts)
        if any(a < b for a, b in zip(self.counts, self.counts[1:])):
            raise ValidationError(
                "counts must be sorted non-increasing; build via canonicalize()"
            )

    @property
    def papers(self) -> int:
        return len(self.counts)

    @property
    def total_citations(self) -> int:
        return sum(self.counts)


@dataclass(frozen=True)
class JournalMetrics:
    """Computed bundle for one venue. i_f is exact; render only at output."""

    total_citations: int
    papers: int
    i_f: Fraction
    h: int
    g: int


@dataclass(frozen=True)
class HDecomposition:
    """Citation total split as h_sq + excess + tail_h.

    h_sq counts the h-by-h square, excess the citations of the top h
    papers beyond h each, tail_h everything ranked after h.
    """

    h_sq: int
    excess: int
    tail_h: int


@dataclass(frozen=True)
class GDecomposition:
    """Citation total split as g_sq + slack + tail_g.

    slack is the gap between the top-g citation sum and g*g; it is zero
    exactly when that sum lands on g*g.
    """

    g_sq: int
    slack: int
    tail_g: int


@dataclass(frozen=True)
class RelationReport:
    """Cross-check of the identity linking the two decompositions.

    lhs is g*g - h*h. rhs_upper is excess + tail_h - tail_g, which bounds
    lhs from above; subtracting slack restores exact equality. All three
    verdicts hold for every valid vector, so a false one signals a bug,
    never bad data.
    """

    h: int
    g: int
    lhs: int
    rhs_upper: int
    slack: int
    excess: int
    tail_h: int
    tail_g: int
    exact_holds: bool
    bound_holds: bool
    tail_diff_nonneg: bool

    @property
    def all_hold(self) -> bool:
        return self.exact_holds and self.bound_holds and self.tail_diff_nonneg


def canonicalize(raw_counts: Iterable[int]) -> CitationVector:
    """Validate counts and sort them into canonical descending order."""
    counts = list(raw_counts)
    _check_counts(counts)
    return CitationVector(tuple(sorted(counts, reverse=True)))


def compute_h(v: CitationVector) -> int:
    """Largest h such that the h-th ranked paper has at least h citations."""
    h = 0
    for i, c in enumerate(v.counts, start=1):
        if c < i:
            break  # counts descend, so c_i >= i cannot hold again
        h = i
    return h


def compute_g(v: CitationVector, convention: str = "cap") -> int:
    """Largest g whose top g papers hold at least g*g citations in total.

    convention="cap" scans existing papers only, so g <= papers.
    convention="pad" treats the vector as extended with uncited papers,
    letting g grow until the grand total can no longer cover g*g (at
    most isqrt(total) ranks).
    """
    if convention not in G_CONVENTIONS:
        raise ValidationError(
            f"unknown g-index convention {convention!r}; expected 'cap' or 'pad'"
        )
    limit = v.papers
    if convention == "pad":
        limit = max(limit, isqrt(v.total_citations))
    g = 0
    running = 0
    for i in range(1, limit + 1):
        if i <= v.papers:
            running += v.counts[i - 1]
        if running < i * i:
            break  # with integer counts the shortfall never recovers
        g = i
    return g


def generalized_if(v: CitationVector) -> Fraction:
    """Window-free impact factor: total citations over paper count, exact."""
    if v.papers == 0:
        raise UndefinedRatioError(
            "impact factor is undefined for a venue with zero papers"
        )
    return Fraction(v.total_citations, v.papers)


def decompose_h(v: CitationVector) -> HDecomposition:
    """Split the citation total around the h-index; terms sum back exactly."""
    h = compute_h(v)
    top = sum(v.counts[:h])
    return HDecomposition(h_sq=h * h, excess=top - h * h, tail_h=v.total_citations - top)


def decompose_g(v: CitationVector) -> GDecomposition:
    """Split the citation total around the capped g-index; slack >= 0 always."""
    g = compute_g(v, "cap")
    top = sum(v.counts[:g])
    return GDecomposition(g_sq=g * g, slack=top - g * g, tail_g=v.total_citations - top)


def verify_relation(v: CitationVector) -> RelationReport:
    """Recompute both decompositions and report whether their identities hold."""
    hd = decompose_h(v)
    gd = decompose_g(v)
    lhs = gd.g_sq - hd.h_sq
    rhs_upper = hd.excess + hd.tail_h - gd.tail_g
    return RelationReport(
        h=compute_h(v),
        g=compute_g(v, "cap"),
        lhs=lhs,
        rhs_upper=rhs_upper,
        slack=gd.slack,
        excess=hd.excess,
        tail_h=hd.tail_h,
        tail_g=gd.tail_g,
        exact_holds=lhs == rhs_upper - gd.slack,
        bound_holds=lhs <= rhs_upper,
        tail_diff_nonneg=hd.tail_h - gd.tail_g >= 0,
    )


def compute_journal_metrics(v: CitationVector, g_convention: str = "cap") -> JournalMetrics:
    """Bundle paper count, citation total, exact impact factor, h and g."""
    return JournalMetrics(
        total_citations=v.total_citations,
        papers=v.papers,
        i_f=generalized_if(v),
        h=compute_h(v),
        g=compute_g(v, g_convention),
    )
