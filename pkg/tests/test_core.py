from fractions import Fraction

import pytest

from citemetrics import (
    CitationVector,
    UndefinedRatioError,
    ValidationError,
    canonicalize,
    compute_g,
    compute_h,
    compute_journal_metrics,
    decompose_g,
    decompose_h,
    generalized_if,
    verify_relation,
)


class TestCanonicalize:
    def test_sorts_descending(self):
        assert canonicalize([3, 30, 8]).counts == (30, 8, 3)

    def test_empty(self):
        v = canonicalize([])
        assert v.counts == ()
        assert v.papers == 0
        assert v.total_citations == 0

    def test_already_descending_unchanged(self, table1_vector):
        assert table1_vector.counts == (30, 24, 18, 14, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1)

    def test_negative_entry_names_index(self):
        with pytest.raises(ValidationError, match="index 1"):
            canonicalize([3, -1, 8])

    def test_all_bad_entries_named(self):
        with pytest.raises(ValidationError) as err:
            canonicalize([3, -1, -7])
        assert "index 1" in str(err.value)
        assert "index 2" in str(err.value)

    def test_non_integer_rejected(self):
        with pytest.raises(ValidationError):
            canonicalize([3, 1.5])
        with pytest.raises(ValidationError):
            canonicalize([True])

    def test_direct_construction_requires_sorted(self):
        with pytest.raises(ValidationError, match="non-increasing"):
            CitationVector((1, 2))


class TestComputeH:
    def test_table1(self, table1_vector):
        assert compute_h(table1_vector) == 8

    def test_all_zero(self):
        assert compute_h(canonicalize([0] * 7)) == 0

    def test_empty(self):
        assert compute_h(canonicalize([])) == 0

    def test_single_cited_paper(self):
        assert compute_h(canonicalize([100])) == 1


class TestComputeG:
    def test_table1_cap(self, table1_vector):
        assert compute_g(table1_vector, "cap") == 12

    def test_single_paper_cap_vs_pad(self):
        v = canonicalize([100])
        assert compute_g(v, "cap") == 1
        # padded scan: 100 >= 10*10 at rank 10, 100 < 11*11 at rank 11
        assert compute_g(v, "pad") == 10

    def test_empty(self):
        assert compute_g(canonicalize([])) == 0
        assert compute_g(canonicalize([]), "pad") == 0

    def test_default_is_cap(self):
        assert compute_g(canonicalize([100])) == 1

    def test_unknown_convention(self):
        with pytest.raises(ValidationError, match="convention"):
            compute_g(canonicalize([1]), "extendable")

    def test_exact_square_boundary(self):
        assert compute_g(canonicalize([4, 4, 4, 4])) == 4


class TestGeneralizedIf:
    def test_single_paper(self):
        assert generalized_if(canonicalize([5])) == 5

    def test_table1_sum_is_164(self, table1_vector):
        assert table1_vector.total_citations == 164
        assert generalized_if(table1_vector) == Fraction(164, 16)
        assert generalized_if(table1_vector) == Fraction(41, 4)

    def test_empty_raises(self):
        with pytest.raises(UndefinedRatioError):
            generalized_if(canonicalize([]))

    def test_aggregate_quotient(self):
        # 85809/1813 renders as 47.330 at three places, round-half-up
        from citemetrics import format_rational

        assert format_rational(Fraction(85809, 1813), 3) == "47.330"


class TestDecomposeH:
    def test_table1(self, table1_vector):
        d = decompose_h(table1_vector)
        assert (d.h_sq, d.excess, d.tail_h) == (64, 64, 36)
        assert d.h_sq + d.excess + d.tail_h == 164

    def test_all_zero(self):
        d = decompose_h(canonicalize([0, 0, 0]))
        assert (d.h_sq, d.excess, d.tail_h) == (0, 0, 0)

    def test_aggregate_remainder_shape(self):
        # with h = 12 and a 645-citation total the two non-square terms
        # must absorb 645 - 144 = 501 regardless of the per-paper split
        total, h = 645, 12
        assert total - h * h == 501


class TestDecomposeG:
    def test_table1(self, table1_vector):
        d = decompose_g(table1_vector)
        assert (d.g_sq, d.slack, d.tail_g) == (144, 10, 10)
        assert d.g_sq + d.slack + d.tail_g == 164

    def test_zero_slack_when_sum_hits_square(self):
        d = decompose_g(canonicalize([4, 4, 4, 4]))
        assert (d.g_sq, d.slack, d.tail_g) == (16, 0, 0)

    def test_zero_slack_reconstruction(self):
        # aggregate-only reconstruction: tail = 645 - 23*23 = 116
        total, g = 645, 23
        assert total - g * g == 116


class TestVerifyRelation:
    def test_table1(self, table1_vector):
        r = verify_relation(table1_vector)
        assert r.lhs == 80
        assert r.excess == 64
        assert r.tail_h == 36
        assert r.tail_g == 10
        assert r.slack == 10
        assert r.rhs_upper == 90
        assert r.lhs == r.rhs_upper - r.slack
        assert r.all_hold

    def test_all_zero(self):
        r = verify_relation(canonicalize([0, 0]))
        assert (r.lhs, r.rhs_upper, r.slack) == (0, 0, 0)
        assert r.exact_holds and r.bound_holds and r.tail_diff_nonneg

    def test_empty(self):
        assert verify_relation(canonicalize([])).all_hold


class TestJournalMetrics:
    def test_bundle(self, table1_vector):
        m = compute_journal_metrics(table1_vector)
        assert m.papers == 16
        assert m.total_citations == 164
        assert m.i_f == Fraction(41, 4)
        assert (m.h, m.g) == (8, 12)
        assert m.i_f * m.papers == m.total_citations

    def test_pad_convention(self):
        m = compute_journal_metrics(canonicalize([100]), g_convention="pad")
        assert (m.h, m.g) == (1, 10)

    def test_empty_vector_raises(self):
        with pytest.raises(UndefinedRatioError):
            compute_journal_metrics(canonicalize([]))
