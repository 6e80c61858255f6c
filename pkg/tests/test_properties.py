"""Property tests for the metric invariants, checked against brute force."""

from fractions import Fraction

from hypothesis import given, strategies as st

from citemetrics import (
    canonicalize,
    compute_g,
    compute_h,
    decompose_g,
    decompose_h,
    generalized_if,
    verify_relation,
)
from oracles import oracle_g, oracle_h

count_lists = st.lists(st.integers(min_value=0, max_value=100), max_size=50)
nonempty_count_lists = st.lists(
    st.integers(min_value=0, max_value=100), min_size=1, max_size=50
)


@given(count_lists)
def test_h_matches_full_scan(raw):
    assert compute_h(canonicalize(raw)) == oracle_h(raw)


@given(count_lists)
def test_g_cap_matches_full_scan(raw):
    assert compute_g(canonicalize(raw), "cap") == oracle_g(raw, "cap")


@given(count_lists)
def test_g_pad_matches_full_scan(raw):
    assert compute_g(canonicalize(raw), "pad") == oracle_g(raw, "pad")


@given(count_lists)
def test_h_decomposition_is_exact(raw):
    v = canonicalize(raw)
    d = decompose_h(v)
    assert d.h_sq + d.excess + d.tail_h == v.total_citations
    assert d.excess >= 0


@given(count_lists)
def test_g_decomposition_is_exact_with_nonneg_slack(raw):
    v = canonicalize(raw)
    d = decompose_g(v)
    assert d.g_sq + d.slack + d.tail_g == v.total_citations
    assert d.slack >= 0


@given(count_lists)
def test_index_ordering(raw):
    v = canonicalize(raw)
    h = compute_h(v)
    g_cap = compute_g(v, "cap")
    g_pad = compute_g(v, "pad")
    assert 0 <= h <= v.papers
    assert h <= g_cap <= v.papers
    assert g_cap <= g_pad


@given(count_lists)
def test_relation_verdicts_always_hold(raw):
    r = verify_relation(canonicalize(raw))
    assert r.exact_holds
    assert r.bound_holds
    assert r.tail_diff_nonneg


@given(count_lists, st.data())
def test_permutation_invariance(raw, data):
    perm = data.draw(st.permutations(raw))
    v1, v2 = canonicalize(raw), canonicalize(perm)
    assert v1 == v2
    assert compute_h(v1) == compute_h(v2)
    assert compute_g(v1, "pad") == compute_g(v2, "pad")
    assert decompose_h(v1) == decompose_h(v2)
    assert decompose_g(v1) == decompose_g(v2)


@given(nonempty_count_lists, st.data())
def test_single_increment_is_monotone(raw, data):
    idx = data.draw(st.integers(min_value=0, max_value=len(raw) - 1))
    bumped = list(raw)
    bumped[idx] += 1
    before, after = canonicalize(raw), canonicalize(bumped)
    assert after.total_citations == before.total_citations + 1
    assert compute_h(after) >= compute_h(before)
    assert compute_g(after, "cap") >= compute_g(before, "cap")
    assert compute_g(after, "pad") >= compute_g(before, "pad")


@given(nonempty_count_lists)
def test_impact_factor_times_papers_is_total(raw):
    v = canonicalize(raw)
    assert generalized_if(v) * v.papers == v.total_citations
    assert isinstance(generalized_if(v), Fraction)
