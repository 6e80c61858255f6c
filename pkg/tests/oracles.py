"""Independent brute-force references the tests check the package against.

Everything here recomputes from first principles: full scans over every
candidate rank, direct summation, direct event filtering. Nothing is
shared with the package implementation.
"""

from math import isqrt


def oracle_h(counts):
    """Full scan: the largest rank i whose i-th sorted count is >= i."""
    s = sorted(counts, reverse=True)
    best = 0
    for i in range(1, len(s) + 1):
        if s[i - 1] >= i:
            best = max(best, i)
    return best


def oracle_g(counts, convention="cap"):
    """Full scan with per-rank resummation; pad extends with zero counts."""
    s = sorted(counts, reverse=True)
    total = sum(s)
    limit = len(s) if convention == "cap" else max(len(s), isqrt(total) + 1)
    padded = s + [0] * (limit - len(s))
    best = 0
    for i in range(1, limit + 1):
        if sum(padded[:i]) >= i * i:
            best = max(best, i)
    return best


def oracle_h_terms(counts):
    """(h_sq, excess, tail) by direct summation."""
    s = sorted(counts, reverse=True)
    h = oracle_h(counts)
    return h * h, sum(c - h for c in s[:h]), sum(s[h:])


def oracle_g_terms(counts):
    """(g_sq, slack, tail) by direct summation, capped convention."""
    s = sorted(counts, reverse=True)
    g = oracle_g(counts, "cap")
    top = sum(s[:g])
    return g * g, top - g * g, sum(s[g:])


def oracle_windowed(pubs, events, base_year, window):
    """(citations, papers) counted by filtering the raw records."""
    pub_year = {p.paper_id: p.pub_year for p in pubs}
    years = range(base_year, base_year + window)
    papers = sum(1 for p in pubs if p.pub_year in years)
    citations = sum(
        1
        for e in events
        if e.cite_year == base_year + window and pub_year[e.cited_paper_id] in years
    )
    return citations, papers


def random_vectors(rng, n, max_papers=50, max_citations=100):
    """n random raw count lists, lengths 0..max_papers."""
    out = []
    for _ in range(n):
        length = rng.randint(0, max_papers)
        out.append([rng.randint(0, max_citations) for _ in range(length)])
    return out
