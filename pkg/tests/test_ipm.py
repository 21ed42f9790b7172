"""IPM and coverage checks against the naive matcher."""

from __future__ import annotations

import random

import pytest

import qpindex.ipm as ipm_mod
from conftest import T13, factor_pairs, random_string
from qpindex.core_text import FactorError, build_index
from qpindex.ipm import OccurrenceFinder
from qpindex.oracle import naive_occurrences


def finder(s: str) -> OccurrenceFinder:
    return OccurrenceFinder(build_index(s))


def naive_window_occ(s, pat, win):
    pi, pj = pat
    wi, wj = win
    plen = pj - pi + 1
    return [
        wi + q - 1
        for q in naive_occurrences(s[pi - 1: pj], s[wi - 1: wj])
        if wi + q - 1 + plen - 1 <= wj
    ]


def test_sa_interval_sizes():
    occ = finder(T13)
    lo, hi = occ.sa_interval(1, 1)
    assert hi - lo + 1 == 8
    lo, hi = occ.sa_interval(1, 13)
    assert lo == hi
    lo, hi = occ.sa_interval(2, 2)
    assert hi - lo + 1 == 5


def test_ipm_fixtures():
    occ = finder(T13)
    ap = occ.ipm((1, 3), (1, 6))
    assert (ap.start, ap.diff, ap.count) == (1, 3, 2)
    ap = occ.ipm((1, 13), (1, 13))
    assert (ap.start, ap.diff, ap.count) == (1, 0, 1)
    ap = occ.ipm((3, 5), (1, 5))
    assert (ap.start, ap.diff, ap.count) == (3, 0, 1)


def test_ipm_window_too_long_rejected():
    occ = finder(T13)
    with pytest.raises(FactorError):
        occ.ipm((1, 2), (1, 5))


def check_all_pairs(s: str) -> None:
    occ = finder(s)
    n = len(s)
    for pi, pj in factor_pairs(n):
        plen = pj - pi + 1
        for wi in range(1, n + 1):
            for wj in range(wi, min(n, wi + 2 * plen - 1) + 1):
                got = occ.ipm((pi, pj), (wi, wj)).elements()
                assert got == naive_window_occ(s, (pi, pj), (wi, wj)), (
                    s, (pi, pj), (wi, wj))


def test_ipm_exhaustive_small():
    check_all_pairs(T13)
    check_all_pairs("aabaabaaab")
    check_all_pairs("aaaaaaaa")


def test_ipm_randomized_n64():
    rng = random.Random(3)
    for alphabet in ("ab", "abc"):
        s = random_string(rng, 64, alphabet)
        occ = finder(s)
        for _ in range(1500):
            pi = rng.randint(1, 64)
            pj = rng.randint(pi, 64)
            plen = pj - pi + 1
            wi = rng.randint(1, 64)
            wj = rng.randint(wi, min(64, wi + 2 * plen - 1))
            got = occ.ipm((pi, pj), (wi, wj)).elements()
            assert got == naive_window_occ(s, (pi, pj), (wi, wj))


def test_ipm_merge_tree_path(monkeypatch):
    monkeypatch.setattr(ipm_mod, "RANK_SCAN_LIMIT", 0)
    monkeypatch.setattr(ipm_mod, "POS_SCAN_LIMIT", 0)
    rng = random.Random(5)
    for s in (random_string(rng, 64), "a" * 64, "ab" * 32):
        occ = finder(s)
        for _ in range(400):
            pi = rng.randint(1, 64)
            pj = rng.randint(pi, 64)
            plen = pj - pi + 1
            wi = rng.randint(1, 64)
            wj = rng.randint(wi, min(64, wi + 2 * plen - 1))
            got = occ.ipm((pi, pj), (wi, wj)).elements()
            assert got == naive_window_occ(s, (pi, pj), (wi, wj))


def test_merge_tree_on_periodic_text():
    s = "a" * 2000
    occ = finder(s)
    ap = occ.ipm((1, 200), (501, 900))
    assert ap.elements() == list(range(501, 702))
    s2 = "ab" * 1000
    occ2 = finder(s2)
    ap2 = occ2.ipm((1, 100), (301, 500))
    assert ap2.elements() == list(range(301, 402, 2))


def naive_cov_intervals(s, c, f):
    ci, cj = c
    fi, fj = f
    clen = cj - ci + 1
    sub = s[fi - 1: fj]
    covered = [False] * len(sub)
    for q in naive_occurrences(s[ci - 1: cj], sub):
        for t in range(q - 1, q - 1 + clen):
            covered[t] = True
    out = []
    t = 0
    while t < len(sub):
        if covered[t]:
            u = t
            while u + 1 < len(sub) and covered[u + 1]:
                u += 1
            out.append((t + 1, u + 1))
            t = u + 1
        t += 1
    return out


def test_cov_fixtures():
    occ = finder("ababa")
    assert occ.cov((1, 3), (1, 5)).intervals == ((1, 5),)
    assert occ.cov((1, 5), (1, 5)).intervals == ((1, 5),)
    occ = finder("baaa")
    assert occ.cov((1, 1), (2, 4)).intervals == ()


def test_cov_exhaustive_small():
    for s in (T13, "aabaabaa", "aaaaaa", "abcbabcba"):
        occ = finder(s)
        n = len(s)
        for c in factor_pairs(n):
            for f in factor_pairs(n):
                got = occ.cov(c, f).intervals
                assert list(got) == naive_cov_intervals(s, c, f), (s, c, f)


def test_cov_randomized():
    rng = random.Random(9)
    s = random_string(rng, 64)
    occ = finder(s)
    for _ in range(2000):
        ci = rng.randint(1, 64)
        cj = rng.randint(ci, 64)
        fi = rng.randint(1, 64)
        fj = rng.randint(fi, 64)
        got = occ.cov((ci, cj), (fi, fj)).intervals
        assert list(got) == naive_cov_intervals(s, (ci, cj), (fi, fj))


def test_coverage_set_helpers():
    occ = finder("ababa")
    cs = occ.cov((1, 3), (1, 5))
    assert cs.covers_range(1, 5)
    assert cs.prefix_end() == 5
    assert cs.interval_end_at(3) == 5
    empty = occ.cov((1, 3), (2, 2))
    assert not empty.covers_range(1, 1)
    assert empty.prefix_end() == 0
    assert empty.interval_end_at(1) is None
