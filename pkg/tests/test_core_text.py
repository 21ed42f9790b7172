"""Suffix array, LCE and RMQ checks against naive scans."""

from __future__ import annotations

import random

import pytest

from conftest import T13, random_string, small_corpus
from qpindex.core_text import (
    EmptyTextError,
    FactorError,
    FactorRef,
    SparseRMQ,
    build_index,
    rmq,
)


def scan_lcp(s: str, i: int, j: int) -> int:
    k = 0
    while i - 1 + k < len(s) and j - 1 + k < len(s) and s[i - 1 + k] == s[j - 1 + k]:
        k += 1
    return k


def scan_lcs(s: str, i: int, j: int) -> int:
    k = 0
    while i - 1 - k >= 0 and j - 1 - k >= 0 and s[i - 1 - k] == s[j - 1 - k]:
        k += 1
    return k


def test_sa_examples():
    assert build_index("ab").sa == [1, 2]
    assert build_index("aa").sa == [2, 1]
    idx = build_index(T13)
    for r, pos in enumerate(idx.sa):
        assert idx.isa[pos] == r


def test_sa_sorted_on_corpus():
    for s in small_corpus():
        idx = build_index(s)
        suffixes = [s[p - 1:] for p in idx.sa]
        assert suffixes == sorted(suffixes)


def test_lcp_lcs_fixtures():
    idx = build_index(T13)
    assert idx.lcp(1, 1) == 13
    assert idx.lcp(1, 4) == 3
    assert idx.lcp(1, 2) == 0
    assert idx.lcs(13, 13) == 13
    assert idx.lcs(3, 13) == 3
    assert idx.lcs(1, 2) == 0


def test_lce_exhaustive_small():
    for s in small_corpus():
        if len(s) > 64:
            continue
        idx = build_index(s)
        for i in range(1, len(s) + 1):
            for j in range(1, len(s) + 1):
                assert idx.lcp(i, j) == scan_lcp(s, i, j), (s, i, j)
                assert idx.lcs(i, j) == scan_lcs(s, i, j), (s, i, j)


def test_lce_randomized_medium():
    rng = random.Random(7)
    for alphabet in ("ab", "abc"):
        s = random_string(rng, 2000, alphabet)
        idx = build_index(s)
        for _ in range(3000):
            i = rng.randint(1, 2000)
            j = rng.randint(1, 2000)
            assert idx.lcp(i, j) == scan_lcp(s, i, j)
            assert idx.lcs(i, j) == scan_lcs(s, i, j)


def test_rmq_examples():
    assert rmq([5], 1, 1) == (5, 1)
    assert rmq([3, 1, 2], 1, 3) == (1, 2)
    assert rmq([2, 1, 1, 3], 1, 4) == (1, 2)


def test_rmq_against_linear_scan():
    rng = random.Random(11)
    for _ in range(100):
        arr = [rng.randint(-50, 50) for _ in range(rng.randint(1, 120))]
        table = SparseRMQ(arr)
        for _ in range(100):
            l = rng.randint(0, len(arr) - 1)
            r = rng.randint(l, len(arr) - 1)
            lo = min(arr[l: r + 1])
            assert table.query(l, r) == (lo, arr.index(lo, l, r + 1))


def test_vec_min_matches_scalar():
    import numpy as np

    rng = random.Random(13)
    arr = [rng.randint(0, 9) for _ in range(257)]
    table = SparseRMQ(arr)
    ls, rs = [], []
    for _ in range(500):
        l = rng.randint(0, 256)
        r = rng.randint(l, 256)
        ls.append(l)
        rs.append(r)
    got = table.vec_min(np.array(ls), np.array(rs))
    assert got.tolist() == [min(arr[l: r + 1]) for l, r in zip(ls, rs)]


def test_errors():
    with pytest.raises(EmptyTextError):
        build_index("")
    idx = build_index("abc")
    with pytest.raises(FactorError):
        idx.lcp(0, 1)
    with pytest.raises(FactorError):
        idx.lcp(1, 4)
    with pytest.raises(FactorError):
        idx.lcs(4, 1)
    with pytest.raises(ValueError):
        rmq([1, 2], 2, 1)
    with pytest.raises(FactorError):
        FactorRef(3, 2)
    with pytest.raises(FactorError):
        idx.check_factor(2, 4)
    assert FactorRef(2, 4).length == 3


def test_capped_helpers_clamp():
    idx = build_index("aabab")
    assert idx.lcp_capped(6, 1, 3) == 0
    assert idx.lcs_capped(0, 2, 3) == 0
    assert idx.lcp_capped(1, 2, 1) == 1
    assert idx.min_rotation_start(2, 2) == 2
