"""Seed storage for power-of-two blocks and the prefix queries built on it.

The text is tiled, level by level, with blocks of length 2^k whose starts
satisfy 2^k | start - 1.  For every block we record, per locus of its local
suffix order, which factor lengths c (with 2c <= block length) are seeds of
the block: occurrences must leave no gap larger than c, and the uncovered
head and tail of the block must be matched by an overhanging occurrence.
Both overhang conditions reduce to period arithmetic on block prefixes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core_text import FactorError, SparseRMQ, TextIndex, _suffix_array
from .ipm import OccurrenceFinder


def _prefix_function(s: bytes) -> list[int]:
    """pi[w] = longest proper border of s[0:w], 1-based lengths."""
    m = len(s)
    pi = [0] * (m + 1)
    k = 0
    for q in range(2, m + 1):
        ch = s[q - 1]
        while k and s[k] != ch:
            k = pi[k]
        if s[k] == ch:
            k += 1
        pi[q] = k
    return pi


def _lcp_classes(adjacent: list[int]):
    """Locus classes of one block as (l, r, lo_depth, hi_depth) with the
    class holding factors of length lo_depth..hi_depth at ranks l..r.

    adjacent[q-1] is the truncated-suffix lcp between local ranks q-1 and q.
    Only internal classes are emitted here; singletons are handled by the
    caller.
    """
    out = []
    stack = [[0, 0]]
    n = len(adjacent) + 1
    for q in range(1, n):
        d = adjacent[q - 1]
        left = q - 1
        while stack[-1][0] > d:
            dep, l0 = stack.pop()
            out.append((l0, q - 1, max(stack[-1][0], d) + 1, dep))
            left = l0
        if stack[-1][0] < d:
            stack.append([d, left])
    while len(stack) > 1:
        dep, l0 = stack.pop()
        out.append((l0, n - 1, stack[-1][0] + 1, dep))
    return out


def _mask_intervals(lo: int, ok: np.ndarray) -> tuple[tuple[int, int], ...]:
    idx = np.flatnonzero(ok)
    if len(idx) == 0:
        return ()
    breaks = np.flatnonzero(np.diff(idx) > 1)
    starts = idx[np.r_[0, breaks + 1]]
    ends = idx[np.r_[breaks, len(idx) - 1]]
    return tuple((lo + int(a), lo + int(b)) for a, b in zip(starts, ends))


@dataclass
class _Level:
    size: int
    blocks: int
    loc_rank: np.ndarray
    lcp_flat: np.ndarray
    rmq: SparseRMQ
    seeds: dict[tuple[int, int], tuple[tuple[int, int], ...]]


class SeedSets:
    """Per-level seed data plus the queries that walk aligned blocks."""

    def __init__(self, tix: TextIndex, occ: OccurrenceFinder) -> None:
        self.tix = tix
        self.occ = occ
        n = tix.n
        self.pad_log = (n - 1).bit_length()
        self.levels: dict[int, _Level] = {}
        codes = np.frombuffer(tix.data, dtype=np.uint8).astype(np.int64)
        k = 1
        while (1 << k) <= n:
            self.levels[k] = self._build_level(codes, k)
            k += 1

    @classmethod
    def _restore(cls, tix: TextIndex, occ: OccurrenceFinder, levels: dict[int, _Level]) -> "SeedSets":
        """Rewire a deserialized level table without rebuilding it."""
        ss = cls.__new__(cls)
        ss.tix = tix
        ss.occ = occ
        ss.pad_log = (tix.n - 1).bit_length()
        ss.levels = levels
        return ss

    # -- construction ------------------------------------------------------

    def _build_level(self, codes: np.ndarray, k: int) -> _Level:
        tix = self.tix
        L = 1 << k
        nb = tix.n // L
        # one doubling pass over all blocks; the -1 separators make suffix
        # order match the order of suffixes truncated at their block end
        x = np.full(nb * (L + 1), -1, dtype=np.int64)
        xv = x.reshape(nb, L + 1)
        xv[:, :L] = codes[: nb * L].reshape(nb, L)
        sa_x = _suffix_array(x)
        rank_x = np.empty(len(x), dtype=np.int64)
        rank_x[sa_x] = np.arange(len(x))
        loc_sa = np.argsort(rank_x.reshape(nb, L + 1)[:, :L], axis=1, kind="stable")
        loc_rank = np.empty_like(loc_sa)
        np.put_along_axis(loc_rank, loc_sa, np.arange(L, dtype=np.int64), axis=1)
        # adjacent lcp per block, capped at the distance to the block end
        pos = (np.arange(nb, dtype=np.int64) * L)[:, None] + loc_sa
        ra = tix._np_isa[pos[:, :-1].ravel()]
        rb = tix._np_isa[pos[:, 1:].ravel()]
        glcp = tix.rmq_fwd.vec_min(np.minimum(ra, rb) + 1, np.maximum(ra, rb))
        off_l = loc_sa[:, :-1].ravel()
        off_r = loc_sa[:, 1:].ravel()
        adj = np.minimum(glcp, L - np.maximum(off_l, off_r)).reshape(nb, L - 1)
        lcp_flat = np.full(nb * L, -1, dtype=np.int64)
        lcp_flat.reshape(nb, L)[:, 1:] = adj
        seeds = self._collect_seeds(L, nb, loc_sa, adj)
        return _Level(L, nb, loc_rank, lcp_flat, SparseRMQ(lcp_flat), seeds)

    def _collect_seeds(self, L, nb, loc_sa, adj):
        data = self.tix.data
        half = L // 2
        seeds: dict[tuple[int, int], tuple[tuple[int, int], ...]] = {}
        for t in range(nb):
            base = t * L
            block = data[base: base + L]
            pi = np.asarray(_prefix_function(block), dtype=np.int64)
            pir = _prefix_function(block[::-1])
            row_sa = loc_sa[t]
            row_adj = adj[t].tolist()
            classes = _lcp_classes(row_adj)
            for q in range(L):
                left = row_adj[q - 1] if q >= 1 else 0
                right = row_adj[q] if q < L - 1 else 0
                classes.append((q, q, max(left, right) + 1, L - int(row_sa[q])))
            for l, r, lo_c, hi_c in classes:
                hi_c = min(hi_c, half)
                if lo_c > hi_c:
                    continue
                if l == r:
                    f = e = int(row_sa[l]) + 1
                else:
                    occs = np.sort(row_sa[l: r + 1])
                    f = int(occs[0]) + 1
                    e = int(occs[-1]) + 1
                    lo_c = max(lo_c, int(np.diff(occs).max()))
                    if lo_c > hi_c:
                        continue
                cs = np.arange(lo_c, hi_c + 1, dtype=np.int64)
                ok = np.ones(len(cs), dtype=bool)
                if f > 1:
                    # head overhang exists iff the block prefix of length
                    # f+c-1 has a period in [f, c]
                    p0 = (f + cs - 1) - pi[f + cs - 1]
                    ok &= ((f + p0 - 1) // p0) * p0 <= cs
                p0t = (L - e + 1) - pir[L - e + 1]
                f2 = L - e - cs + 2
                ok &= (f2 == 1) | (((f2 + p0t - 1) // p0t) * p0t <= cs)
                if not ok.any():
                    continue
                key = (base + l, base + r)
                seeds[key] = _mask_intervals(lo_c, ok)
        return seeds

    # -- block-level queries -------------------------------------------------

    def rank(self, i: int) -> int:
        """Largest k such that an aligned block of length 2^k starts at i."""
        if not 1 <= i <= self.tix.n:
            raise FactorError(f"position {i} out of range")
        if i == 1:
            return self.pad_log
        v = i - 1
        return (v & -v).bit_length() - 1

    def _check_block(self, a: int, k: int) -> int:
        L = 1 << k
        if k < 1 or a < 1 or (a - 1) % L or a + L - 1 > self.tix.n:
            raise FactorError(f"no block of length {L} at {a}")
        return L

    def seeded_basic(self, c: tuple[int, int], a: int, k: int) -> bool:
        """Is the factor at c a seed of the aligned block [a .. a+2^k-1]?"""
        ci, cj = c
        self.tix.check_factor(ci, cj)
        L = self._check_block(a, k)
        clen = cj - ci + 1
        if 2 * clen > L:
            raise FactorError("seed candidate longer than half the block")
        first = self.occ.ipm((ci, cj), (a, a + 2 * clen - 1))
        if not first:
            return False
        lvl = self.levels[k]
        t = (a - 1) // L
        t0 = int(lvl.loc_rank[t, first.start - a])
        l, r = self._class_range(lvl, t * L, t0, clen, L)
        ivals = lvl.seeds.get((t * L + l, t * L + r))
        if not ivals:
            return False
        return any(lo <= clen <= hi for lo, hi in ivals)

    def _class_range(self, lvl: _Level, flat: int, t0: int, c: int, L: int):
        """Maximal local rank interval around t0 whose suffixes share a
        length-c prefix.  Block-start sentinels stop expansion at -1."""
        rmq = lvl.rmq
        ft = flat + t0
        lo, hi = flat, ft
        while lo < hi:
            mid = (lo + hi) // 2
            if rmq.min_value(mid + 1, ft) >= c:
                hi = mid
            else:
                lo = mid + 1
        l = lo
        lo, hi = ft, flat + L - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if rmq.min_value(ft + 1, mid) >= c:
                lo = mid
            else:
                hi = mid - 1
        return l - flat, lo - flat

    def test_concat(self, c: tuple[int, int], i: int, j: int, k: int) -> bool:
        """Given that c is a seed of T[i..j] and T[j+1..k], is it a seed of
        T[i..k]?  True iff occurrences cover the junction zone."""
        ci, cj = c
        clen = cj - ci + 1
        self.tix.check_factor(i, j)
        self.tix.check_factor(j + 1, k)
        if 2 * clen > j - i + 1 or 2 * clen > k - j:
            raise FactorError("parts shorter than twice the seed")
        cover = self.occ.cov((ci, cj), (j - 2 * clen + 1, j + 2 * clen))
        return cover.covers_range(clen + 1, 3 * clen)

    # -- prefix queries ------------------------------------------------------

    def seeded_basic_pref(self, c: tuple[int, int], ell: int, s: tuple[int, int]) -> int:
        """Longest prefix of S that is a chain of aligned 2^p blocks with the
        factor at c a seed of the whole chain; p is fixed by ell."""
        ci, cj = c
        start, end = s
        self.tix.check_factor(ci, cj)
        self.tix.check_factor(start, end)
        if cj - ci + 1 != ell:
            raise FactorError("length does not match the factor")
        p = 1 + (ell - 1).bit_length()
        block = 1 << p
        length = end - start + 1
        if (start - 1) % block or length % block:
            raise FactorError("span not aligned to blocks")
        if not self.seeded_basic(c, start, p):
            return 0
        last = start + block - 1
        k = p
        while True:
            if last >= end:
                return length
            assert self.rank(last + 1) >= k
            if not self._test_extend(c, start, last, k):
                break
            last += 1 << k
            if last < self.tix.n and self.rank(last + 1) > k:
                k += 1
        while True:
            k -= 1
            if k < p:
                break
            if last >= end:
                return length
            if self._test_extend(c, start, last, k):
                last += 1 << k
        return last - start + 1

    def _test_extend(self, c, start, last, k):
        nxt = last + (1 << k)
        if nxt > self.tix.n:
            return False
        if not self.seeded_basic(c, last + 1, k):
            return False
        return self.test_concat(c, start, last, nxt)

    def covered_pref(self, ell: int, s: tuple[int, int]) -> int:
        """Length of the longest prefix of S covered by S[1..ell]."""
        i, j = s
        self.tix.check_factor(i, j)
        slen = j - i + 1
        if not 1 <= ell <= slen:
            raise FactorError(f"cover length {ell} out of range")
        if ell == slen:
            return slen
        c = (i, i + ell - 1)
        w_end = min(j, i + 5 * ell - 1)
        t = self.occ.cov(c, (i, w_end)).prefix_end()
        if w_end == j or t <= 4 * ell:
            return t
        p = 1 + (ell - 1).bit_length()
        block = 1 << p
        i2 = ((i - 1 + block - 1) // block) * block + 1
        j2 = (j // block) * block
        if j2 - i2 + 1 < block:
            # fewer than one aligned block: S is short, cover it directly
            return self.occ.cov(c, (i, j)).prefix_end()
        d = self.seeded_basic_pref(c, ell, (i2, j2))
        # the true end of the covered prefix lies within one block of i2+d
        anchor = i2 + d
        wl = max(i, anchor - block - ell + 1)
        wr = min(j, anchor + block + ell - 2)
        cover = self.occ.cov(c, (wl, wr))
        a0 = max(i, anchor - block)
        end_local = cover.interval_end_at(a0 - wl + 1)
        if end_local is None:
            raise AssertionError("anchor position not covered after reduction")
        return wl + end_local - i


def build_seed_sets(tix: TextIndex, occ: OccurrenceFinder) -> SeedSets:
    return SeedSets(tix, occ)
