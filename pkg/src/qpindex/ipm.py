"""Internal pattern matching.

Occurrences of one factor of the text inside a window at most twice the
pattern length always form a single arithmetic progression; cov() stitches
such windows together into maximal covered intervals.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .arith import ArithProg
from .core_text import FactorError, TextIndex

RANK_SCAN_LIMIT = 64
POS_SCAN_LIMIT = 64


@dataclass(frozen=True)
class CoverageSet:
    """Disjoint, sorted, maximal covered intervals, 1-based within the factor."""

    intervals: tuple[tuple[int, int], ...]

    def covers_range(self, lo: int, hi: int) -> bool:
        """Are all positions lo..hi covered by a single stored interval?"""
        for a, b in self.intervals:
            if a <= lo:
                if b >= hi:
                    return True
            else:
                break
        return False

    def prefix_end(self) -> int:
        """End of the covered interval containing position 1, or 0."""
        if self.intervals and self.intervals[0][0] == 1:
            return self.intervals[0][1]
        return 0

    def interval_end_at(self, pos: int) -> int | None:
        """End of the interval containing pos, if any."""
        for a, b in self.intervals:
            if a <= pos <= b:
                return b
        return None


class _MergeTree:
    """Segment tree of sorted suffix-array slices for range-successor queries."""

    def __init__(self, sa: list[int], n: int) -> None:
        self._n = n
        padded = 1 << (n - 1).bit_length() if n > 1 else 1
        base = np.full(padded, n + 2, dtype=np.int64)
        base[:n] = sa
        levels = [base]
        size = 1
        while size < padded:
            size <<= 1
            levels.append(np.sort(base.reshape(-1, size), axis=1).ravel())
        self._levels = levels

    def _nodes(self, lo: int, hi: int):
        """Canonical (level, block index) decomposition of ranks [lo..hi]."""
        l, r = lo, hi + 1
        k = 0
        while l < r:
            if l & 1:
                yield k, l
                l += 1
            if r & 1:
                r -= 1
                yield k, r
            l >>= 1
            r >>= 1
            k += 1

    def window_stats(self, rank_lo: int, rank_hi: int, v_lo: int, v_hi: int):
        """(first, last, count) of sa values within [v_lo..v_hi] over a rank range."""
        first = last = None
        count = 0
        levels = self._levels
        for k, b in self._nodes(rank_lo, rank_hi):
            seg = levels[k][b << k: (b + 1) << k]
            a = int(np.searchsorted(seg, v_lo, side="left"))
            z = int(np.searchsorted(seg, v_hi, side="right"))
            if z > a:
                count += z - a
                lo_val = int(seg[a])
                hi_val = int(seg[z - 1])
                if first is None or lo_val < first:
                    first = lo_val
                if last is None or hi_val > last:
                    last = hi_val
        return first, last, count


class OccurrenceFinder:
    """sa_interval, ipm and cov queries on top of a TextIndex."""

    def __init__(self, tix: TextIndex) -> None:
        self.tix = tix
        self._interval_cache: dict[tuple[int, int], tuple[int, int]] = {}
        self._tree: _MergeTree | None = None

    @property
    def tree(self) -> _MergeTree:
        if self._tree is None:
            self._tree = _MergeTree(self.tix.sa, self.tix.n)
        return self._tree

    def sa_interval(self, i: int, j: int) -> tuple[int, int]:
        """Inclusive 0-based rank range of suffixes having T[i..j] as a prefix."""
        cached = self._interval_cache.get((i, j))
        if cached is not None:
            return cached
        tix = self.tix
        tix.check_factor(i, j)
        length = j - i + 1
        r0 = tix.isa[i]
        rmq = tix.rmq_fwd.min_value

        lo, hi = 0, r0
        while lo < hi:
            mid = (lo + hi) >> 1
            if rmq(mid + 1, r0) >= length:
                hi = mid
            else:
                lo = mid + 1
        left = lo

        lo, hi = r0, tix.n - 1
        while lo < hi:
            mid = (lo + hi + 1) >> 1
            if rmq(r0 + 1, mid) >= length:
                lo = mid
            else:
                hi = mid - 1

        result = (left, lo)
        self._interval_cache[(i, j)] = result
        return result

    def ipm(self, pattern: tuple[int, int], window: tuple[int, int]) -> ArithProg:
        """Occurrence starts of the pattern factor within the window factor.

        The window may be at most twice the pattern length, which guarantees
        the result is one arithmetic progression.
        """
        pi, pj = pattern
        wi, wj = window
        tix = self.tix
        tix.check_factor(pi, pj)
        tix.check_factor(wi, wj)
        plen = pj - pi + 1
        wlen = wj - wi + 1
        if wlen > 2 * plen:
            raise FactorError("ipm window longer than twice the pattern; use cov")
        if wlen < plen:
            return ArithProg.empty()
        s_lo, s_hi = wi, wj - plen + 1

        lo, hi = self.sa_interval(pi, pj)
        occ: list[int] | None = None
        if hi - lo + 1 <= RANK_SCAN_LIMIT:
            sa = tix.sa
            occ = sorted(p for r in range(lo, hi + 1) if s_lo <= (p := sa[r]) <= s_hi)
        elif s_hi - s_lo + 1 <= POS_SCAN_LIMIT:
            lcp = tix._lcp
            occ = [p for p in range(s_lo, s_hi + 1) if lcp(p, pi) >= plen]
        if occ is not None:
            return _encode_progression(occ)

        first, last, count = self.tree.window_stats(lo, hi, s_lo, s_hi)
        if count == 0:
            return ArithProg.empty()
        if count == 1:
            return ArithProg(first, 0, 1)
        diff = (last - first) // (count - 1)
        assert diff * (count - 1) == last - first, "occurrences not a progression"
        if count >= 3:
            nxt, _, _ = self.tree.window_stats(lo, hi, first + 1, s_hi)
            assert nxt == first + diff, "occurrences not evenly spaced"
        return ArithProg(first, diff, count)

    def cov(self, c: tuple[int, int], f: tuple[int, int]) -> CoverageSet:
        """Positions of factor f covered by occurrences of factor c inside f."""
        ci, cj = c
        fi, fj = f
        tix = self.tix
        tix.check_factor(ci, cj)
        tix.check_factor(fi, fj)
        clen = cj - ci + 1
        if clen > fj - fi + 1:
            return CoverageSet(())
        raw: list[tuple[int, int]] = []
        w = fi
        last_start = fj - clen + 1
        while w <= last_start:
            ap = self.ipm((ci, cj), (w, min(w + 2 * clen - 1, fj)))
            if ap:
                raw.append((ap.start, ap.last + clen - 1))
            w += clen
        merged: list[tuple[int, int]] = []
        for a, b in raw:
            if merged and a <= merged[-1][1] + 1:
                if b > merged[-1][1]:
                    merged[-1] = (merged[-1][0], b)
            else:
                merged.append((a, b))
        return CoverageSet(tuple((a - fi + 1, b - fi + 1) for a, b in merged))


def _encode_progression(occ: list[int]) -> ArithProg:
    if not occ:
        return ArithProg.empty()
    if len(occ) == 1:
        return ArithProg(occ[0], 0, 1)
    diff = occ[1] - occ[0]
    assert all(occ[t + 1] - occ[t] == diff for t in range(1, len(occ) - 1)), (
        "occurrences not a progression"
    )
    return ArithProg(occ[0], diff, len(occ))
