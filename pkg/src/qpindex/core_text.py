"""Suffix-array text index with constant-time longest-common-extension queries.

All public positions are 1-based and inclusive.  The index is immutable after
construction and safe for concurrent readers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class EmptyTextError(ValueError):
    """Raised when asked to index an empty text."""


class FactorError(ValueError):
    """Raised for positions or factors outside the text."""


@dataclass(frozen=True)
class FactorRef:
    """A factor of the text as a 1-based inclusive position pair."""

    i: int
    j: int

    def __post_init__(self) -> None:
        if self.i < 1 or self.j < self.i:
            raise FactorError(f"bad factor ({self.i}, {self.j})")

    @property
    def length(self) -> int:
        return self.j - self.i + 1


class SparseRMQ:
    """Static range-minimum over an integer array; leftmost position on ties.

    Queries are 0-based inclusive and return (min value, argmin position).
    """

    def __init__(self, values) -> None:
        vals = np.asarray(values, dtype=np.int64)
        n = len(vals)
        tables = [np.arange(n, dtype=np.int64)]
        k = 1
        while (1 << k) <= n:
            half = 1 << (k - 1)
            prev = tables[-1]
            width = n - (1 << k) + 1
            left = prev[:width]
            right = prev[half: half + width]
            tables.append(np.where(vals[left] <= vals[right], left, right))
            k += 1
        # python lists are noticeably faster than numpy for scalar lookups
        self._values = vals.tolist()
        self._tables = [t.tolist() for t in tables]
        self._np_values = vals
        self._np_tables = tables
        self._n = n

    def query(self, l: int, r: int) -> tuple[int, int]:
        if l < 0 or r >= self._n or l > r:
            raise ValueError(f"bad rmq range [{l}, {r}]")
        k = (r - l + 1).bit_length() - 1
        tab = self._tables[k]
        a = tab[l]
        b = tab[r - (1 << k) + 1]
        vals = self._values
        pos = a if vals[a] <= vals[b] else b
        return vals[pos], pos

    def min_value(self, l: int, r: int) -> int:
        k = (r - l + 1).bit_length() - 1
        tab = self._tables[k]
        vals = self._values
        return min(vals[tab[l]], vals[tab[r - (1 << k) + 1]])

    def vec_min(self, ls: np.ndarray, rs: np.ndarray) -> np.ndarray:
        """Vectorized range minima for equal-length 0-based bounds arrays."""
        ks = np.int64(np.floor(np.log2(rs - ls + 1)))
        out = np.empty(len(ls), dtype=np.int64)
        vals = self._np_values
        tabs = self._np_tables
        for k in np.unique(ks):
            m = ks == k
            tab = tabs[k]
            a = tab[ls[m]]
            b = tab[rs[m] - (1 << int(k)) + 1]
            out[m] = np.minimum(vals[a], vals[b])
        return out


def rmq(values, l: int, r: int) -> tuple[int, int]:
    """Range minimum of values[l..r] (1-based inclusive): (value, position)."""
    if not 1 <= l <= r <= len(values):
        raise ValueError(f"bad rmq range [{l}, {r}]")
    v, pos = SparseRMQ(values).query(l - 1, r - 1)
    return v, pos + 1


def _suffix_array(codes: np.ndarray) -> np.ndarray:
    """0-based suffix array by prefix doubling; codes is an int array."""
    n = len(codes)
    sa = np.argsort(codes, kind="stable")
    rank = np.zeros(n, dtype=np.int64)
    rank[sa[1:]] = np.cumsum(codes[sa[1:]] != codes[sa[:-1]])
    k = 1
    while rank[sa[-1]] < n - 1:
        second = np.full(n, -1, dtype=np.int64)
        second[: n - k] = rank[k:]
        sa = np.lexsort((second, rank))
        changed = (rank[sa[1:]] != rank[sa[:-1]]) | (second[sa[1:]] != second[sa[:-1]])
        new_rank = np.zeros(n, dtype=np.int64)
        new_rank[sa[1:]] = np.cumsum(changed)
        rank = new_rank
        k <<= 1
    return sa


def _kasai_lcp(data: bytes, sa: np.ndarray) -> np.ndarray:
    """lcp[r] = LCP of suffixes sa[r-1] and sa[r] (0-based ranks), lcp[0] = 0."""
    n = len(data)
    isa = np.empty(n, dtype=np.int64)
    isa[sa] = np.arange(n)
    lcp = np.zeros(n, dtype=np.int64)
    sa_l = sa.tolist()
    isa_l = isa.tolist()
    h = 0
    for pos in range(n):
        r = isa_l[pos]
        if r > 0:
            prev = sa_l[r - 1]
            while pos + h < n and prev + h < n and data[pos + h] == data[prev + h]:
                h += 1
            lcp[r] = h
            if h > 0:
                h -= 1
        else:
            h = 0
    return lcp


class TextIndex:
    """Suffix arrays, LCP arrays and RMQ tables for a text and its reverse."""

    def __init__(self, data: bytes) -> None:
        if not data:
            raise EmptyTextError("cannot index an empty text")
        self.data = data
        self.n = len(data)
        codes = np.frombuffer(data, dtype=np.uint8).astype(np.int64)
        self._init_structures(_suffix_array(codes), _suffix_array(codes[::-1]))

    def _init_structures(self, sa0: np.ndarray, sa0_rev: np.ndarray) -> None:
        data, n = self.data, self.n
        lcp0 = _kasai_lcp(data, sa0)
        lcp0_rev = _kasai_lcp(data[::-1], sa0_rev)
        isa0 = np.empty(n, dtype=np.int64)
        isa0[sa0] = np.arange(n)
        isa0_rev = np.empty(n, dtype=np.int64)
        isa0_rev[sa0_rev] = np.arange(n)

        # 1-based suffix starts; ranks stay 0-based
        self.sa = [p + 1 for p in sa0.tolist()]
        self.isa = [0] + [r for r in isa0.tolist()]
        self.sa_rev = [p + 1 for p in sa0_rev.tolist()]
        self.isa_rev = [0] + [r for r in isa0_rev.tolist()]
        self.lcp_arr = lcp0.tolist()
        self.lcp_arr_rev = lcp0_rev.tolist()
        self.rmq_fwd = SparseRMQ(lcp0)
        self.rmq_rev = SparseRMQ(lcp0_rev)
        self.isa_rmq = SparseRMQ(isa0)
        self._np_isa = isa0

    def check_factor(self, i: int, j: int) -> None:
        if not (1 <= i <= j <= self.n):
            raise FactorError(f"factor ({i}, {j}) out of range for n={self.n}")

    def factor_bytes(self, i: int, j: int) -> bytes:
        self.check_factor(i, j)
        return self.data[i - 1: j]

    def lcp(self, i: int, j: int) -> int:
        """Longest common prefix length of the suffixes starting at i and j."""
        n = self.n
        if not (1 <= i <= n and 1 <= j <= n):
            raise FactorError(f"lcp position out of range: ({i}, {j})")
        return self._lcp(i, j)

    def _lcp(self, i: int, j: int) -> int:
        if i == j:
            return self.n - i + 1
        r1 = self.isa[i]
        r2 = self.isa[j]
        if r1 > r2:
            r1, r2 = r2, r1
        return self.rmq_fwd.min_value(r1 + 1, r2)

    def lcs(self, i: int, j: int) -> int:
        """Longest common suffix length of the prefixes ending at i and j."""
        n = self.n
        if not (1 <= i <= n and 1 <= j <= n):
            raise FactorError(f"lcs position out of range: ({i}, {j})")
        return self._lcs(i, j)

    def _lcs(self, i: int, j: int) -> int:
        n = self.n
        if i == j:
            return i
        r1 = self.isa_rev[n - i + 1]
        r2 = self.isa_rev[n - j + 1]
        if r1 > r2:
            r1, r2 = r2, r1
        return self.rmq_rev.min_value(r1 + 1, r2)

    def lcp_capped(self, i: int, j: int, cap: int) -> int:
        """min(lcp(i, j), cap) with zero for positions past the text end."""
        if i > self.n or j > self.n:
            return 0
        return min(self._lcp(i, j), cap)

    def lcs_capped(self, i: int, j: int, cap: int) -> int:
        if i < 1 or j < 1:
            return 0
        return min(self._lcs(i, j), cap)

    def min_rotation_start(self, a: int, p: int) -> int:
        """Start in [a..a+p-1] of the lexicographically least suffix (leftmost)."""
        _, pos = self.isa_rmq.query(a - 1, a + p - 2)
        return pos + 1


def build_index(text: bytes | str) -> TextIndex:
    if isinstance(text, str):
        text = text.encode()
    return TextIndex(text)
