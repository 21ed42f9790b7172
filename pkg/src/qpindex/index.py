"""One object owning every engine over a text, with save/load.

The on-disk layout (version 1) is:

    magic "QPI1", version byte,
    u64 text length, the raw text bytes,
    three length-prefixed u64 arrays: suffix array, its inverse, and the
    adjacent-lcp array (all 0-based),
    u64 level count, then per seed level:
        u64 k, block size, block count,
        block_count*size u64 local ranks,
        block_count*size u64 adjacent lcps, stored shifted by +1,
        u64 entry count, then per locus class:
            u64 rank pair (l, r), u64 interval count, u64 (lo, hi) pairs.

All integers are little-endian.  Reversed-text structures, runs and border
caches are rebuilt on load; the stored arrays double as a consistency check.
"""

from __future__ import annotations

import struct

import numpy as np

from .arith import ArithProg
from .core_text import SparseRMQ, TextIndex, _suffix_array, build_index
from .ipm import OccurrenceFinder
from .periods_borders import BorderDecomposition, BorderEngine
from .quasiperiod import CoverAnswer, CoverEngine
from .runs import RunRecord, RunsEngine
from .seed_sets import SeedSets, _Level

_MAGIC = b"QPI1"
_VERSION = 1


class _Reader:
    def __init__(self, buf: bytes) -> None:
        self.buf = buf
        self.pos = 0

    def take(self, k: int) -> bytes:
        if self.pos + k > len(self.buf):
            raise ValueError("truncated index file")
        out = self.buf[self.pos: self.pos + k]
        self.pos += k
        return out

    def u64(self) -> int:
        return struct.unpack("<Q", self.take(8))[0]

    def ints(self, count: int) -> np.ndarray:
        return np.frombuffer(self.take(8 * count), dtype="<u8").astype(np.int64)


def _index_from_saved(data: bytes, sa0, isa0, lcp0) -> TextIndex:
    n = len(data)
    if n == 0 or len(sa0) != n or not np.array_equal(np.sort(sa0), np.arange(n)):
        raise ValueError("index file is corrupt")
    tix = TextIndex.__new__(TextIndex)
    tix.data = data
    tix.n = n
    codes = np.frombuffer(data, dtype=np.uint8).astype(np.int64)
    tix._init_structures(np.asarray(sa0, dtype=np.int64), _suffix_array(codes[::-1]))
    if not np.array_equal(np.asarray(tix.isa[1:]), isa0) or not np.array_equal(
        np.asarray(tix.lcp_arr), lcp0
    ):
        raise ValueError("index file is inconsistent with its text")
    return tix


class QuasiperiodIndex:
    """Quasiperiodicity queries over factors of a fixed text.

    Positions are 1-based and inclusive throughout.  Building is the only
    mutating step; afterwards the object is safe for concurrent readers.
    """

    def __init__(self, text: str | bytes) -> None:
        self._wire(build_index(text), None)

    def _wire(self, tix: TextIndex, levels: dict[int, _Level] | None) -> None:
        self.tix = tix
        self.occ = OccurrenceFinder(tix)
        self.border_engine = BorderEngine(tix, self.occ)
        self.runs_engine = RunsEngine(tix, self.occ, self.border_engine)
        if levels is None:
            self.seeds = SeedSets(tix, self.occ)
        else:
            self.seeds = SeedSets._restore(tix, self.occ, levels)
        self.covers = CoverEngine(
            tix, self.occ, self.border_engine, self.runs_engine, self.seeds
        )

    @property
    def n(self) -> int:
        return self.tix.n

    @property
    def text(self) -> bytes:
        return self.tix.data

    # -- queries -------------------------------------------------------------

    def lcp(self, i: int, j: int) -> int:
        return self.tix.lcp(i, j)

    def lcs(self, i: int, j: int) -> int:
        return self.tix.lcs(i, j)

    def ipm(self, pattern: tuple[int, int], window: tuple[int, int]) -> ArithProg:
        return self.occ.ipm(pattern, window)

    def borders(self, i: int, j: int) -> BorderDecomposition:
        return self.border_engine.borders(i, j)

    def periods(self, i: int, j: int) -> list[ArithProg]:
        return self.border_engine.periods(i, j)

    def runs(self) -> list[RunRecord]:
        return list(self.runs_engine.records)

    def run_of(self, i: int, j: int) -> RunRecord | None:
        return self.runs_engine.run_of(i, j)

    def is_cover(self, i: int, j: int, ell: int) -> bool:
        return self.covers.is_cover(ell, (i, j))

    def covered_pref(self, i: int, j: int, ell: int) -> int:
        return self.covers.covered_pref(ell, (i, j))

    def min_cover(self, i: int, j: int) -> int:
        return self.covers.min_cover((i, j))

    def all_covers(self, i: int, j: int) -> CoverAnswer:
        return self.covers.all_covers((i, j))

    # -- persistence -----------------------------------------------------------

    def save(self, path) -> None:
        chunks = [_MAGIC, struct.pack("<B", _VERSION)]
        data = self.tix.data
        chunks.append(struct.pack("<Q", len(data)))
        chunks.append(data)
        sa0 = np.asarray(self.tix.sa, dtype=np.int64) - 1
        isa0 = np.asarray(self.tix.isa[1:], dtype=np.int64)
        lcp0 = np.asarray(self.tix.lcp_arr, dtype=np.int64)
        for arr in (sa0, isa0, lcp0):
            chunks.append(struct.pack("<Q", len(arr)))
            chunks.append(arr.astype("<u8").tobytes())
        levels = self.seeds.levels
        chunks.append(struct.pack("<Q", len(levels)))
        for k in sorted(levels):
            lvl = levels[k]
            chunks.append(struct.pack("<QQQ", k, lvl.size, lvl.blocks))
            chunks.append(lvl.loc_rank.astype("<u8").tobytes())
            chunks.append((lvl.lcp_flat + 1).astype("<u8").tobytes())
            chunks.append(struct.pack("<Q", len(lvl.seeds)))
            for (l, r), ivals in sorted(lvl.seeds.items()):
                chunks.append(struct.pack("<QQQ", l, r, len(ivals)))
                chunks.extend(struct.pack("<QQ", lo, hi) for lo, hi in ivals)
        with open(path, "wb") as fh:
            fh.write(b"".join(chunks))

    @classmethod
    def load(cls, path) -> "QuasiperiodIndex":
        with open(path, "rb") as fh:
            rd = _Reader(fh.read())
        if rd.take(4) != _MAGIC:
            raise ValueError("not an index file")
        version = rd.take(1)[0]
        if version != _VERSION:
            raise ValueError(f"unsupported index version {version}")
        data = bytes(rd.take(rd.u64()))
        n = len(data)
        arrays = []
        for _ in range(3):
            count = rd.u64()
            if count != n:
                raise ValueError("index file is corrupt")
            arrays.append(rd.ints(count))
        tix = _index_from_saved(data, *arrays)
        levels: dict[int, _Level] = {}
        for _ in range(rd.u64()):
            k, size, blocks = rd.u64(), rd.u64(), rd.u64()
            if size != 1 << k or blocks != n // size:
                raise ValueError("index file is corrupt")
            loc_rank = rd.ints(blocks * size).reshape(blocks, size)
            lcp_flat = rd.ints(blocks * size) - 1
            seeds = {}
            for _ in range(rd.u64()):
                l, r, m = rd.u64(), rd.u64(), rd.u64()
                seeds[(l, r)] = tuple(
                    struct.unpack("<QQ", rd.take(16)) for _ in range(m)
                )
            levels[k] = _Level(size, blocks, loc_rank, lcp_flat, SparseRMQ(lcp_flat), seeds)
        if sorted(levels) != list(range(1, n.bit_length())):
            raise ValueError("index file is missing seed levels")
        if rd.pos != len(rd.buf):
            raise ValueError("trailing bytes in index file")
        obj = cls.__new__(cls)
        obj._wire(tix, levels)
        return obj
