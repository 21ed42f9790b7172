"""Cover queries on arbitrary factors: IsCover, MinCover, AllCovers.

A cover of S is a border whose occurrences leave no gap, so every query
starts from the border decomposition.  IsCover splits S into aligned
blocks and checks stored seeds plus O(1) occurrence windows; MinCover
probes progression minima with covered-prefix queries; AllCovers trims
each border progression to its (contiguous) range of cover lengths after
confirming a constant number of candidates per progression.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass

from .arith import ArithProg, merge_adjacent
from .core_text import FactorError, TextIndex
from .ipm import OccurrenceFinder
from .periods_borders import BorderEngine
from .runs import RunsEngine, cut_progression
from .seed_sets import SeedSets


@dataclass(frozen=True)
class CoverAnswer:
    """All cover lengths of a factor as disjoint ascending progressions."""

    progressions: tuple[ArithProg, ...]

    def elements(self) -> list[int]:
        out: list[int] = []
        for p in self.progressions:
            out.extend(p)
        return out

    def __contains__(self, x: int) -> bool:
        return any(x in p for p in self.progressions)

    @property
    def shortest(self) -> int:
        return self.progressions[0].start


class CoverEngine:
    def __init__(
        self,
        tix: TextIndex,
        occ: OccurrenceFinder,
        borders: BorderEngine,
        runs: RunsEngine,
        seeds: SeedSets,
    ) -> None:
        self.tix = tix
        self.occ = occ
        self.borders = borders
        self.runs = runs
        self.seeds = seeds
        loglog = math.log2(max(2.0, math.log2(max(2, tix.n))))
        self._max_depth = math.ceil(loglog) + 2

    def covered_pref(self, ell: int, s: tuple[int, int]) -> int:
        return self.seeds.covered_pref(ell, s)

    def is_cover(self, ell: int, s: tuple[int, int]) -> bool:
        i, j = s
        self.tix.check_factor(i, j)
        slen = j - i + 1
        if not 1 <= ell <= slen:
            raise FactorError(f"cover length {ell} out of range")
        if ell == slen:
            return True
        if self.tix._lcp(i, j - ell + 1) < ell:
            return False
        c = (i, i + ell - 1)
        block = 1 << ((ell - 1).bit_length() + 1)
        i2 = ((i - 1 + block - 1) // block) * block + 1
        j2 = (j // block) * block
        if j2 - i2 + 1 < block:
            return self.occ.cov(c, (i, j)).covers_range(1, slen)
        # aligned core: every decomposition block must be seeded, and
        # occurrences must bridge every junction
        cur = i2
        while cur <= j2:
            t = self.seeds.rank(cur)
            while cur + (1 << t) - 1 > j2:
                t -= 1
            if not self.seeds.seeded_basic(c, cur, t):
                return False
            if cur > i2 and not self.seeds.test_concat(c, i2, cur - 1, cur + (1 << t) - 1):
                return False
            cur += 1 << t
        head = self.occ.cov(c, (i, min(j, i2 + 2 * ell - 2)))
        if not head.covers_range(1, i2 + ell - i):
            return False
        lo = max(i, j2 - 2 * ell + 2)
        tail = self.occ.cov(c, (lo, j))
        return tail.covers_range(j2 - ell + 2 - lo, j - lo + 1)

    # -- shortest cover ------------------------------------------------------

    def min_cover(self, s: tuple[int, int]) -> int:
        """Shortest cover length; the skip rule discards every border not
        longer than the covered prefix of the last tested candidate."""
        i, j = s
        dec = self.borders.borders(i, j)
        slen = j - i + 1
        cands = sorted({p.start for p in dec.progressions} | {slen})
        k = 0
        while True:
            c = cands[k]
            if c == slen:
                return slen
            covered = self.seeds.covered_pref(c, s)
            if covered == slen:
                return c
            k += 1
            while cands[k] <= covered:
                k += 1

    def min_cover_simple(self, s: tuple[int, int]) -> int:
        """Cross-check variant: test each progression minimum directly."""
        i, j = s
        dec = self.borders.borders(i, j)
        slen = j - i + 1
        for c in sorted({p.start for p in dec.progressions}):
            if c < slen and self.is_cover(c, (i, j)):
                return c
        return slen

    # -- all covers ----------------------------------------------------------

    def covers_of_candidates(self, cand, s: tuple[int, int]) -> set[int]:
        """Filter a sorted list of border lengths (ending with |S|) down to
        the ones that cover S."""
        i, j = s
        self.tix.check_factor(i, j)
        slen = j - i + 1
        b = sorted(set(cand))
        if not b or b[-1] != slen:
            raise ValueError("candidate list must contain the factor length")
        for x in b[:-1]:
            if self.tix._lcp(i, j - x + 1) < x:
                raise ValueError(f"candidate {x} is not a border")
        covers = self._covers_rec(b, i, slen, 0)
        # covers within a chain must form a chain prefix
        for chain in self._chains(b, i):
            flags = [x in covers for x in chain]
            assert all(a or not b2 for a, b2 in zip(flags, flags[1:])), chain
        return covers

    def _chains(self, b: list[int], i: int) -> list[list[int]]:
        chains = [[b[0]]]
        for x, y in zip(b, b[1:]):
            if self.is_cover(x, (i, i + y - 1)):
                chains[-1].append(y)
            else:
                chains.append([y])
        return chains

    def _covers_rec(self, b: list[int], i: int, slen: int, depth: int) -> set[int]:
        if depth > self._max_depth:
            return {x for x in b if self.is_cover(x, (i, i + slen - 1))}
        chains = self._chains(b, i)
        if len(chains) == 1:
            return set(b)
        kept = set()
        for chain in chains:
            drop = set(chain[1::2]) | {chain[-1]}
            drop.discard(slen)
            kept.update(x for x in chain if x not in drop)
        confirmed = self._covers_rec(sorted(kept), i, slen, depth + 1)
        ordered = sorted(confirmed)
        out = set(confirmed)
        for chain in chains:
            for t in range(1, len(chain)):
                x = chain[t]
                if x in kept or chain[t - 1] not in confirmed:
                    continue
                nxt = ordered[bisect_right(ordered, x)]
                if self.is_cover(x, (i, i + nxt - 1)):
                    out.add(x)
        return out

    def all_covers(self, s: tuple[int, int]) -> CoverAnswer:
        i, j = s
        dec = self.borders.borders(i, j)
        slen = j - i + 1
        per_prog = [
            (prog, self.runs.periodic_candidates(i, j, prog))
            for prog in dec.progressions
        ]
        cand = {slen}
        for _, cs in per_prog:
            cand.update(cs)
        covers = self.covers_of_candidates(sorted(cand), (i, j))
        out = []
        for prog, cs in per_prog:
            tested = sorted(set(cs) | ({slen} if slen in prog else set()))
            cut = cut_progression(prog, covers, tested)
            if cut:
                out.append(cut)
        return CoverAnswer(tuple(merge_adjacent(out)))


def build_cover_engine(tix: TextIndex) -> CoverEngine:
    occ = OccurrenceFinder(tix)
    borders = BorderEngine(tix, occ)
    return CoverEngine(
        tix, occ, borders, RunsEngine(tix, occ, borders), SeedSets(tix, occ)
    )
