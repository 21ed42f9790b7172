"""Border and period queries for arbitrary factors.

The set of border lengths of a factor S is reported as O(log |S|) arithmetic
progressions: each non-singleton progression with difference p consists of
borders whose prefixes are periodic with shortest period exactly p, and
progressions are separated (max of one below min of the next).  Periods are
the mirror image under the duality border b <-> period |S| - b.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import ArithProg, ap_intersect, merge_adjacent
from .core_text import TextIndex
from .ipm import OccurrenceFinder


@dataclass(frozen=True)
class BorderDecomposition:
    """All border lengths of a factor, |S| included, as sorted progressions."""

    progressions: tuple[ArithProg, ...]

    def elements(self) -> list[int]:
        return [b for ap in self.progressions for b in ap]

    def minima(self) -> list[int]:
        return [ap.start for ap in self.progressions]

    def __contains__(self, b: int) -> bool:
        return any(b in ap for ap in self.progressions)

    @property
    def largest(self) -> int:
        return self.progressions[-1].last


class BorderEngine:
    """Dyadic border/period computation on top of IPM queries."""

    def __init__(self, tix: TextIndex, occ: OccurrenceFinder) -> None:
        self.tix = tix
        self.occ = occ
        self._cache: dict[tuple[int, int], BorderDecomposition] = {}

    def borders(self, i: int, j: int) -> BorderDecomposition:
        hit = self._cache.get((i, j))
        if hit is not None:
            return hit
        self.tix.check_factor(i, j)
        s = j - i + 1
        progs = []
        ell = 1
        while ell <= s:
            ap = self._level_borders(i, s, ell)
            if ap:
                progs.append(ap)
            ell <<= 1
        dec = BorderDecomposition(tuple(self._merge(progs)))
        self._cache[(i, j)] = dec
        return dec

    def _level_borders(self, i: int, s: int, ell: int) -> ArithProg:
        """Borders of T[i..i+s-1] with lengths in [ell .. min(2*ell-1, s)]."""
        hi_b = min(2 * ell - 1, s)
        # border length b needs the length-ell prefix at local position s-b+1
        lo_start = s - hi_b + 1
        ap1 = self.occ.ipm((i, i + ell - 1), (i + lo_start - 1, i + s - 1))
        if not ap1:
            return ArithProg.empty()
        as_b1 = ArithProg(s - (ap1.last - i + 1) + 1, ap1.diff, ap1.count)
        # and the length-ell suffix ending at local position b
        ap2 = self.occ.ipm((i + s - ell, i + s - 1), (i, i + hi_b - 1))
        if not ap2:
            return ArithProg.empty()
        as_b2 = ArithProg((ap2.start - i + 1) + ell - 1, ap2.diff, ap2.count)
        return ap_intersect(as_b1, as_b2)

    @staticmethod
    def _merge(progs: list[ArithProg]) -> list[ArithProg]:
        """Fuse neighbours only when the merged progression keeps the shape
        invariant: every non-min border must be periodic with period = diff."""
        out: list[ArithProg] = []
        for q in progs:
            if out:
                p = out[-1]
                gap = q.start - p.last
                if (
                    (p.count == 1 or p.diff == gap)
                    and (q.count == 1 or q.diff == gap)
                    and q.start >= 2 * gap
                ):
                    out[-1] = ArithProg(p.start, gap, p.count + q.count)
                    continue
            out.append(q)
        return out

    def periods(self, i: int, j: int) -> list[ArithProg]:
        """All periods of T[i..j] (|S| included), as sorted progressions."""
        dec = self.borders(i, j)
        s = j - i + 1
        out: list[ArithProg] = []
        for ap in reversed(dec.progressions):
            if ap.last == s:
                if ap.count == 1:
                    continue
                ap = ArithProg(ap.start, ap.diff, ap.count - 1)
            out.append(ArithProg(s - ap.last, ap.diff, ap.count))
        out.append(ArithProg.singleton(s))
        return merge_adjacent(out)
