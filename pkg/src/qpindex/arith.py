"""Arithmetic progressions over integers.

Sets of border lengths, periods and cover lengths are all encoded as short
lists of progressions, so this little algebra is shared by most modules.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class ArithProg:
    """The set {start, start + diff, ..., start + (count-1) * diff}.

    count == 0 encodes the empty progression; a singleton is stored with
    diff == 0.  Progressions with count >= 2 must have diff >= 1 so that
    elements are distinct.
    """

    start: int
    diff: int
    count: int

    def __post_init__(self) -> None:
        if self.count < 0:
            raise ValueError("count must be nonnegative")
        if self.diff < 0:
            raise ValueError("diff must be nonnegative")
        if self.count >= 2 and self.diff == 0:
            raise ValueError("diff must be positive when count >= 2")
        # canonical form: empty is (0, 0, 0), singleton has diff 0
        if self.count == 0 and (self.start, self.diff) != (0, 0):
            object.__setattr__(self, "start", 0)
            object.__setattr__(self, "diff", 0)
        elif self.count == 1 and self.diff != 0:
            object.__setattr__(self, "diff", 0)

    @classmethod
    def empty(cls) -> ArithProg:
        return cls(0, 0, 0)

    @classmethod
    def singleton(cls, value: int) -> ArithProg:
        return cls(value, 0, 1)

    @classmethod
    def from_range(cls, lo: int, hi: int, diff: int) -> ArithProg:
        """lo, lo+diff, ... clipped at hi (hi itself need not be on the grid)."""
        if hi < lo:
            return cls.empty()
        if diff <= 0:
            return cls.singleton(lo)
        return cls(lo, diff, (hi - lo) // diff + 1)

    @property
    def last(self) -> int:
        if self.count == 0:
            raise ValueError("empty progression has no last element")
        return self.start + (self.count - 1) * self.diff

    def __bool__(self) -> bool:
        return self.count > 0

    def __len__(self) -> int:
        return self.count

    def __contains__(self, x: int) -> bool:
        if self.count == 0 or x < self.start or x > self.last:
            return False
        if self.diff == 0:
            return x == self.start
        return (x - self.start) % self.diff == 0

    def __iter__(self):
        for t in range(self.count):
            yield self.start + t * self.diff

    def elements(self) -> list[int]:
        return list(self)

    def render(self) -> str:
        return f"{self.start}:{self.diff}:{self.count}"


def ap_intersect(a: ArithProg, b: ArithProg) -> ArithProg:
    """Intersection of two progressions (itself always a progression)."""
    if not a or not b:
        return ArithProg.empty()
    if a.count == 1:
        return a if a.start in b else ArithProg.empty()
    if b.count == 1:
        return b if b.start in a else ArithProg.empty()
    g = math.gcd(a.diff, b.diff)
    if (b.start - a.start) % g != 0:
        return ArithProg.empty()
    step = math.lcm(a.diff, b.diff)
    # CRT: x = a.start (mod a.diff) and x = b.start (mod b.diff)
    m = b.diff // g
    t = ((b.start - a.start) // g * pow(a.diff // g, -1, m)) % m
    x = a.start + t * a.diff
    lo = max(a.start, b.start)
    hi = min(a.last, b.last)
    if x < lo:
        x += -(-(lo - x) // step) * step
    if x > hi:
        return ArithProg.empty()
    return ArithProg(x, step, (hi - x) // step + 1)


def merge_adjacent(progs: list[ArithProg]) -> list[ArithProg]:
    """Greedily fuse consecutive progressions that form one uniform progression.

    Input must be sorted ascending with max of one progression below the min of
    the next.  Two neighbours fuse only when the joining gap equals both diffs
    (a singleton is compatible with any gap).
    """
    out: list[ArithProg] = []
    for q in progs:
        if q.count == 0:
            continue
        if out:
            p = out[-1]
            gap = q.start - p.last
            if gap > 0 and (p.count == 1 or p.diff == gap) and (q.count == 1 or q.diff == gap):
                out[-1] = ArithProg(p.start, gap, p.count + q.count)
                continue
        out.append(q)
    return out
