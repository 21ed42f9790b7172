"""Maximal repetitions (runs) and the periodic-cover candidate machinery.

A run is a maximal factor T[a..b] whose shortest period p satisfies
b - a + 1 >= 2p.  Runs are grouped by the rotation class of their period
block (the Lyndon root); within a group, starts are strictly increasing and
two runs overlap on at most p - 1 positions.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arith import ArithProg
from .core_text import SparseRMQ, TextIndex
from .ipm import OccurrenceFinder
from .periods_borders import BorderEngine


@dataclass(frozen=True)
class RunRecord:
    a: int
    b: int
    p: int
    root_id: int
    root_pos: int

    @property
    def length(self) -> int:
        return self.b - self.a + 1


@dataclass
class RootGroup:
    root_id: int
    starts: list[int]
    lengths: list[int]
    _rmq: SparseRMQ | None = field(default=None, repr=False)

    def min_length(self, lo: int, hi: int) -> int:
        if self._rmq is None:
            self._rmq = SparseRMQ(self.lengths)
        return self._rmq.min_value(lo, hi)


def _divisors(p: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= p:
        if p % d == 0:
            small.append(d)
            if d * d != p:
                large.append(p // d)
        d += 1
    return small + large[::-1]


class RunsEngine:
    """Runs of the whole text plus the factor queries built on them."""

    def __init__(self, tix: TextIndex, occ: OccurrenceFinder, borders: BorderEngine) -> None:
        self.tix = tix
        self.occ = occ
        self.borders = borders
        self.records: list[RunRecord] = []
        self.groups: list[RootGroup] = []
        self._by_start_period: dict[tuple[int, int], RunRecord] = {}
        self._root_ids: dict[tuple[int, int], int] = {}
        self._compute()

    # -- construction ------------------------------------------------------

    def _compute(self) -> None:
        tix = self.tix
        n = tix.n
        lcp, lcs = tix._lcp, tix._lcs
        best_label: dict[tuple[int, int], int] = {}
        for p in range(1, n // 2 + 1):
            x = p + 1
            limit = n - p + 1
            while x <= limit:
                r = lcp(x, x + p) if x + p <= n else 0
                l = lcs(x - 1, x + p - 1)
                if l + r >= p:
                    key = (x - l, x + p + r - 1)
                    prev = best_label.get(key)
                    if prev is None or p < prev:
                        best_label[key] = p
                x += p
        triples = sorted(
            (a, b, self._min_period(a, b, p)) for (a, b), p in best_label.items()
        )
        members: dict[int, list[tuple[int, int, int]]] = {}
        order: list[tuple[int, int, int, int]] = []
        for a, b, q in triples:
            rot = tix.min_rotation_start(a, q)
            key = (q, self.occ.sa_interval(rot, rot + q - 1)[0])
            rid = self._root_ids.setdefault(key, len(self._root_ids))
            grp = members.setdefault(rid, [])
            order.append((a, b, q, rid))
            grp.append((a, b, q))
        for rid in range(len(self._root_ids)):
            grp = members[rid]
            self.groups.append(
                RootGroup(rid, [a for a, _, _ in grp], [b - a + 1 for a, b, _ in grp])
            )
        pos_in_group = {rid: 0 for rid in members}
        for a, b, q, rid in order:
            rec = RunRecord(a, b, q, rid, pos_in_group[rid])
            pos_in_group[rid] += 1
            self.records.append(rec)
            self._by_start_period[(a, q)] = rec

    def _min_period(self, a: int, b: int, p: int) -> int:
        length = b - a + 1
        for d in _divisors(p):
            if d == p or self.tix._lcp(a, a + d) >= length - d:
                return d
        return p

    # -- queries -----------------------------------------------------------

    def run_of(self, i: int, j: int) -> RunRecord | None:
        """The unique run with period per(S) containing S, if S is periodic."""
        self.tix.check_factor(i, j)
        s = j - i + 1
        dec = self.borders.borders(i, j)
        last = dec.progressions[-1]
        if last.count >= 2:
            border = last.last - last.diff
        elif len(dec.progressions) >= 2:
            border = dec.progressions[-2].last
        else:
            border = 0
        per = s - border
        if s < 2 * per:
            return None
        lam = self.tix._lcs(i - 1, i + per - 1) if i >= 2 else 0
        rec = self._by_start_period.get((i - lam, per))
        if rec is None or rec.b < j:
            raise AssertionError("periodic factor without an enclosing run")
        return rec

    def min_run_length_x(self, i: int, j: int, p: int, root_id: int) -> int | None:
        """Minimum length, measured within S = T[i..j], of a run in S whose
        period is p and whose root matches root_id.  None when S has no such
        prefix run."""
        self.tix.check_factor(i, j)
        if not 0 <= root_id < len(self.groups):
            raise ValueError(f"unknown root id {root_id}")
        tix = self.tix
        s = j - i + 1
        if p < 1 or 2 * p > s:
            return None
        d = tix._lcp(i, i + p) if i + p <= tix.n else 0
        if d < p:
            return None
        lam = tix._lcs(i - 1, i + p - 1) if i >= 2 else 0
        rec_pref = self._by_start_period.get((i - lam, p))
        if rec_pref is None or rec_pref.root_id != root_id:
            return None
        l_pref = min(p + d, s)
        if l_pref == s:
            return s
        r_min = l_pref
        d2 = tix._lcs(j, j - p)
        rec_suf = None
        if d2 >= p:
            rec_suf = self._by_start_period.get((j - p - d2 + 1, p))
            if rec_suf is not None and rec_suf.root_id == root_id:
                r_min = min(r_min, min(p + d2, s))
            else:
                rec_suf = None
        # interior runs lie strictly inside S, so their full lengths count
        i2 = i + p + d
        if rec_suf is not None and i2 + p <= tix.n:
            rho = tix._lcp(i2, i2 + p)
            lam2 = tix._lcs(i2 - 1, i2 + p - 1)
            if rho >= 1 and lam2 + rho >= p:
                rec = self._by_start_period.get((i2 - lam2, p))
                if rec is not None and rec.root_id == root_id:
                    lo, hi = rec.root_pos, rec_suf.root_pos - 1
                    if lo <= hi:
                        r_min = min(r_min, self.groups[root_id].min_length(lo, hi))
        return r_min

    def periodic_candidates(self, i: int, j: int, prog: ArithProg) -> list[int]:
        """At most four border lengths from prog that can be covers of S."""
        tix = self.tix
        tix.check_factor(i, j)
        s = j - i + 1
        if not prog or prog.start < 1 or prog.last > s:
            raise ValueError("progression outside the border range")
        checks = {prog.start, prog.last}
        if prog.count >= 2:
            checks.add(prog.start + prog.diff)
        for b in checks:
            if tix._lcp(i, j - b + 1) < b:
                raise ValueError(f"{b} is not a border of the factor")
        if prog.count == 1:
            return [prog.start]
        p = prog.diff
        a = prog.start
        cands = {a, a + p}
        rot = tix.min_rotation_start(i, p)
        rid = self._root_ids.get((p, self.occ.sa_interval(rot, rot + p - 1)[0]))
        if rid is not None:
            r_min = self.min_run_length_x(i, j, p, rid)
            if r_min is not None:
                lo = r_min - 2 * p + 1
                b = a if lo <= a else a + ((lo - a + p - 1) // p) * p
                hi = min(r_min, prog.last)
                while b <= hi:
                    cands.add(b)
                    b += p
        return sorted(cands)


def cut_progression(
    prog: ArithProg, covers: set[int], tested=None
) -> ArithProg:
    """Restrict a border progression to its confirmed covers.

    Within one progression the covers form a contiguous block starting at the
    smallest confirmed candidate; any tested non-cover strictly inside the
    block contradicts that structure and raises."""
    sel = sorted(c for c in covers if c in prog)
    if not sel:
        return ArithProg.empty()
    lo, hi = sel[0], sel[-1]
    tested_iter = prog.elements() if tested is None else tested
    for t in tested_iter:
        if lo <= t <= hi and t in prog and t not in covers:
            raise AssertionError(
                f"cover set inside progression is not contiguous: {t} missing"
            )
    count = (hi - lo) // prog.diff + 1 if prog.diff else 1
    return ArithProg(lo, prog.diff if count > 1 else 0, count)


def compute_runs(tix: TextIndex) -> tuple[list[RunRecord], list[RootGroup]]:
    occ = OccurrenceFinder(tix)
    eng = RunsEngine(tix, occ, BorderEngine(tix, occ))
    return eng.records, eng.groups
