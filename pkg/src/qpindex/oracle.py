"""Brute-force reference implementations of covers, seeds, borders, periods and runs.

Everything here works on plain Python strings straight from the definitions.
These functions generate expected values for tests and for the CLI selftest;
they deliberately share no code with the indexed fast path.
"""

from __future__ import annotations

NAIVE_CAP = 4096


class OracleCapExceeded(ValueError):
    """Raised when an oracle is handed an input above the configured cap."""


def _guard(s: str, cap: int = NAIVE_CAP) -> None:
    if len(s) > cap:
        raise OracleCapExceeded(f"oracle input of length {len(s)} exceeds cap {cap}")


def naive_occurrences(pattern: str, s: str) -> list[int]:
    """All 1-based start positions of pattern inside s, ascending."""
    _guard(s)
    out = []
    if not pattern or len(pattern) > len(s):
        return out
    k = s.find(pattern)
    while k != -1:
        out.append(k + 1)
        k = s.find(pattern, k + 1)
    return out


def naive_is_cover(length: int, s: str) -> bool:
    """Does the prefix of the given length cover every position of s?"""
    _guard(s)
    n = len(s)
    if not 1 <= length <= n:
        raise ValueError("cover length out of range")
    pref = s[:length]
    covered_to = 0
    k = 0
    while True:
        k = s.find(pref, k)
        if k == -1:
            return False
        if k > covered_to:
            return False
        covered_to = k + length
        if covered_to == n:
            return True
        k += 1


def naive_covers(s: str) -> set[int]:
    _guard(s)
    return {c for c in range(1, len(s) + 1) if naive_is_cover(c, s)}


def naive_min_cover(s: str) -> int:
    _guard(s)
    for c in range(1, len(s) + 1):
        if naive_is_cover(c, s):
            return c
    raise AssertionError("unreachable: |s| always covers s")


def naive_covered_pref(length: int, s: str) -> int:
    """Length of the longest prefix of s covered by s[:length]."""
    _guard(s)
    n = len(s)
    if not 1 <= length <= n:
        raise ValueError("cover length out of range")
    pref = s[:length]
    t = length
    k = s.find(pref, 1)
    while k != -1 and k <= t:
        t = k + length
        k = s.find(pref, k + 1)
    return t


def naive_borders(s: str) -> list[int]:
    """All border lengths of s, ascending; |s| itself is included."""
    _guard(s)
    n = len(s)
    return [b for b in range(1, n + 1) if s[:b] == s[n - b:]]


def naive_periods(s: str) -> list[int]:
    """All periods of s, ascending; |s| itself is included (vacuous shift)."""
    _guard(s)
    n = len(s)
    return [p for p in range(1, n + 1) if s[: n - p] == s[p:]]


def _prefix_function(s: str) -> list[int]:
    pi = [0] * len(s)
    k = 0
    for q in range(1, len(s)):
        while k > 0 and s[q] != s[k]:
            k = pi[k - 1]
        if s[q] == s[k]:
            k += 1
        pi[q] = k
    return pi


def naive_min_period(s: str) -> int:
    if not s:
        raise ValueError("empty string has no period")
    return len(s) - _prefix_function(s)[-1]


def _is_seed(c: str, s: str) -> bool:
    """Is c a seed of s: a factor of s covering some superstring of s?"""
    n, m = len(s), len(c)
    occ = []
    k = s.find(c)
    while k != -1:
        occ.append(k)
        k = s.find(c, k + 1)
    if not occ:
        return False
    for q1, q2 in zip(occ, occ[1:]):
        if q2 - q1 > m:
            return False
    first, last = occ[0], occ[-1]
    if first > 0:
        # a left-hanging occurrence must cover s[:first]: some proper suffix
        # of c of length t >= first has to be a prefix of s
        if not any(s[:t] == c[m - t:] for t in range(first, m)):
            return False
    tail = n - (last + m)
    if tail > 0:
        # mirrored for the uncovered tail
        if not any(s[n - t:] == c[:t] for t in range(tail, m)):
            return False
    return True


def naive_seeds(s: str, max_len: int | None = None) -> set[str]:
    """All seeds of s up to max_len (default |s|), as a set of factor strings."""
    _guard(s, cap=512)
    n = len(s)
    cap = n if max_len is None else min(max_len, n)
    out: set[str] = set()
    for length in range(1, cap + 1):
        for cand in {s[k: k + length] for k in range(n - length + 1)}:
            if _is_seed(cand, s):
                out.add(cand)
    return out


def naive_runs(s: str) -> set[tuple[int, int, int]]:
    """Maximal periodic factors of s as (start, end, shortest period), 1-based."""
    _guard(s)
    n = len(s)
    out: set[tuple[int, int, int]] = set()
    for p in range(1, n // 2 + 1):
        k = 0
        while k + p < n:
            if s[k] != s[k + p]:
                k += 1
                continue
            block = k
            while k + p < n and s[k] == s[k + p]:
                k += 1
            matched = k - block
            if matched >= p:
                a, b = block, block + matched + p - 1
                if naive_min_period(s[a: b + 1]) == p:
                    out.add((a + 1, b + 1, p))
    return out


def naive_run_of(s: str, i: int, j: int) -> tuple[int, int, int] | None:
    """The run of s containing s[i..j] with period per(s[i..j]), or None."""
    _guard(s)
    sub = s[i - 1: j]
    p = naive_min_period(sub)
    if len(sub) < 2 * p:
        return None
    for a, b, q in naive_runs(s):
        if q == p and a <= i and j <= b:
            return (a, b, q)
    raise AssertionError("periodic factor must lie in a run of equal period")
