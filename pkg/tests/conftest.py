"""Shared corpus helpers for the test suite."""

from __future__ import annotations

import itertools
import random

T13 = "abaababaababa"
T16 = "aabaababababaaba"


def fibonacci_word(n: int) -> str:
    a, b = "a", "ab"
    while len(b) < n:
        a, b = b, b + a
    return b[:n]


def thue_morse(n: int) -> str:
    s = "a"
    flip = str.maketrans("ab", "ba")
    while len(s) < n:
        s += s.translate(flip)
    return s[:n]


def random_string(rng: random.Random, n: int, alphabet: str = "ab") -> str:
    return "".join(rng.choice(alphabet) for _ in range(n))


def all_strings(n: int, alphabet: str = "ab"):
    for tup in itertools.product(alphabet, repeat=n):
        yield "".join(tup)


def factor_pairs(n: int):
    """All 1-based inclusive (i, j) pairs of a length-n text."""
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            yield i, j


def small_corpus() -> list[str]:
    """Hand-picked structured strings plus a few seeded random ones, n <= 64."""
    rng = random.Random(20240817)
    out = [
        "a",
        "ab",
        "aa",
        "aaaa",
        "abab",
        "abaab",
        "aabaa",
        "abaabaaba",
        "aabab",
        T13,
        T16,
        "a" * 24,
        "ab" * 16,
        "aab" * 9,
        fibonacci_word(55),
        thue_morse(48),
    ]
    out += [random_string(rng, n) for n in (17, 29, 41, 64)]
    out += [random_string(rng, n, "abc") for n in (23, 37, 64)]
    return out
