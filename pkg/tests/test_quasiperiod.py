import math
import random
from itertools import product

import pytest

from qpindex.core_text import FactorError, build_index
from qpindex.oracle import naive_covers, naive_min_cover
from qpindex.quasiperiod import build_cover_engine

from conftest import T13, factor_pairs, fibonacci_word, small_corpus


def make_engine(text):
    return build_cover_engine(build_index(text))


def test_is_cover_fixtures():
    eng = make_engine(T13)
    assert eng.is_cover(3, (1, 13))
    assert eng.is_cover(8, (1, 13))
    assert eng.is_cover(13, (1, 13))
    assert not eng.is_cover(2, (1, 13))
    assert not eng.is_cover(1, (1, 13))
    assert not eng.is_cover(5, (1, 13))

    eng = make_engine("aaaa")
    for ell in range(1, 5):
        assert eng.is_cover(ell, (1, 4))

    eng = make_engine("ab")
    assert not eng.is_cover(1, (1, 2))
    assert eng.is_cover(2, (1, 2))
    with pytest.raises(FactorError):
        eng.is_cover(0, (1, 2))
    with pytest.raises(FactorError):
        eng.is_cover(3, (1, 2))


def test_min_cover_fixtures():
    eng = make_engine(T13)
    assert eng.min_cover((1, 13)) == 3
    assert eng.min_cover((2, 13)) == 7
    eng = make_engine("abc")
    assert eng.min_cover((1, 3)) == 3
    eng = make_engine("aaaa")
    assert eng.min_cover((1, 4)) == 1


def test_all_covers_fixtures():
    eng = make_engine(T13)
    ans = eng.all_covers((1, 13))
    assert ans.elements() == [3, 8, 13]
    eng = make_engine("aaaa")
    ans = eng.all_covers((1, 4))
    assert len(ans.progressions) == 1
    assert ans.elements() == [1, 2, 3, 4]
    eng = make_engine("ab")
    assert eng.all_covers((1, 2)).elements() == [2]


def test_covers_of_candidates_validation():
    eng = make_engine(T13)
    assert eng.covers_of_candidates([13], (1, 13)) == {13}
    assert eng.covers_of_candidates([1, 3, 8, 13], (1, 13)) == {3, 8, 13}
    with pytest.raises(ValueError):
        eng.covers_of_candidates([3, 8], (1, 13))  # missing |S|
    with pytest.raises(ValueError):
        eng.covers_of_candidates([2, 13], (1, 13))  # 2 is not a border


def check_factor_answers(eng, text, i, j):
    sub = text[i - 1: j]
    slen = j - i + 1
    want = sorted(naive_covers(sub))
    ans = eng.all_covers((i, j))
    assert ans.elements() == want, (text, i, j)
    assert eng.min_cover((i, j)) == want[0]
    assert ans.shortest == want[0]
    for k, p in enumerate(ans.progressions[:-1]):
        assert p.last < ans.progressions[k + 1].start
    probes = set(want[:2]) | {1, 2, slen // 2, slen} | {w + 1 for w in want[:2]}
    for ell in sorted(e for e in probes if 1 <= e <= slen):
        assert eng.is_cover(ell, (i, j)) == (ell in set(want)), (text, i, j, ell)


def test_matches_oracle_exhaustive():
    for n in range(1, 7):
        for bits in product("ab", repeat=n):
            text = "".join(bits)
            eng = make_engine(text)
            for i, j in factor_pairs(n):
                check_factor_answers(eng, text, i, j)


def test_matches_oracle_corpus():
    rng = random.Random(551)
    for text in small_corpus():
        n = len(text)
        eng = make_engine(text)
        if n <= 30:
            pairs = list(factor_pairs(n))
        else:
            pairs = [(1, n)]
            pairs += [
                sorted(rng.sample(range(1, n + 1), 2)) for _ in range(120)
            ]
            pairs = [tuple(p) for p in pairs]
        for i, j in pairs:
            check_factor_answers(eng, text, i, j)


def test_simple_min_cover_agrees():
    rng = random.Random(552)
    texts = [fibonacci_word(256), "".join(rng.choice("ab") for _ in range(256))]
    for text in texts:
        eng = make_engine(text)
        for _ in range(150):
            i, j = sorted(rng.sample(range(1, len(text) + 1), 2))
            assert eng.min_cover((i, j)) == eng.min_cover_simple((i, j)), (i, j)


def test_all_covers_properties():
    rng = random.Random(553)
    texts = [
        "".join(rng.choice("ab") for _ in range(512)),
        "".join(rng.choice("abc") for _ in range(512)),
        fibonacci_word(512),
    ]
    for text in texts:
        eng = make_engine(text)
        n = len(text)
        for _ in range(150):
            i, j = sorted(rng.sample(range(1, n + 1), 2))
            s = j - i + 1
            ans = eng.all_covers((i, j))
            assert s in ans
            assert len(ans.progressions) <= 2 * math.ceil(math.log2(s + 1)) + 2
            m = ans.shortest
            assert m == eng.min_cover((i, j))
            # the shortest cover is aperiodic
            per = eng.borders.periods(i, i + m - 1)[0].start
            assert per > m // 2, (i, j, m, per)


def test_cover_transitivity_spot_checks():
    rng = random.Random(554)
    text = fibonacci_word(377)
    eng = make_engine(text)
    hits = 0
    for _ in range(80):
        i, j = sorted(rng.sample(range(1, len(text) + 1), 2))
        covers = eng.all_covers((i, j)).elements()
        for c in covers[:-1]:
            inner = eng.all_covers((i, i + c - 1)).elements()
            for c2 in inner:
                hits += 1
                assert eng.is_cover(c2, (i, j)), (i, j, c, c2)
    assert hits > 0
