from math import comb

import pytest

from conjlang.automata import Alphabet, count_words, enumerate_words
from conjlang.benois import RationalSubset
from conjlang.conjugacy import conjgeo_unconstrained
from conjlang.growth import GrowthTable, base_word_counts, build_ud, degree_estimate, relative_growth

from oracles import necklace_counts

A2 = Alphabet(2)


def test_build_ud_examples():
    ud1 = build_ud(1)
    assert base_word_counts(ud1, 6) == [n + 1 for n in range(7)]
    expected = {"ab" * i + "aabb" * j for i in range(6) for j in range(3) if 2 * i + 4 * j <= 10}
    got = {A2.format(w) for w in enumerate_words(ud1.language, 10)}
    assert got == {w if w else "1" for w in expected}
    assert base_word_counts(build_ud(2), 4)[4] == comb(6, 2)
    assert build_ud(3).base_alphabet_size == 4
    with pytest.raises(ValueError):
        build_ud(0)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_ud_words_are_positive_blocks(d):
    ud = build_ud(d)
    for w in enumerate_words(ud.language, 12):
        assert all(x % 2 == 0 for x in w)
    lang = conjgeo_unconstrained(ud.subset()).conjgeo
    assert all(x % 2 == 0 for w in enumerate_words(lang, 10) for x in w)


def test_free_group_growth():
    t = relative_growth(RationalSubset.whole_group(A2), 8)
    assert (t.strict[1], t.strict[2], t.cumulative[2]) == (4, 8, 13)
    assert list(t.strict) == necklace_counts(2, 8)


def test_small_subsets():
    t = relative_growth(RationalSubset.from_regex("ab", A2), 5)
    assert list(t.strict) == [0, 0, 1, 0, 0, 0]
    empty = RationalSubset.from_words(A2, [])
    assert relative_growth(empty, 4).cumulative == (0,) * 5
    with pytest.raises(ValueError):
        relative_growth(empty, -1)


def test_table_invariants():
    u = RationalSubset.from_regex("(ab|B)*a", A2)
    t = relative_growth(u, 8)
    counts = count_words(conjgeo_unconstrained(u).conjgeo, 8)
    for k in range(1, 9):
        assert t.strict[k] <= counts[k] <= k * t.strict[k]
    assert all(x <= y for x, y in zip(t.cumulative, t.cumulative[1:]))
    assert list(t.rows())[2] == (2, t.strict[2], t.cumulative[2])


def test_degree_estimate_power_laws():
    linear = GrowthTable(32, (1,) * 33, tuple(n + 1 for n in range(33)))
    assert degree_estimate(linear, (4, 32)) == pytest.approx(1.0, abs=0.1)
    square = GrowthTable(20, (0,) * 21, tuple(n * n for n in range(21)))
    assert degree_estimate(square, (2, 20)) == pytest.approx(2.0, abs=1e-9)
    with pytest.raises(ValueError):
        degree_estimate(square, (0, 5))
    with pytest.raises(ValueError):
        degree_estimate(GrowthTable(4, (0,) * 5, (0,) * 5), (1, 4))


def test_from_strict():
    t = GrowthTable.from_strict([1, 4, 8])
    assert t.max_n == 2 and t.cumulative == (1, 5, 13)
