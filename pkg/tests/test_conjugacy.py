import random

import pytest
from hypothesis import given

from conjlang.automata import (
    Alphabet,
    count_words,
    cyc_closure,
    enumerate_words,
    equivalent,
    intersection,
    is_empty,
    minimize,
    words_nfa,
)
from conjlang.benois import RationalSubset, reduced_words_dfa
from conjlang.conjugacy import (
    ReducedPairError,
    conjgeo_general,
    conjgeo_reduced_pair,
    conjgeo_unconstrained,
    conjminlensl,
    conjsl_enum,
    cycgeo_all,
    perm_language,
    reduced_side,
)
from conjlang.samples import random_finite_set
from conjlang.textio import parse_regex

from oracles import conjugate_set, cyc_core, is_cyc_reduced, reduced_words
from strategies import nfas

A2 = Alphabet(2)
P = A2.parse
F2 = RationalSubset.whole_group(A2)


def sub(expr):
    return RationalSubset.from_regex(expr, A2)


def dfa(expr):
    return minimize(parse_regex(expr, A2))


def words_of(d, n=8):
    return {A2.format(w) for w in enumerate_words(d, n)}


def test_cycgeo_all():
    d = cycgeo_all(A2)
    assert d.accepts(P("aa")) and d.accepts(P("ab")) and not d.accepts(P("abA"))
    assert count_words(d, 2)[2] == 12
    assert equivalent(intersection(d, reduced_words_dfa(A2)), d)


def test_perm_language_examples():
    assert words_of(perm_language(dfa("ab"), dfa("a"))) == {"ba"}
    assert words_of(perm_language(dfa("ab"), dfa("1|a"))) == {"ab", "ba"}
    expected = {"b" + "ab" * k + "a" for k in range(4)}
    assert words_of(perm_language(dfa("(ab)*"), dfa("a"))) == expected


def test_reduced_pair_examples():
    assert words_of(conjgeo_reduced_pair(sub("(ab)+"), sub("a")).conjgeo) == {"ba", "baba", "babababa", "bababa"}
    assert words_of(conjgeo_reduced_pair(sub("ab"), sub("1")).conjgeo) == {"ab"}
    assert is_empty(conjgeo_reduced_pair(sub("aa"), sub("b")).conjgeo)


def test_reduced_pair_precondition_is_checked():
    with pytest.raises(ReducedPairError) as info:
        conjgeo_reduced_pair(sub("ab"), sub("Ba"), side="left")
    assert info.value.left == P("ab") and info.value.right == P("Ba")
    with pytest.raises(ReducedPairError):
        # UV has "b.B" and V^-1 U has "A.a"
        conjgeo_reduced_pair(sub("ab"), sub("B|a"))
    assert reduced_side(sub("ab"), sub("B|a")) is None


def test_general_examples():
    r = conjgeo_general(sub("ab"), F2)
    assert words_of(r.conjgeo) == {"ab", "ba"} and r.provenance == "general"
    assert equivalent(conjgeo_general(sub("a*|A*"), F2).conjgeo, dfa("1|a+|A+"))
    assert equivalent(conjgeo_general(sub("(ab)+"), sub("a")).conjgeo, conjgeo_reduced_pair(sub("(ab)+"), sub("a")).conjgeo)


def test_unconstrained_examples():
    assert words_of(conjgeo_unconstrained(sub("Aba")).conjgeo) == {"b"}
    assert equivalent(conjgeo_unconstrained(sub("(abA)*")).conjgeo, dfa("1|b+"))


def test_conjminlensl_and_conjsl():
    assert words_of(conjminlensl(sub("ab"), F2)) == {"ab", "ba"}
    assert is_empty(conjminlensl(RationalSubset.from_words(A2, [])))
    assert [A2.format(w) for w in conjsl_enum(sub("ab"), 2)] == ["ab"]
    assert [A2.format(w) for w in conjsl_enum(F2, 1)] == ["1", "a", "A", "b", "B"]


@pytest.mark.parametrize(
    "u, v",
    [("(ab)+", "a"), ("ab", "1|a|b"), ("aab|B", "b*"), ("abA", "a|B|ab"), ("a*b", "(ab)*")],
)
def test_general_soundness_and_completeness(u, v):
    got = set(enumerate_words(conjgeo_general(sub(u), sub(v)).conjgeo, 6))
    small = conjugate_set(enumerate_words(sub(u).reduced, 8), enumerate_words(sub(v).reduced, 6), 6)
    large = conjugate_set(enumerate_words(sub(u).reduced, 12), enumerate_words(sub(v).reduced, 8), 6)
    assert small <= got <= large


def test_random_finite_instances():
    rng = random.Random(11)
    for _ in range(40):
        us, vs = random_finite_set(rng), random_finite_set(rng)
        u, v = RationalSubset.from_words(A2, us), RationalSubset.from_words(A2, vs)
        got = set(enumerate_words(conjgeo_general(u, v).conjgeo, 12))
        assert got == conjugate_set(us, vs, 12)
        side = reduced_side(u, v)
        if side:
            assert conjgeo_reduced_pair(u, v).conjgeo == conjgeo_general(u, v).conjgeo


@given(nfas(max_states=4))
def test_outputs_are_cyclically_reduced_and_rotation_closed(n):
    u = RationalSubset.from_automaton(n)
    r = conjgeo_unconstrained(u)
    assert all(is_cyc_reduced(w) for w in enumerate_words(r.conjgeo, 6))
    assert equivalent(cyc_closure(r.conjgeo), r.conjgeo)
    assert equivalent(r.conjminlensl, r.conjgeo)


@given(nfas(max_states=4))
def test_cross_construction(n):
    u = RationalSubset.from_automaton(n)
    assert conjgeo_general(u, F2).conjgeo == conjgeo_unconstrained(u).conjgeo


def test_unconstrained_matches_core_oracle():
    # every cyclic core of a reduced word in U, rotated, up to length 6
    u = sub("a(bA|B)*a|bb")
    cores = set()
    for w in enumerate_words(u.reduced, 12):
        c = cyc_core(w)
        cores |= {c[i:] + c[:i] for i in range(max(len(c), 1))}
    got = set(enumerate_words(conjgeo_unconstrained(u).conjgeo, 6))
    assert got == {c for c in cores if len(c) <= 6}


def test_empty_inputs():
    empty = RationalSubset.from_automaton(words_nfa(A2, []))
    assert is_empty(conjgeo_general(empty, F2).conjgeo)
    assert is_empty(conjgeo_general(sub("ab"), empty).conjgeo)
    assert set(reduced_words(4, 1)) >= set(enumerate_words(conjgeo_unconstrained(F2).conjgeo, 1))
