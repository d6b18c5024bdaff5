import random

from hypothesis import given

from conjlang.automata import Alphabet, count_words, enumerate_words, equivalent
from conjlang.benois import RationalSubset, benois_reduce, member, reduced_words_dfa
from conjlang.samples import SampleConfig, random_nfa
from conjlang.textio import parse_regex

from oracles import benois_oracle, benois_stack_oracle, reduce_word
from strategies import nfas, words

A1 = Alphabet(1)
A2 = Alphabet(2)
P = A2.parse


def reduced(expr, n=10):
    return {A2.format(w) for w in enumerate_words(benois_reduce(parse_regex(expr, A2)), n)}


def test_benois_examples():
    assert reduced("abB") == {"a"}
    assert reduced("aA") == {"1"}
    expected = {"1"} | {"a" + "b" * n + "A" for n in range(1, 9)}
    assert reduced("(abA)*") == expected


def test_member_examples():
    u = RationalSubset.from_regex("(abA)*", A2)
    assert member(u, P("abbA")) and u.member(P("abBbbA"))
    assert not member(RationalSubset.from_regex("ab", A2), P("ba"))


def test_reduced_words_dfa():
    d1 = reduced_words_dfa(A1)
    assert d1.accepts(P("aaa")) and d1.accepts((1, 1)) and not d1.accepts((0, 1))
    d2 = reduced_words_dfa(A2)
    assert d2.accepts(P("abAB"))
    assert count_words(d2, 6)[1:] == [4 * 3 ** (n - 1) for n in range(1, 7)]


def test_subgroup_membership():
    # <ab, bB a> = <ab, a>: everything reachable from a and b
    h = RationalSubset.from_regex("(ab|BA|a|A)*", A2)
    assert h.member(P("b")) and h.member(P("Bab"))
    k = RationalSubset.from_regex("(aa|AA)*", A2)
    assert k.member(P("aaaa")) and not k.member(P("a")) and not k.member(P("b"))


def test_times():
    u = RationalSubset.from_regex("a*", A2)
    assert equivalent(u.times(P("A")).reduced, benois_reduce(parse_regex("A|a*", A2)))


@given(nfas(max_states=4))
def test_benois_matches_reduction_oracle(n):
    # completeness against a bounded oracle; exact equality is an acceptance check
    got = set(enumerate_words(benois_reduce(n), 5))
    assert benois_oracle(n, 9, 5) <= got
    assert all(reduce_word(w) == w for w in got)


@given(nfas(max_states=4))
def test_benois_idempotent(n):
    d = benois_reduce(n)
    assert equivalent(benois_reduce(d), d)


@given(nfas(max_states=4), words(max_len=6))
def test_member_ignores_representative(n, w):
    u = RationalSubset.from_automaton(n)
    assert u.member(w) == u.member(reduce_word(w))


def test_benois_matches_unbounded_length_oracle():
    # the stack oracle follows arbitrarily long cancelling detours
    rng = random.Random(1)
    for _ in range(50):
        n = random_nfa(rng, SampleConfig(max_states=6))
        assert set(enumerate_words(benois_reduce(n), 6)) == benois_stack_oracle(n, 10, 6)
