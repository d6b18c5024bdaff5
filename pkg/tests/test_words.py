from hypothesis import given

from conjlang.automata import Alphabet, invert_word
from conjlang.words import (
    conj_canonical,
    conjugacy_test,
    conjugate,
    cyclic_reduce,
    is_cyclically_reduced,
    is_reduced,
    primitive_root,
    reduce,
    rotations,
)

from oracles import class_key, conj, cyc_core, reduce_word, reduced_words
from strategies import words

A2 = Alphabet(2)
P = A2.parse


def test_reduce_examples():
    assert reduce(P("abB")) == P("a")
    assert reduce(P("aA")) == ()
    assert reduce(P("abBAb")) == P("b")


def test_cyclic_reduce_examples():
    assert cyclic_reduce(P("Aba")) == (P("b"), P("a"))
    assert cyclic_reduce(P("ab")) == (P("ab"), ())
    assert cyclic_reduce(P("aA")) == ((), ())


def test_rotation_and_predicates():
    assert is_cyclically_reduced(P("aa")) and rotations(P("aa")) == [P("aa")]
    assert not is_cyclically_reduced(P("abA"))
    assert rotations(P("ab")) == [P("ab"), P("ba")]


def test_conjugacy_examples():
    assert conjugacy_test(P("ab"), P("ba")) == P("a")
    assert conjugacy_test(P("a"), P("A")) is None
    z = conjugacy_test(P("Aba"), P("b"))
    assert conjugate(P("Aba"), z) == P("b")


def test_canonical_examples():
    assert conj_canonical(P("ba")) == P("ab")
    assert conj_canonical(P("Aba")) == P("b")
    assert conj_canonical(()) == ()


def test_primitive_root():
    assert primitive_root(P("abab")) == P("ab")
    assert primitive_root(P("aba")) == P("aba")
    assert primitive_root(()) == ()


@given(words(max_len=10))
def test_reduce_matches_stack_oracle(w):
    r = reduce(w)
    assert r == reduce_word(w) and is_reduced(r) and reduce(r) == r
    assert reduce(w + invert_word(w)) == ()


@given(words(max_len=8))
def test_core_is_shortest_conjugate(w):
    core, z = cyclic_reduce(w)
    assert reduce(invert_word(z) + core + z) == reduce(w)
    assert cyclic_reduce(core).core == core and is_cyclically_reduced(core)
    # brute force over conjugators up to the word's length
    best = min(len(conj(w, v)) for v in reduced_words(4, min(len(w), 4)))
    assert len(core) == min(best, len(cyc_core(w)))


@given(words(max_len=8))
def test_rotations_stay_cyclically_reduced(w):
    core = cyclic_reduce(w).core
    assert all(is_cyclically_reduced(r) for r in rotations(core))
    assert all(conj_canonical(w) <= r for r in rotations(core) if len(r) == len(core))


@given(words(max_len=8), words(max_len=8))
def test_conjugacy_test_agrees_with_canonical_form(u, v):
    z = conjugacy_test(u, v)
    same = conj_canonical(u) == conj_canonical(v)
    assert (z is not None) == same == (class_key(u) == class_key(v))
    if z is not None:
        assert conjugate(u, z) == reduce(v)
