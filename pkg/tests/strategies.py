"""Hypothesis strategies for words and small automata."""

import hypothesis.strategies as st

from conjlang.automata import Alphabet, Nfa


def words(rank=2, max_len=8):
    return st.lists(st.integers(0, 2 * rank - 1), max_size=max_len).map(tuple)


@st.composite
def nfas(draw, rank=2, max_states=5):
    alphabet = Alphabet(rank)
    n = draw(st.integers(1, max_states))
    triples = st.tuples(st.integers(0, n - 1), st.integers(0, alphabet.size - 1), st.integers(0, n - 1))
    trans = draw(st.lists(triples, max_size=3 * n))
    finals = draw(st.sets(st.integers(0, n - 1), min_size=1))
    return Nfa.from_transitions(alphabet, n, [0], finals, trans)
