"""Rational subsets of free groups through their reduced representatives."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .automata import (
    DEAD,
    Alphabet,
    Automaton,
    Dfa,
    Nfa,
    concat,
    intersection,
    minimize,
    trim,
    universal_dfa,
    words_nfa,
)
from .textio import parse_regex
from .words import reduce


def reduced_words_dfa(alphabet: Alphabet) -> Dfa:
    """All freely reduced words; state 0 is the start, state ``x+1`` means "last letter x"."""
    rows = [tuple(x + 1 for x in alphabet.letters)]
    for last in alphabet.letters:
        rows.append(tuple(DEAD if x == last ^ 1 else x + 1 for x in alphabet.letters))
    return Dfa(alphabet, alphabet.size + 1, 0, frozenset(range(alphabet.size + 1)), tuple(rows))


def _identity_paths(a: Nfa) -> list[set[int]]:
    """``reach[p]``: states ``q`` joined to ``p`` by a path labelled by a word equal to 1.

    Least relation that is reflexive, transitive and closed under
    ``p -x-> r ~> s -x^-1-> q``.
    """
    n = a.state_count
    reach = [{p} for p in range(n)]
    changed = True
    while changed:
        changed = False
        for p in range(n):
            for x in a.alphabet.letters:
                for r in a.delta[p][x]:
                    for s in list(reach[r]):
                        for q in a.delta[s][x ^ 1]:
                            if q not in reach[p]:
                                reach[p].add(q)
                                changed = True
        for p in range(n):
            closure = set(reach[p])
            for q in reach[p]:
                closure |= reach[q]
            if closure != reach[p]:
                reach[p] = closure
                changed = True
    return reach


def benois_reduce(a: Automaton) -> Dfa:
    """Minimal Dfa of the reduced forms of the words accepted by ``a``."""
    nfa = trim(a.to_nfa())
    reach = _identity_paths(nfa)
    table = tuple(
        tuple(frozenset(q for r in reach[p] for q in nfa.delta[r][x]) for x in nfa.alphabet.letters)
        for p in range(nfa.state_count)
    )
    finals = frozenset(p for p in range(nfa.state_count) if reach[p] & nfa.finals)
    saturated = Nfa(nfa.alphabet, nfa.state_count, nfa.initial, finals, table)
    return intersection(saturated, reduced_words_dfa(nfa.alphabet))


@dataclass(frozen=True)
class RationalSubset:
    """A rational subset ``U``: any representative Nfa plus the Dfa of reduced words."""

    source: Nfa
    reduced: Dfa

    @property
    def alphabet(self) -> Alphabet:
        return self.reduced.alphabet

    @classmethod
    def from_automaton(cls, a: Automaton) -> RationalSubset:
        return cls(a.to_nfa(), benois_reduce(a))

    @classmethod
    def from_regex(cls, expr: str, alphabet: Alphabet) -> RationalSubset:
        return cls.from_automaton(parse_regex(expr, alphabet))

    @classmethod
    def from_words(cls, alphabet: Alphabet, words: Iterable[Sequence[int]]) -> RationalSubset:
        return cls.from_automaton(words_nfa(alphabet, words))

    @classmethod
    def whole_group(cls, alphabet: Alphabet) -> RationalSubset:
        return cls(universal_dfa(alphabet).to_nfa(), minimize(reduced_words_dfa(alphabet)))

    def member(self, word: Sequence[int]) -> bool:
        return self.reduced.accepts(reduce(word))

    def times(self, word: Sequence[int]) -> RationalSubset:
        """The subset ``U * word``."""
        return RationalSubset.from_automaton(concat(self.reduced, words_nfa(self.alphabet, [word])))


def member(u: RationalSubset, word: Sequence[int]) -> bool:
    return u.member(word)
