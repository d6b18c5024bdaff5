"""Seeded random inputs for property checks and experiments."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .automata import Alphabet, Nfa, Word
from .words import reduce


@dataclass(frozen=True)
class SampleConfig:
    rank: int = 2
    max_states: int = 6
    # expected number of outgoing transitions per (state, letter)
    density: float = 0.5
    final_prob: float = 0.4
    max_word_len: int = 4
    max_words: int = 5


def random_word(rng: random.Random, alphabet: Alphabet, length: int) -> Word:
    return tuple(rng.randrange(alphabet.size) for _ in range(length))


def random_reduced_word(rng: random.Random, alphabet: Alphabet, max_len: int) -> Word:
    return reduce(random_word(rng, alphabet, rng.randint(0, max_len)))


def random_nfa(rng: random.Random, cfg: SampleConfig = SampleConfig()) -> Nfa:
    alphabet = Alphabet(cfg.rank)
    n = rng.randint(1, cfg.max_states)
    p = min(1.0, cfg.density / n)
    transitions = [
        (s, x, t)
        for s in range(n)
        for x in alphabet.letters
        for t in range(n)
        if rng.random() < p
    ]
    finals = [s for s in range(n) if rng.random() < cfg.final_prob] or [n - 1]
    return Nfa.from_transitions(alphabet, n, [0], finals, transitions)


def random_finite_set(rng: random.Random, cfg: SampleConfig = SampleConfig()) -> list[Word]:
    alphabet = Alphabet(cfg.rank)
    count = rng.randint(1, cfg.max_words)
    return sorted({random_reduced_word(rng, alphabet, cfg.max_word_len) for _ in range(count)})
