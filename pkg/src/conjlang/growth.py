"""Conjugacy growth relative to a rational subset of a free group."""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from itertools import accumulate

from .automata import Alphabet, Nfa, count_words, homomorphism, iter_words, minimize
from .benois import RationalSubset
from .conjugacy import conjgeo_unconstrained
from .textio import parse_regex
from .words import conj_canonical


@dataclass(frozen=True)
class GrowthTable:
    max_n: int
    strict: tuple[int, ...]
    cumulative: tuple[int, ...]

    @classmethod
    def from_strict(cls, strict) -> GrowthTable:
        strict = tuple(strict)
        return cls(len(strict) - 1, strict, tuple(accumulate(strict)))

    def rows(self):
        return zip(range(self.max_n + 1), self.strict, self.cumulative)


@dataclass(frozen=True)
class UdSubset:
    degree: int
    base_alphabet_size: int
    base: Nfa  # a_1^* ... a_{d+1}^*, with a_i the i-th generator of a free group of rank d+1
    language: Nfa  # K_d over {a, b}: every a_i replaced by a^i b^i

    def subset(self) -> RationalSubset:
        return RationalSubset.from_automaton(self.language)


def build_ud(d: int) -> UdSubset:
    """Rational subset of F(a, b) with cumulative relative growth of degree ``d-1 .. d``.

    The base language ``a_1^* a_2^* ... a_{d+1}^*`` has ``C(n+d, d)`` words of
    length ``n``; relabelling ``a_i -> a^i b^i`` keeps distinct words
    distinct and cyclically reduced.
    """
    if d < 1:
        raise ValueError("degree must be at least 1")
    size = d + 1
    base_alphabet = Alphabet(size)
    base = parse_regex("".join(f"{base_alphabet.symbol(2 * i)}*" for i in range(size)), base_alphabet)
    two = Alphabet(2)
    a, b = two.letter("a"), two.letter("b")
    images = {2 * i: (a,) * (i + 1) + (b,) * (i + 1) for i in range(size)}
    return UdSubset(d, size, base, homomorphism(base, two, images))


def base_word_counts(ud: UdSubset, max_n: int) -> list[int]:
    return count_words(ud.base, max_n)


def relative_growth(u: RationalSubset, max_n: int) -> GrowthTable:
    """Strict and cumulative counts of conjugacy classes meeting ``U`` by cyclic length."""
    if max_n < 0:
        raise ValueError("max_n must be non-negative")
    lang = minimize(conjgeo_unconstrained(u).conjgeo)
    strict = [0] * (max_n + 1)
    for w in iter_words(lang, max_n):
        if conj_canonical(w) == w:
            strict[len(w)] += 1
    return GrowthTable.from_strict(strict)


def degree_estimate(table: GrowthTable, window: tuple[int, int]) -> float:
    """Least-squares slope of ``log cc(n)`` against ``log n`` over ``n0..n1``."""
    n0, n1 = window
    if not 1 <= n0 < n1 <= table.max_n:
        raise ValueError(f"window {window} must satisfy 1 <= n0 < n1 <= {table.max_n}")
    ns = range(n0, n1 + 1)
    if any(table.cumulative[n] == 0 for n in ns):
        raise ValueError("cumulative growth vanishes inside the window")
    slope, _ = statistics.linear_regression(
        [math.log(n) for n in ns], [math.log(table.cumulative[n]) for n in ns]
    )
    return slope
