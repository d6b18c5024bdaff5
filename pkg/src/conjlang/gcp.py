"""Generalized conjugacy with rational constraints in free groups."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .automata import (
    Word,
    concat,
    intersection,
    invert_word,
    is_empty,
    iter_words,
    shortest_word,
    star,
    union,
    words_nfa,
)
from .benois import RationalSubset, benois_reduce, reduced_words_dfa
from .conjugacy import conjgeo_general, conjgeo_unconstrained
from .words import conjugacy_test, conjugate, cyclic_reduce, primitive_root, reduce, rotations


@dataclass(frozen=True)
class GcpInstance:
    g: Word
    u: RationalSubset
    v: RationalSubset


@dataclass(frozen=True)
class GcpAnswer:
    answer: bool
    # (u, v) with v^-1 u v = g, when one was requested and found
    witness: tuple[Word, Word] | None = None

    def __bool__(self) -> bool:
        return self.answer


def decide_gcp(inst: GcpInstance, witness: bool = False, search_len: int = 8) -> GcpAnswer:
    """Is ``g = v^-1 u v`` for some ``u`` in ``U`` and ``v`` in ``V``?

    ``g = z^-1 core z`` with ``core`` cyclically reduced; then the answer is
    whether ``core`` lies in ConjGeo(U, V z^-1).
    """
    core, z = cyclic_reduce(inst.g)
    shifted = inst.v.times(invert_word(z))
    lang = conjgeo_general(inst.u, shifted).conjgeo
    answer = lang.accepts(core)
    found = None
    if answer and witness:
        found = find_witness(inst, search_len)
    return GcpAnswer(answer, found)


def conjugators_in(v: RationalSubset, u: Sequence[int], g: Sequence[int]) -> Word | None:
    """Shortest ``c`` in ``V`` with ``c^-1 u c = g``.

    All solutions form the coset ``<root(u)> c0`` of the centralizer of ``u``.
    """
    c0 = conjugacy_test(u, g)
    if c0 is None:
        return None
    a = v.alphabet
    if not reduce(u):
        return shortest_word(v.reduced)
    root = primitive_root(u)
    powers = union(star(words_nfa(a, [root])), star(words_nfa(a, [invert_word(root)])))
    coset = benois_reduce(concat(powers, words_nfa(a, [c0])))
    return shortest_word(intersection(coset, v.reduced))


def find_witness(inst: GcpInstance, search_len: int = 8) -> tuple[Word, Word] | None:
    """Search the conjugates ``y^-1 r y`` of ``g`` with ``|y| <= search_len`` inside U-bar.

    ``r`` runs over rotations of the cyclic core; for each hit the
    conjugators in ``V`` are found exactly.
    """
    g = reduce(inst.g)
    seen: set[Word] = set()
    for y in iter_words(reduced_words_dfa(inst.u.alphabet), search_len):
        for r in rotations(cyclic_reduce(g).core):
            u = conjugate(r, y)
            if u in seen:
                continue
            seen.add(u)
            if not inst.u.reduced.accepts(u):
                continue
            c = conjugators_in(inst.v, u, g)
            if c is not None:
                assert conjugate(u, c) == g
                return u, c
    return None


def decide_double_gcp(u: RationalSubset, v: RationalSubset) -> bool:
    """Does some element of ``U`` have a conjugate in ``V``?"""
    common = intersection(conjgeo_unconstrained(u).conjgeo, conjgeo_unconstrained(v).conjgeo)
    return not is_empty(common)
