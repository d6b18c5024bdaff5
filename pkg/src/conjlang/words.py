"""Free-group words: reduction, cyclic reduction, rotations, conjugacy."""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .automata import Word, invert_word, shortlex_key


class CyclicReduction(NamedTuple):
    """``input = conjugator^-1 * core * conjugator`` in the free group."""

    core: Word
    conjugator: Word


def reduce(word: Sequence[int]) -> Word:
    out: list[int] = []
    for x in word:
        if out and out[-1] == x ^ 1:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def multiply(*words: Sequence[int]) -> Word:
    return reduce(tuple(x for w in words for x in w))


def conjugate(word: Sequence[int], by: Sequence[int]) -> Word:
    """``by^-1 * word * by``, reduced."""
    return multiply(invert_word(by), word, by)


def is_reduced(word: Sequence[int]) -> bool:
    return all(word[i + 1] != word[i] ^ 1 for i in range(len(word) - 1))


def is_cyclically_reduced(word: Sequence[int]) -> bool:
    return is_reduced(word) and (len(word) <= 1 or word[0] != word[-1] ^ 1)


def cyclic_reduce(word: Sequence[int]) -> CyclicReduction:
    w = reduce(word)
    i, j = 0, len(w) - 1
    while i < j and w[i] == w[j] ^ 1:
        i += 1
        j -= 1
    # w = w[:i] * core * w[j+1:], and w[j+1:] is the inverse of w[:i]
    return CyclicReduction(w[i : j + 1], w[j + 1 :])


def rotations(word: Sequence[int]) -> list[Word]:
    """Distinct cyclic permutations, in order of increasing shift."""
    w = tuple(word)
    seen: list[Word] = []
    for i in range(max(len(w), 1)):
        r = w[i:] + w[:i]
        if r in seen:
            break
        seen.append(r)
    return seen


def conj_canonical(word: Sequence[int]) -> Word:
    """Shortlex-least rotation of the cyclic core: one word per conjugacy class."""
    core = cyclic_reduce(word).core
    return min(rotations(core), key=shortlex_key)


def conjugacy_test(u: Sequence[int], v: Sequence[int]) -> Word | None:
    """A reduced ``z`` with ``z^-1 u z = v``, or ``None`` if not conjugate."""
    cu, cv = cyclic_reduce(u), cyclic_reduce(v)
    if len(cu.core) != len(cv.core):
        return None
    n = len(cu.core)
    for i in range(max(n, 1)):
        # rotating core_u left by i is conjugation by its first i letters
        if cu.core[i:] + cu.core[:i] == cv.core:
            return multiply(invert_word(cu.conjugator), cu.core[:i], cv.conjugator)
    return None


def primitive_root(word: Sequence[int]) -> Word:
    """The ``r`` with ``word = r^k`` and ``k`` maximal (``()`` for the identity)."""
    cr = cyclic_reduce(word)
    core = cr.core
    n = len(core)
    for p in range(1, n + 1):
        if n % p == 0 and core[:p] * (n // p) == core:
            return conjugate(core[:p], cr.conjugator)
    return ()
