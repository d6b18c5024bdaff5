"""Regular languages of cyclically reduced conjugates in free groups.

``ConjGeo(U, V)`` is the set of cyclically reduced words representing some
``v^-1 u v`` with ``u`` in ``U`` and ``v`` in ``V``.  Because geodesics in a
free group are unique, the minimal-length shortlex variant coincides with it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .automata import (
    DEAD,
    Alphabet,
    Dfa,
    NfaBuilder,
    Word,
    contains_empty_word,
    cyc_closure,
    difference,
    empty_dfa,
    enumerate_words,
    intersection,
    invert,
    is_empty,
    minimize,
    prefixed_dfa,
    shortest_word,
    state_slice,
    suffixed_dfa,
    union,
    words_nfa,
    concat,
)
from .benois import RationalSubset, reduced_words_dfa
from .words import conj_canonical


class ReducedPairError(ValueError):
    """Raised when a product of reduced languages admits a cancellation."""

    def __init__(self, message: str, left: Word, right: Word):
        super().__init__(message)
        self.left = left
        self.right = right


@dataclass(frozen=True)
class ConjLangResult:
    conjgeo: Dfa
    conjminlensl: Dfa
    provenance: str


@lru_cache(maxsize=None)
def cycgeo_all(alphabet: Alphabet) -> Dfa:
    """Cyclically reduced words (state remembers first and last letter)."""
    size = alphabet.size
    index = lambda first, last: 1 + first * size + last  # noqa: E731
    rows = [tuple(index(x, x) for x in alphabet.letters)]
    finals = {0}
    for first in alphabet.letters:
        for last in alphabet.letters:
            rows.append(tuple(DEAD if y == last ^ 1 else index(first, y) for y in alphabet.letters))
            if last != first ^ 1:
                finals.add(index(first, last))
    return minimize(Dfa(alphabet, len(rows), 0, frozenset(finals), tuple(rows)))


def perm_language(k: Dfa, l: Dfa, side: str = "left") -> Dfa:
    """Permutations of words of ``k`` by words of ``l``.

    ``left``:  ``{u l : l in L, l u in K}``
    ``right``: ``{l^-1 u : l^-1 in L^-1, u l^-1 in K}``
    both as unions of state slices of the minimal automaton of ``K``.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    k = minimize(k)
    lang = minimize(l) if side == "left" else minimize(invert(l))
    parts = []
    for p in range(k.state_count):
        head = state_slice(k, {k.initial}, {p})
        tail = state_slice(k, {p}, k.finals)
        if side == "left":
            parts.append(concat(tail, intersection(head, lang)))
        else:
            parts.append(concat(intersection(tail, lang), head))
    return union(*parts)


def cancelling_pair(left: Dfa, right: Dfa) -> tuple[Word, Word] | None:
    """Shortest witnesses ``(u, v)`` with ``u`` in ``left``, ``v`` in ``right`` and ``uv`` not reduced."""
    alphabet = left.alphabet
    for x in alphabet.letters:
        u = shortest_word(intersection(left, suffixed_dfa(alphabet, x)))
        if u is None:
            continue
        v = shortest_word(intersection(right, prefixed_dfa(alphabet, x ^ 1)))
        if v is not None:
            return u, v
    return None


def _peeled_conjugates(k: Dfa, l: Dfa) -> Dfa:
    """``ConjGeo(K, L)`` for reduced languages with ``KL`` reduced.

    When ``l`` in ``L`` starts with a nontrivial ``k`` in ``K``, conjugating by
    ``l`` equals conjugating by ``k^-1 l``.  Peeling copies of ``k`` off ``l``
    is tracked by the run of ``k`` through the automaton of ``L``: each stage
    restricts ``K`` to words moving ``L``'s automaton from ``s_i`` to
    ``s_i+1`` and replaces ``L`` by the slice starting at ``s_i+1``.  A stage
    revisiting a state already on its path is subsumed by the earlier one.
    """
    alphabet = k.alphabet
    b = minimize(l)
    if is_empty(k) or is_empty(b):
        return empty_dfa(alphabet)
    parts = []
    stack = [((b.initial,), minimize(k))]
    while stack:
        path, kj = stack.pop()
        s = path[-1]
        parts.append(perm_language(kj, state_slice(b, {s}, b.finals), "left"))
        for nxt in range(b.state_count):
            if nxt in path:
                continue
            narrowed = intersection(kj, state_slice(b, {s}, {nxt}))
            if not is_empty(narrowed):
                stack.append((path + (nxt,), narrowed))
    result = intersection(union(*parts), cycgeo_all(alphabet))
    if contains_empty_word(k):
        result = union(result, words_nfa(alphabet, [()]))
    return result


def reduced_pair_conjugates(k: Dfa, l: Dfa, side: str) -> Dfa:
    """``ConjGeo(K, L)`` when ``KL`` (``left``) or ``L^-1 K`` (``right``) is reduced."""
    if side == "left":
        return _peeled_conjugates(k, l)
    # ConjGeo(K, L) = ConjGeo(K^-1, L)^-1, and L^-1 K reduced <=> K^-1 L reduced
    return minimize(invert(_peeled_conjugates(minimize(invert(k)), l)))


def reduced_side(u: RationalSubset, v: RationalSubset) -> str | None:
    if cancelling_pair(u.reduced, v.reduced) is None:
        return "left"
    if cancelling_pair(minimize(invert(v.reduced)), u.reduced) is None:
        return "right"
    return None


def _result(conjgeo: Dfa, provenance: str) -> ConjLangResult:
    conjgeo = minimize(conjgeo)
    return ConjLangResult(conjgeo, conjminlensl_from(conjgeo), provenance)


def conjminlensl_from(conjgeo: Dfa) -> Dfa:
    # shortlex normal forms of a free group are exactly the reduced words
    return intersection(conjgeo, reduced_words_dfa(conjgeo.alphabet))


def conjgeo_reduced_pair(u: RationalSubset, v: RationalSubset, side: str | None = None) -> ConjLangResult:
    """ConjGeo(U, V) when ``UV`` (side ``left``) or ``V^-1 U`` (side ``right``) is reduced.

    With ``side=None`` the applicable side is detected.  Raises
    :class:`ReducedPairError` naming a cancelling pair otherwise.
    """
    a = u.alphabet
    if side is None:
        side = reduced_side(u, v)
        if side is None:
            left, right = cancelling_pair(u.reduced, v.reduced)
            raise ReducedPairError(
                f"neither UV nor V^-1U is reduced: {a.format(left)} . {a.format(right)} cancels",
                left,
                right,
            )
    elif side == "left":
        bad = cancelling_pair(u.reduced, v.reduced)
        if bad is not None:
            raise ReducedPairError(
                f"UV is not reduced: {a.format(bad[0])} . {a.format(bad[1])} cancels", *bad
            )
    elif side == "right":
        bad = cancelling_pair(minimize(invert(v.reduced)), u.reduced)
        if bad is not None:
            raise ReducedPairError(
                f"V^-1U is not reduced: {a.format(bad[0])} . {a.format(bad[1])} cancels", *bad
            )
    else:
        raise ValueError(f"side must be 'left', 'right' or None, got {side!r}")
    return _result(reduced_pair_conjugates(u.reduced, v.reduced, side), f"reduced-pair:{side}")


def _triples(conjugated: Dfa, conjugators: Dfa) -> set[tuple[int, int, int]]:
    """States ``(q, p', q')`` joined by a common word ``x``.

    ``x`` leads the conjugator automaton from its start to ``q`` and the
    conjugated automaton from its start to ``p'``, while ``x^-1`` leads the
    conjugated automaton from ``q'`` to a final state.
    """
    a, k = conjugators, conjugated
    preds: list[list[list[int]]] = [[[] for _ in k.alphabet.letters] for _ in range(k.state_count)]
    for p, x, q in k.transitions:
        preds[q][x].append(p)
    start = [(a.initial, k.initial, t) for t in k.finals]
    seen = set(start)
    queue = deque(start)
    while queue:
        q, p, s = queue.popleft()
        for x in k.alphabet.letters:
            q2, p2 = a.delta[q][x], k.delta[p][x]
            if q2 == DEAD or p2 == DEAD:
                continue
            for s2 in preds[s][x ^ 1]:
                t = (q2, p2, s2)
                if t not in seen:
                    seen.add(t)
                    queue.append(t)
    return seen


def conjgeo_general(u: RationalSubset, v: RationalSubset) -> ConjLangResult:
    """ConjGeo(U, V) for arbitrary rational ``U`` (conjugated) and ``V`` (conjugators).

    Every ``k`` in U-bar and conjugator ``c`` in V-bar factor as
    ``k = x v2 x^-1`` and ``c = x w`` with ``v2`` nonempty, so that either
    ``v2 w`` is reduced (``v2`` ends in some ``a``, ``w`` does not start with
    ``a^-1``) or ``w^-1 v2`` is reduced (``v2`` starts with ``a``, ``w`` does
    not).  Each such piece is a reduced-pair instance on state slices; the
    triples of states realizing a common ``x`` come from :func:`_triples`.
    """
    alphabet = u.alphabet
    k, c = u.reduced, v.reduced
    parts = []
    if contains_empty_word(k) and not is_empty(c):
        parts.append(words_nfa(alphabet, [()]))
    by_slice: dict[tuple[int, int], set[int]] = {}
    for q, p2, q2 in _triples(k, c):
        by_slice.setdefault((p2, q2), set()).add(q)
    for (p2, q2), qs in sorted(by_slice.items()):
        middle = minimize(state_slice(k, {p2}, {q2}))
        tails = minimize(state_slice(c, qs, c.finals))
        for x in alphabet.letters:
            ends = intersection(middle, suffixed_dfa(alphabet, x))
            if not is_empty(ends):
                w = difference(tails, prefixed_dfa(alphabet, x ^ 1))
                if not is_empty(w):
                    parts.append(reduced_pair_conjugates(ends, w, "left"))
            starts = intersection(middle, prefixed_dfa(alphabet, x))
            if not is_empty(starts):
                w = difference(tails, prefixed_dfa(alphabet, x))
                if not is_empty(w):
                    parts.append(reduced_pair_conjugates(starts, w, "right"))
    conjgeo = union(*parts) if parts else empty_dfa(alphabet)
    return _result(conjgeo, "general")


def cycred_closure(reduced: Dfa) -> Dfa:
    """Close a reduced language under stripping ``x w x^-1 -> w``.

    Languages reachable by stripping are slices ``L(p, F)`` of the automaton;
    stripping ``x`` sends ``(p, F)`` to ``(delta(p, x), {s : delta(s, x^-1) in F})``.
    """
    d = minimize(reduced)
    alphabet = d.alphabet
    start = (d.initial, d.finals)
    seen = {start}
    queue = deque([start])
    while queue:
        p, finals = queue.popleft()
        for x in alphabet.letters:
            p2 = d.delta[p][x]
            if p2 == DEAD:
                continue
            f2 = frozenset(s for s in range(d.state_count) if d.delta[s][x ^ 1] in finals)
            if f2 and (p2, f2) not in seen:
                seen.add((p2, f2))
                queue.append((p2, f2))
    b = NfaBuilder(alphabet)
    for p, finals in seen:
        ids = b.embed(d)
        b.initial.add(ids[p])
        b.finals.update(ids[f] for f in finals)
    return minimize(b.build())


def conjgeo_unconstrained(u: RationalSubset) -> ConjLangResult:
    """ConjGeo(U) = ConjGeo(U, F): rotations of the cyclic cores of U-bar."""
    alphabet = u.alphabet
    cores = intersection(cycred_closure(u.reduced), cycgeo_all(alphabet))
    return _result(cyc_closure(cores), "cycred-closure")


def conjminlensl(u: RationalSubset, v: RationalSubset | None = None) -> Dfa:
    if v is None:
        return conjgeo_unconstrained(u).conjminlensl
    return conjgeo_general(u, v).conjminlensl


def conjsl_enum(u: RationalSubset, max_len: int) -> list[Word]:
    """Shortlex-least representative of each class meeting ``U``, up to ``max_len``."""
    lang = conjgeo_unconstrained(u).conjgeo
    return [w for w in enumerate_words(lang, max_len) if conj_canonical(w) == w]
