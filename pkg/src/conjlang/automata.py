"""Finite automata over an involutive alphabet.

Letters are small integers: generator ``i`` is ``2*i`` and its inverse is
``2*i + 1``, so the involution is ``x ^ 1``.  Automata are immutable; every
operation returns a new object.  ``Dfa`` transition tables are partial, with
``-1`` standing in for the implicit dead state.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence, Union

Word = tuple[int, ...]

DEAD = -1


@dataclass(frozen=True)
class Alphabet:
    """Generators ``a, b, c, ...`` and their inverses ``A, B, C, ...``."""

    rank: int

    def __post_init__(self):
        if not 1 <= self.rank <= 26:
            raise ValueError(f"rank must be between 1 and 26, got {self.rank}")

    @property
    def size(self) -> int:
        return 2 * self.rank

    @property
    def letters(self) -> range:
        return range(2 * self.rank)

    @staticmethod
    def inverse(x: int) -> int:
        return x ^ 1

    def symbol(self, x: int) -> str:
        c = chr(ord("a") + (x >> 1))
        return c.upper() if x & 1 else c

    def letter(self, ch: str) -> int:
        if len(ch) != 1 or not ch.isascii() or not ch.isalpha():
            raise ValueError(f"not a letter symbol: {ch!r}")
        x = 2 * (ord(ch.lower()) - ord("a")) + (1 if ch.isupper() else 0)
        if x >= self.size:
            raise ValueError(f"letter {ch!r} outside alphabet of rank {self.rank}")
        return x

    def parse(self, text: str) -> Word:
        """Parse ``"abA"`` into a word; ``"1"`` and ``""`` are the empty word."""
        text = text.strip()
        if text in ("", "1"):
            return ()
        return tuple(self.letter(ch) for ch in text)

    def format(self, word: Sequence[int]) -> str:
        return "".join(self.symbol(x) for x in word) if word else "1"


def invert_word(word: Sequence[int]) -> Word:
    """Formal inverse: reverse the word and involute every letter."""
    return tuple(x ^ 1 for x in reversed(word))


def shortlex_key(word: Sequence[int]) -> tuple[int, Word]:
    return (len(word), tuple(word))


@dataclass(frozen=True)
class Nfa:
    alphabet: Alphabet
    state_count: int
    initial: frozenset[int]
    finals: frozenset[int]
    # delta[state][letter] -> frozenset of successor states
    delta: tuple[tuple[frozenset[int], ...], ...] = field(repr=False)

    def __post_init__(self):
        n = self.state_count
        if n < 0 or len(self.delta) != n:
            raise ValueError("transition table does not match state_count")
        for s in self.initial | self.finals:
            if not 0 <= s < n:
                raise ValueError(f"state {s} out of range 0..{n - 1}")
        for row in self.delta:
            if len(row) != self.alphabet.size:
                raise ValueError("transition row does not match alphabet size")
            for targets in row:
                if any(not 0 <= t < n for t in targets):
                    raise ValueError("transition target out of range")

    @classmethod
    def from_transitions(
        cls,
        alphabet: Alphabet,
        state_count: int,
        initial: Iterable[int],
        finals: Iterable[int],
        transitions: Iterable[tuple[int, int, int]],
    ) -> Nfa:
        table = [[set() for _ in alphabet.letters] for _ in range(state_count)]
        for p, x, q in transitions:
            if not 0 <= p < state_count or not 0 <= q < state_count:
                raise ValueError(f"transition ({p}, {x}, {q}) uses an invalid state")
            if not 0 <= x < alphabet.size:
                raise ValueError(f"transition ({p}, {x}, {q}) uses a letter outside the alphabet")
            table[p][x].add(q)
        delta = tuple(tuple(frozenset(t) for t in row) for row in table)
        return cls(alphabet, state_count, frozenset(initial), frozenset(finals), delta)

    @property
    def transitions(self) -> Iterator[tuple[int, int, int]]:
        for p, row in enumerate(self.delta):
            for x, targets in enumerate(row):
                for q in sorted(targets):
                    yield p, x, q

    def to_nfa(self) -> Nfa:
        return self

    def step(self, states: Iterable[int], x: int) -> frozenset[int]:
        out: set[int] = set()
        for s in states:
            out |= self.delta[s][x]
        return frozenset(out)

    def accepts(self, word: Sequence[int]) -> bool:
        current = self.initial
        for x in word:
            current = self.step(current, x)
            if not current:
                return False
        return bool(current & self.finals)


@dataclass(frozen=True)
class Dfa:
    alphabet: Alphabet
    state_count: int
    initial: int
    finals: frozenset[int]
    # delta[state][letter] -> state or DEAD
    delta: tuple[tuple[int, ...], ...] = field(repr=False)

    def __post_init__(self):
        n = self.state_count
        if n < 1 or len(self.delta) != n:
            raise ValueError("a Dfa needs at least one state and a matching table")
        if not 0 <= self.initial < n or any(not 0 <= f < n for f in self.finals):
            raise ValueError("initial or final state out of range")
        for row in self.delta:
            if len(row) != self.alphabet.size or any(not DEAD <= t < n for t in row):
                raise ValueError("malformed transition row")

    @property
    def transitions(self) -> Iterator[tuple[int, int, int]]:
        for p, row in enumerate(self.delta):
            for x, q in enumerate(row):
                if q != DEAD:
                    yield p, x, q

    def run(self, word: Sequence[int], start: int | None = None) -> int:
        s = self.initial if start is None else start
        for x in word:
            if s == DEAD:
                return DEAD
            s = self.delta[s][x]
        return s

    def accepts(self, word: Sequence[int]) -> bool:
        return self.run(word) in self.finals

    @cached_property
    def _as_nfa(self) -> Nfa:
        delta = tuple(
            tuple(frozenset() if q == DEAD else frozenset((q,)) for q in row) for row in self.delta
        )
        return Nfa(self.alphabet, self.state_count, frozenset((self.initial,)), self.finals, delta)

    def to_nfa(self) -> Nfa:
        return self._as_nfa


Automaton = Union[Nfa, Dfa]


class NfaBuilder:
    """Mutable scratch automaton with epsilon moves; ``build`` eliminates them."""

    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet
        self.edges: list[list[set[int]]] = []
        self.eps: list[set[int]] = []
        self.initial: set[int] = set()
        self.finals: set[int] = set()

    def new_state(self) -> int:
        self.edges.append([set() for _ in self.alphabet.letters])
        self.eps.append(set())
        return len(self.edges) - 1

    def add(self, p: int, x: int, q: int) -> None:
        self.edges[p][x].add(q)

    def add_eps(self, p: int, q: int) -> None:
        if p != q:
            self.eps[p].add(q)

    def embed(self, a: Automaton) -> list[int]:
        """Copy the states and transitions of ``a``; returns the state map."""
        a = a.to_nfa()
        base = len(self.edges)
        ids = [self.new_state() for _ in range(a.state_count)]
        for p, x, q in a.transitions:
            self.edges[base + p][x].add(base + q)
        return ids

    def build(self) -> Nfa:
        n = len(self.edges)
        closure = _closures(self.eps)
        table = []
        for p in range(n):
            row = []
            for x in self.alphabet.letters:
                targets: set[int] = set()
                for r in closure[p]:
                    targets |= self.edges[r][x]
                row.append(frozenset(targets))
            table.append(tuple(row))
        finals = frozenset(p for p in range(n) if closure[p] & self.finals)
        return trim(Nfa(self.alphabet, n, frozenset(self.initial), finals, tuple(table)))


def _closures(eps: list[set[int]]) -> list[frozenset[int]]:
    out = []
    for p in range(len(eps)):
        seen = {p}
        stack = [p]
        while stack:
            for q in eps[stack.pop()]:
                if q not in seen:
                    seen.add(q)
                    stack.append(q)
        out.append(frozenset(seen))
    return out


# ---------------------------------------------------------------------------
# basic languages


def empty_dfa(alphabet: Alphabet) -> Dfa:
    return Dfa(alphabet, 1, 0, frozenset(), (tuple([DEAD] * alphabet.size),))


def universal_dfa(alphabet: Alphabet) -> Dfa:
    return Dfa(alphabet, 1, 0, frozenset((0,)), (tuple([0] * alphabet.size),))


def words_nfa(alphabet: Alphabet, words: Iterable[Sequence[int]]) -> Nfa:
    """Finite language as a trie-shaped automaton."""
    b = NfaBuilder(alphabet)
    root = b.new_state()
    b.initial.add(root)
    children: dict[tuple[int, int], int] = {}
    for word in words:
        s = root
        for x in word:
            if not 0 <= x < alphabet.size:
                raise ValueError(f"letter {x} outside alphabet of rank {alphabet.rank}")
            nxt = children.get((s, x))
            if nxt is None:
                nxt = b.new_state()
                b.add(s, x, nxt)
                children[(s, x)] = nxt
            s = nxt
        b.finals.add(s)
    return b.build()


def prefixed_dfa(alphabet: Alphabet, letter: int) -> Dfa:
    """All words starting with ``letter``."""
    row0 = [DEAD] * alphabet.size
    row0[letter] = 1
    return Dfa(alphabet, 2, 0, frozenset((1,)), (tuple(row0), tuple([1] * alphabet.size)))


def suffixed_dfa(alphabet: Alphabet, letter: int) -> Dfa:
    """All words ending with ``letter``."""
    row = tuple(1 if x == letter else 0 for x in alphabet.letters)
    return Dfa(alphabet, 2, 0, frozenset((1,)), (row, row))


# ---------------------------------------------------------------------------
# reachability, determinization, minimization


def _check_same_alphabet(*automata: Automaton) -> None:
    ranks = {a.alphabet.rank for a in automata}
    if len(ranks) > 1:
        raise ValueError(f"alphabet mismatch: ranks {sorted(ranks)}")


def _forward(a: Nfa, start: Iterable[int]) -> set[int]:
    seen = set(start)
    stack = list(seen)
    while stack:
        p = stack.pop()
        for targets in a.delta[p]:
            for q in targets:
                if q not in seen:
                    seen.add(q)
                    stack.append(q)
    return seen


def _backward(a: Nfa, targets: Iterable[int]) -> set[int]:
    preds: list[set[int]] = [set() for _ in range(a.state_count)]
    for p, _, q in a.transitions:
        preds[q].add(p)
    seen = set(targets)
    stack = list(seen)
    while stack:
        q = stack.pop()
        for p in preds[q]:
            if p not in seen:
                seen.add(p)
                stack.append(p)
    return seen


def trim(a: Nfa) -> Nfa:
    """Drop states that are unreachable or cannot reach a final state."""
    useful = sorted(_forward(a, a.initial) & _backward(a, a.finals))
    if len(useful) == a.state_count:
        return a
    index = {s: i for i, s in enumerate(useful)}
    table = tuple(
        tuple(frozenset(index[q] for q in a.delta[p][x] if q in index) for x in a.alphabet.letters)
        for p in useful
    )
    return Nfa(
        a.alphabet,
        len(useful),
        frozenset(index[s] for s in a.initial if s in index),
        frozenset(index[s] for s in a.finals if s in index),
        table,
    )


def determinize(a: Automaton) -> Dfa:
    """Subset construction; the empty subset becomes the implicit dead state."""
    if isinstance(a, Dfa):
        return a
    start = a.initial
    index = {start: 0}
    order = [start]
    rows: list[list[int]] = []
    i = 0
    while i < len(order):
        subset = order[i]
        row = []
        for x in a.alphabet.letters:
            nxt = a.step(subset, x)
            if not nxt:
                row.append(DEAD)
                continue
            if nxt not in index:
                index[nxt] = len(order)
                order.append(nxt)
            row.append(index[nxt])
        rows.append(row)
        i += 1
    finals = frozenset(i for i, subset in enumerate(order) if subset & a.finals)
    return Dfa(a.alphabet, len(order), 0, finals, tuple(tuple(r) for r in rows))


def _live_states(d: Dfa) -> set[int]:
    reach = {d.initial}
    stack = [d.initial]
    preds: list[list[int]] = [[] for _ in range(d.state_count)]
    while stack:
        p = stack.pop()
        for q in d.delta[p]:
            if q != DEAD:
                preds[q].append(p)
                if q not in reach:
                    reach.add(q)
                    stack.append(q)
    live = {f for f in d.finals if f in reach}
    stack = list(live)
    while stack:
        for p in preds[stack.pop()]:
            if p not in live:
                live.add(p)
                stack.append(p)
    return live


def minimize(a: Automaton) -> Dfa:
    """Minimal trimmed Dfa, states numbered in BFS order (canonical form).

    Two automata accept the same language iff their minimized forms are
    equal as values.
    """
    d = determinize(a)
    sigma = d.alphabet.letters
    live = _live_states(d)
    if d.initial not in live:
        return empty_dfa(d.alphabet)
    states = sorted(live)
    # renumber live states 0..k-1; index k is the dead state
    pos = {s: i for i, s in enumerate(states)}
    dead = len(states)
    succ = [[pos.get(q, dead) for q in d.delta[s]] for s in states]

    # Moore refinement
    block = [1 if s in d.finals else 0 for s in states] + [-1]
    count = len(set(block))
    while True:
        sigs: dict[tuple, int] = {}
        new_block = [sigs.setdefault((block[i], *[block[j] for j in succ[i]]), len(sigs)) for i in range(dead)]
        new_block.append(-1)
        if len(sigs) + 1 == count:
            block = new_block
            break
        block, count = new_block, len(sigs) + 1

    rep = {}
    for i in range(dead):
        rep.setdefault(block[i], i)
    start = block[pos[d.initial]]
    number = {start: 0}
    queue = deque([start])
    rows = []
    while queue:
        i = rep[queue.popleft()]
        row = []
        for j in succ[i]:
            if j == dead:
                row.append(DEAD)
                continue
            bj = block[j]
            if bj not in number:
                number[bj] = len(number)
                queue.append(bj)
            row.append(number[bj])
        rows.append(tuple(row))
    finals = frozenset(number[block[pos[s]]] for s in states if s in d.finals)
    return Dfa(d.alphabet, len(rows), 0, finals, tuple(rows))


def determinize_minimize(a: Automaton) -> Dfa:
    return minimize(a)


# ---------------------------------------------------------------------------
# boolean and rational operations


def _complete(d: Dfa) -> Dfa:
    if all(q != DEAD for row in d.delta for q in row):
        return d
    sink = d.state_count
    rows = [tuple(sink if q == DEAD else q for q in row) for row in d.delta]
    rows.append(tuple([sink] * d.alphabet.size))
    return Dfa(d.alphabet, sink + 1, d.initial, d.finals, tuple(rows))


def combine(a: Automaton, b: Automaton, op: str) -> Dfa:
    """Product construction for ``union``, ``intersection`` or ``difference``."""
    _check_same_alphabet(a, b)
    if op not in ("union", "intersection", "difference"):
        raise ValueError(f"unknown boolean operation {op!r}")
    da, db = determinize(a), determinize(b)
    if op != "intersection":
        da, db = _complete(da), _complete(db)
    start = (da.initial, db.initial)
    index = {start: 0}
    order = [start]
    rows = []
    i = 0
    while i < len(order):
        p, q = order[i]
        row = []
        for x in da.alphabet.letters:
            nxt = (da.delta[p][x], db.delta[q][x])
            if DEAD in nxt:
                row.append(DEAD)
                continue
            if nxt not in index:
                index[nxt] = len(order)
                order.append(nxt)
            row.append(index[nxt])
        rows.append(tuple(row))
        i += 1
    if op == "intersection":
        keep = lambda p, q: p in da.finals and q in db.finals  # noqa: E731
    elif op == "union":
        keep = lambda p, q: p in da.finals or q in db.finals  # noqa: E731
    else:
        keep = lambda p, q: p in da.finals and q not in db.finals  # noqa: E731
    finals = frozenset(i for i, (p, q) in enumerate(order) if keep(p, q))
    return minimize(Dfa(da.alphabet, len(order), 0, finals, tuple(rows)))


def intersection(a: Automaton, b: Automaton) -> Dfa:
    return combine(a, b, "intersection")


def union(*automata: Automaton) -> Dfa:
    """Union of any number of automata, as a balanced tree of product unions."""
    if not automata:
        raise ValueError("union of nothing needs an alphabet; use empty_dfa")
    _check_same_alphabet(*automata)
    layer = [minimize(a) for a in automata]
    layer = [d for d in layer if d.finals] or layer[:1]
    while len(layer) > 1:
        nxt = [combine(layer[i], layer[i + 1], "union") for i in range(0, len(layer) - 1, 2)]
        if len(layer) % 2:
            nxt.append(layer[-1])
        layer = nxt
    return layer[0]


def difference(a: Automaton, b: Automaton) -> Dfa:
    return combine(a, b, "difference")


def complement(a: Automaton) -> Dfa:
    d = _complete(determinize(a))
    finals = frozenset(range(d.state_count)) - d.finals
    return minimize(Dfa(d.alphabet, d.state_count, d.initial, finals, d.delta))


def rational_op(a: Automaton, b: Automaton | None = None, op: str = "concat") -> Nfa:
    """``concat`` (needs ``b``), ``star``, ``reverse`` or ``invert``."""
    if op == "concat":
        if b is None:
            raise ValueError("concat needs two automata")
        return concat(a, b)
    if op == "star":
        return star(a)
    if op == "reverse":
        return reverse(a)
    if op == "invert":
        return invert(a)
    raise ValueError(f"unknown rational operation {op!r}")


def concat(*automata: Automaton) -> Nfa:
    _check_same_alphabet(*automata)
    b = NfaBuilder(automata[0].alphabet)
    prev_finals: list[int] | None = None
    for a in automata:
        nfa = a.to_nfa()
        ids = b.embed(nfa)
        starts = [ids[s] for s in nfa.initial]
        if prev_finals is None:
            b.initial.update(starts)
        else:
            for f in prev_finals:
                for s in starts:
                    b.add_eps(f, s)
        prev_finals = [ids[s] for s in nfa.finals]
    b.finals.update(prev_finals or ())
    return b.build()


def star(a: Automaton) -> Nfa:
    nfa = a.to_nfa()
    b = NfaBuilder(nfa.alphabet)
    hub = b.new_state()
    ids = b.embed(nfa)
    b.initial.add(hub)
    b.finals.add(hub)
    for s in nfa.initial:
        b.add_eps(hub, ids[s])
    for f in nfa.finals:
        b.add_eps(ids[f], hub)
    return b.build()


def reverse(a: Automaton) -> Nfa:
    nfa = a.to_nfa()
    return Nfa.from_transitions(
        nfa.alphabet,
        nfa.state_count,
        nfa.finals,
        nfa.initial,
        ((q, x, p) for p, x, q in nfa.transitions),
    )


def invert(a: Automaton) -> Nfa:
    """Accepts the formal inverses of the words accepted by ``a``."""
    nfa = a.to_nfa()
    return Nfa.from_transitions(
        nfa.alphabet,
        nfa.state_count,
        nfa.finals,
        nfa.initial,
        ((q, x ^ 1, p) for p, x, q in nfa.transitions),
    )


def homomorphism(a: Automaton, target: Alphabet, images: dict[int, Sequence[int]]) -> Nfa:
    """Replace every transition labelled ``x`` by a path reading ``images[x]``."""
    nfa = a.to_nfa()
    b = NfaBuilder(target)
    ids = [b.new_state() for _ in range(nfa.state_count)]
    b.initial.update(ids[s] for s in nfa.initial)
    b.finals.update(ids[s] for s in nfa.finals)
    for p, x, q in nfa.transitions:
        image = images[x]
        s = ids[p]
        for i, y in enumerate(image):
            nxt = ids[q] if i == len(image) - 1 else b.new_state()
            b.add(s, y, nxt)
            s = nxt
        if not image:
            b.add_eps(ids[p], ids[q])
    return b.build()


def cyc_closure(a: Automaton) -> Dfa:
    """All cyclic permutations ``vu`` of accepted words ``uv``.

    One copy of the minimal automaton per guessed cut state ``m``: read
    ``v`` from ``m`` to a final state, jump to the initial state, then read
    ``u`` back to ``m``.
    """
    nfa = trim(minimize(a).to_nfa())
    b = NfaBuilder(nfa.alphabet)
    for m in range(nfa.state_count):
        first = b.embed(nfa)
        second = b.embed(nfa)
        b.initial.add(first[m])
        b.finals.add(second[m])
        for f in nfa.finals:
            for s in nfa.initial:
                b.add_eps(first[f], second[s])
    return minimize(b.build())


def state_slice(a: Automaton, sources: Iterable[int], targets: Iterable[int]) -> Nfa:
    """Words labelling a path from a state in ``sources`` to one in ``targets``."""
    nfa = a.to_nfa()
    sources, targets = frozenset(sources), frozenset(targets)
    for s in sources | targets:
        if not 0 <= s < nfa.state_count:
            raise ValueError(f"invalid state id {s}")
    return trim(Nfa(nfa.alphabet, nfa.state_count, sources, targets, nfa.delta))


# ---------------------------------------------------------------------------
# queries


def accepts(a: Automaton, word: Sequence[int]) -> bool:
    return a.accepts(word)


def is_empty(a: Automaton) -> bool:
    nfa = a.to_nfa()
    return not (_forward(nfa, nfa.initial) & nfa.finals)


def equivalent(a: Automaton, b: Automaton) -> bool:
    _check_same_alphabet(a, b)
    return minimize(a) == minimize(b)


def contains_empty_word(a: Automaton) -> bool:
    return a.accepts(())


def shortest_word(a: Automaton) -> Word | None:
    """Shortlex-least accepted word, or ``None`` for the empty language."""
    d = minimize(a)
    if not d.finals:
        return None
    parent: dict[int, tuple[int, int]] = {}
    seen = {d.initial}
    queue = deque([d.initial])
    while queue:
        s = queue.popleft()
        if s in d.finals:
            word = []
            while s != d.initial:
                s, x = parent[s]
                word.append(x)
            return tuple(reversed(word))
        for x in d.alphabet.letters:
            q = d.delta[s][x]
            if q != DEAD and q not in seen:
                seen.add(q)
                parent[q] = (s, x)
                queue.append(q)
    return None


def count_words(a: Automaton, max_len: int) -> list[int]:
    """Exact number of accepted words of each length ``0..max_len``.

    Transfer-matrix iteration over the minimal Dfa: paths and words coincide.
    """
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    d = minimize(a)
    vec = [0] * d.state_count
    vec[d.initial] = 1
    counts = []
    for n in range(max_len + 1):
        counts.append(sum(vec[f] for f in d.finals))
        if n == max_len:
            break
        nxt = [0] * d.state_count
        for p, c in enumerate(vec):
            if c:
                for q in d.delta[p]:
                    if q != DEAD:
                        nxt[q] += c
        vec = nxt
    return counts


def enumerate_words(a: Automaton, max_len: int, min_len: int = 0) -> list[Word]:
    """Accepted words of length ``min_len..max_len`` in shortlex order."""
    return list(iter_words(a, max_len, min_len))


def iter_words(a: Automaton, max_len: int, min_len: int = 0) -> Iterator[Word]:
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    d = minimize(a)
    # good[k]: states with an accepted continuation of length exactly k
    good = [set(d.finals)]
    for _ in range(max_len):
        prev = good[-1]
        good.append({p for p in range(d.state_count) if any(q in prev for q in d.delta[p] if q != DEAD)})
    for n in range(min_len, max_len + 1):
        if d.initial not in good[n]:
            continue
        yield from _words_of_length(d, good, n)


def _words_of_length(d: Dfa, good: list[set[int]], n: int) -> Iterator[Word]:
    word: list[int] = []

    def walk(s: int, rest: int) -> Iterator[Word]:
        if rest == 0:
            yield tuple(word)
            return
        for x in d.alphabet.letters:
            q = d.delta[s][x]
            if q != DEAD and q in good[rest - 1]:
                word.append(x)
                yield from walk(q, rest - 1)
                word.pop()

    yield from walk(d.initial, n)


def query(a: Dfa, kind: str, arg=None):
    """Single entry point for the read-only queries."""
    if kind == "accepts":
        return accepts(a, arg)
    if kind == "is_empty":
        return is_empty(a)
    if kind == "equivalent":
        return equivalent(a, arg)
    if kind == "enumerate":
        return enumerate_words(a, arg)
    if kind == "count":
        return count_words(a, arg)
    raise ValueError(f"unknown query {kind!r}")


def first_letters(a: Automaton) -> set[int]:
    """Letters that start some accepted word."""
    nfa = trim(a.to_nfa())
    return {x for s in nfa.initial for x in a.alphabet.letters if nfa.delta[s][x]}


def last_letters(a: Automaton) -> set[int]:
    """Letters that end some accepted word."""
    nfa = trim(a.to_nfa())
    return {x for _, x, q in nfa.transitions if q in nfa.finals}
