"""Text syntaxes: regular expressions over a-z/A-Z and the automaton format.

Automaton format, one declaration per line (``#`` starts a comment)::

    states: 3
    initial: 0
    final: 2
    trans: 0 a 1
    trans: 1 B 2
"""

from __future__ import annotations

from pathlib import Path

from .automata import Alphabet, Automaton, Dfa, Nfa, NfaBuilder


class RegexSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class AutomatonFormatError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class _RegexParser:
    # grammar:  alt := cat ('|' cat)* ; cat := rep* ; rep := atom ('*'|'+'|'?')*
    #           atom := letter | '1' | '(' alt ')'

    def __init__(self, text: str, alphabet: Alphabet):
        self.text = text
        self.pos = 0
        self.alphabet = alphabet
        self.b = NfaBuilder(alphabet)

    def peek(self) -> str | None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else None

    def parse(self) -> Nfa:
        start, end = self.alt()
        if self.peek() is not None:
            raise RegexSyntaxError(f"unexpected {self.text[self.pos]!r}", self.pos)
        self.b.initial.add(start)
        self.b.finals.add(end)
        return self.b.build()

    def alt(self) -> tuple[int, int]:
        branches = [self.cat()]
        while self.peek() == "|":
            self.pos += 1
            branches.append(self.cat())
        if len(branches) == 1:
            return branches[0]
        s, e = self.b.new_state(), self.b.new_state()
        for bs, be in branches:
            self.b.add_eps(s, bs)
            self.b.add_eps(be, e)
        return s, e

    def cat(self) -> tuple[int, int]:
        s = e = self.b.new_state()
        while (ch := self.peek()) is not None and ch not in "|)":
            fs, fe = self.rep()
            self.b.add_eps(e, fs)
            e = fe
        return s, e

    def rep(self) -> tuple[int, int]:
        s, e = self.atom()
        while (ch := self.peek()) is not None and ch in "*+?":
            self.pos += 1
            ns, ne = self.b.new_state(), self.b.new_state()
            self.b.add_eps(ns, s)
            self.b.add_eps(e, ne)
            if ch in "*?":
                self.b.add_eps(ns, ne)
            if ch in "*+":
                self.b.add_eps(e, s)
            s, e = ns, ne
        return s, e

    def atom(self) -> tuple[int, int]:
        ch = self.peek()
        at = self.pos
        if ch is None:
            raise RegexSyntaxError("unexpected end of expression", at)
        if ch == "(":
            self.pos += 1
            inner = self.alt()
            if self.peek() != ")":
                raise RegexSyntaxError("missing ')'", self.pos)
            self.pos += 1
            return inner
        if ch == "1":
            self.pos += 1
            s = self.b.new_state()
            return s, s
        if ch.isascii() and ch.isalpha():
            self.pos += 1
            try:
                x = self.alphabet.letter(ch)
            except ValueError as exc:
                raise RegexSyntaxError(str(exc), at) from None
            s, e = self.b.new_state(), self.b.new_state()
            self.b.add(s, x, e)
            return s, e
        raise RegexSyntaxError(f"unexpected {ch!r}", at)


def parse_regex(expr: str, alphabet: Alphabet) -> Nfa:
    """Regular expression to an epsilon-free Nfa.

    >>> a = parse_regex("(ab)*", Alphabet(2))
    >>> a.accepts(Alphabet(2).parse("abab")), a.accepts(Alphabet(2).parse("a"))
    (True, False)
    """
    return _RegexParser(expr, alphabet).parse()


def regex_rank(expr: str) -> int:
    """Smallest rank covering every letter used in ``expr`` (at least 1)."""
    letters = [c.lower() for c in expr if c.isascii() and c.isalpha()]
    return max((ord(c) - ord("a") + 1 for c in letters), default=1)


def parse_automaton(text: str, alphabet: Alphabet) -> Nfa:
    states = None
    initial: list[int] = []
    finals: list[int] = []
    trans: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise AutomatonFormatError(f"expected 'key: value', got {line!r}", lineno)
        key, fields = key.strip(), rest.split()
        try:
            if key == "states":
                if len(fields) != 1:
                    raise ValueError("states takes one integer")
                states = int(fields[0])
            elif key == "initial":
                initial.extend(int(f) for f in fields)
            elif key == "final":
                finals.extend(int(f) for f in fields)
            elif key == "trans":
                if len(fields) != 3:
                    raise ValueError("trans takes 'p x q'")
                p, sym, q = fields
                trans.append((int(p), alphabet.letter(sym), int(q)))
            else:
                raise ValueError(f"unknown declaration {key!r}")
        except ValueError as exc:
            raise AutomatonFormatError(str(exc), lineno) from None
        if states is not None:
            for s in (*initial, *finals, *(t for p, _, q in trans for t in (p, q))):
                if not 0 <= s < states:
                    raise AutomatonFormatError(f"state {s} out of range (states: {states})", lineno)
    if states is None:
        raise AutomatonFormatError("missing 'states:' declaration", 0)
    if not initial:
        raise AutomatonFormatError("missing 'initial:' declaration", 0)
    return Nfa.from_transitions(alphabet, states, initial, finals, trans)


def automaton_rank(text: str) -> int:
    rank = 1
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line.startswith("trans"):
            fields = line.partition(":")[2].split()
            if len(fields) == 3 and fields[1].isalpha():
                rank = max(rank, ord(fields[1].lower()) - ord("a") + 1)
    return rank


def dump_automaton(a: Automaton) -> str:
    if isinstance(a, Dfa):
        initial = [a.initial]
    else:
        initial = sorted(a.initial)
    lines = [
        f"states: {a.state_count}",
        "initial: " + " ".join(map(str, initial)),
        "final: " + " ".join(map(str, sorted(a.finals))),
    ]
    for p, x, q in a.transitions:
        lines.append(f"trans: {p} {a.alphabet.symbol(x)} {q}")
    return "\n".join(lines) + "\n"


def load_language(spec: str, alphabet: Alphabet) -> Nfa:
    """A language argument is an automaton file if such a file exists, else a regex."""
    path = Path(spec)
    if path.is_file():
        return parse_automaton(path.read_text(), alphabet)
    return parse_regex(spec, alphabet)


def language_rank(spec: str) -> int:
    path = Path(spec)
    if path.is_file():
        return automaton_rank(path.read_text())
    return regex_rank(spec)
