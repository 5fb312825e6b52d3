"""Braid words, their permutations, and the full twist.

Text format::

    m=3: s1 s2^-1            letters, optional integer exponent
    m=3: (s1 s2^-1)^4        parenthesised groups with an exponent
    m=3: 1:1 2:-2            power blocks ``i:c`` meaning sigma_i^(c*p)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .errors import BraidSyntaxError

Letter = Tuple[int, int]

_HEADER = re.compile(r"\s*m\s*=\s*(-?\d+)\s*:")
_TOKEN = re.compile(r"\s*(?:(?P<gen>s(?P<idx>\d+))|(?P<open>\()|(?P<close>\))|(?P<pow>\^\s*(?P<exp>[+-]?\d+))|(?P<block>(?P<bi>\d+)\s*:\s*(?P<bc>[+-]?\d+)))")


@dataclass(frozen=True)
class BraidWord:
    degree: int
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"braid degree must be positive, got {self.degree}")
        letters = tuple((int(i), int(e)) for i, e in self.letters)
        for i, e in letters:
            if not 1 <= i <= self.degree - 1:
                raise ValueError(f"generator index {i} outside [1, {self.degree - 1}]")
            if e not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {e}")
        object.__setattr__(self, "letters", letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.degree != self.degree:
            raise ValueError("cannot concatenate braids of different degree")
        return BraidWord(self.degree, self.letters + other.letters)

    def __pow__(self, n: int) -> "BraidWord":
        base = self if n >= 0 else self.inverse()
        return BraidWord(self.degree, base.letters * abs(n))

    def inverse(self) -> "BraidWord":
        return BraidWord(self.degree, tuple((i, -e) for i, e in reversed(self.letters)))

    def with_degree(self, m: int) -> "BraidWord":
        """Same letters viewed in the braid group on ``m >= degree`` strands."""
        return BraidWord(m, self.letters)

    def stabilized(self, sign: int = 1) -> "BraidWord":
        """Markov stabilization: add a strand and append sigma_m^(+-1)."""
        m = self.degree
        return BraidWord(m + 1, self.letters + ((m, sign),))

    def __str__(self):
        return format_braid_word(self)


@dataclass(frozen=True)
class PowerBlockWord:
    """A word in the subgroup generated by sigma_i^p, kept in block form.

    Each block ``(i, c)`` stands for sigma_i^(c*p).
    """

    degree: int
    blocks: Tuple[Tuple[int, int], ...]
    p: int

    def __post_init__(self):
        if self.degree < 2:
            raise ValueError("a power-block word needs at least two strands")
        blocks = tuple((int(i), int(c)) for i, c in self.blocks)
        for i, c in blocks:
            if not 1 <= i <= self.degree - 1:
                raise ValueError(f"generator index {i} outside [1, {self.degree - 1}]")
            if c == 0:
                raise ValueError("block multiples must be nonzero")
        object.__setattr__(self, "blocks", blocks)

    def expand(self) -> BraidWord:
        letters: List[Letter] = []
        for i, c in self.blocks:
            sign = 1 if c > 0 else -1
            letters.extend([(i, sign)] * (abs(c) * self.p))
        return BraidWord(self.degree, tuple(letters))

    def __str__(self):
        body = " ".join(f"{i}:{c}" for i, c in self.blocks)
        return f"m={self.degree}: {body}".rstrip()


@dataclass(frozen=True)
class Permutation:
    """``images[j-1]`` is the final position of the strand starting at ``j``."""

    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls(tuple(range(1, m + 1)))

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """``self o other``: apply ``other`` first."""
        return Permutation(tuple(self(other(j)) for j in range(1, len(self.images) + 1)))

    def cycles(self) -> List[Tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cyc = []
            j = start
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, len(self.images) + 1))


def permutation(b: BraidWord) -> Permutation:
    # pos[s] = current position of the strand that started at s
    pos = list(range(b.degree))
    where = list(range(b.degree))  # where[q] = strand currently at position q
    for i, _ in b.letters:
        a, c = where[i - 1], where[i]
        where[i - 1], where[i] = c, a
        pos[a], pos[c] = i, i - 1
    return Permutation(tuple(q + 1 for q in pos))


def closure_components(b: BraidWord) -> int:
    """Number of components of the closed braid."""
    return len(permutation(b).cycles())


def is_knot(b: BraidWord) -> bool:
    return closure_components(b) == 1


def exponent_sums(b: BraidWord) -> Tuple[int, ...]:
    sums = [0] * (b.degree - 1)
    for i, e in b.letters:
        sums[i - 1] += e
    return tuple(sums)


def full_twist(m: int, n: int = 1) -> BraidWord:
    """Word for Delta^n, Delta = (s1 s2 ... s_{m-1})^m."""
    if m < 1:
        raise ValueError("degree must be positive")
    delta = BraidWord(m, tuple((i, 1) for i in range(1, m)) * m)
    return delta ** n


def delta_order(m: int, p: int) -> int:
    """The exponent l with A_Delta^l = I on p-colorings: 2 for odd m, p for even m."""
    return 2 if m % 2 else p


# -- text format -----------------------------------------------------------


def _split_header(text: str) -> Tuple[int, int]:
    mh = _HEADER.match(text)
    if not mh:
        raise BraidSyntaxError("expected header 'm=<int>:'", 0)
    m = int(mh.group(1))
    if m < 1:
        raise BraidSyntaxError(f"degree must be positive, got {m}", mh.start(1))
    return m, mh.end()


def _tokenize(text: str, start: int) -> List[Tuple[str, object, int]]:
    out = []
    pos = start
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            return out
        mt = _TOKEN.match(text, pos)
        if not mt:
            raise BraidSyntaxError(f"unexpected character {text[pos]!r}", pos)
        if mt.group("gen"):
            out.append(("gen", int(mt.group("idx")), pos))
        elif mt.group("open"):
            out.append(("open", None, pos))
        elif mt.group("close"):
            out.append(("close", None, pos))
        elif mt.group("pow"):
            out.append(("pow", int(mt.group("exp")), pos))
        else:
            out.append(("block", (int(mt.group("bi")), int(mt.group("bc"))), pos))
        pos = mt.end()


def _power(letters: List[Letter], k: int) -> List[Letter]:
    if k < 0:
        letters = [(i, -e) for i, e in reversed(letters)]
    return letters * abs(k)


class _WordParser:
    def __init__(self, tokens, m: int, end: int):
        self.tokens = tokens
        self.m = m
        self.end = end
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def terms(self, nested: bool) -> List[Letter]:
        letters: List[Letter] = []
        while True:
            tok = self.peek()
            if tok is None:
                if nested:
                    raise BraidSyntaxError("unclosed '('", self.end)
                return letters
            kind, value, pos = tok
            if kind == "close":
                if not nested:
                    raise BraidSyntaxError("unmatched ')'", pos)
                return letters
            self.i += 1
            if kind == "gen":
                if not 1 <= value <= self.m - 1:
                    raise BraidSyntaxError(f"generator s{value} outside [1, {self.m - 1}]", pos)
                term = [(value, 1)]
                if self._at("pow"):
                    term = _power(term, self._take()[1])
            elif kind == "open":
                term = self.terms(nested=True)
                self.i += 1  # the ')'
                if not self._at("pow"):
                    raise BraidSyntaxError("parenthesised group needs an exponent '^k'", pos)
                term = _power(term, self._take()[1])
            elif kind == "pow":
                raise BraidSyntaxError("exponent without a preceding term", pos)
            else:
                raise BraidSyntaxError("block syntax 'i:c' is only valid for power-block input", pos)
            letters.extend(term)

    def _at(self, kind):
        tok = self.peek()
        return tok is not None and tok[0] == kind

    def _take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok


def parse_braid_word(text: str) -> BraidWord:
    """Parse ``m=<int>: <term>*`` into a fully expanded :class:`BraidWord`."""
    m, start = _split_header(text)
    parser = _WordParser(_tokenize(text, start), m, len(text))
    return BraidWord(m, tuple(parser.terms(nested=False)))


def parse_blocks(text: str, p: int) -> PowerBlockWord:
    """Parse ``m=<int>: i:c i:c ...`` into a :class:`PowerBlockWord`."""
    m, start = _split_header(text)
    if m < 2:
        raise BraidSyntaxError("power-block words need m >= 2", 0)
    blocks = []
    for kind, value, pos in _tokenize(text, start):
        if kind != "block":
            raise BraidSyntaxError("expected a block 'i:c'", pos)
        i, c = value
        if not 1 <= i <= m - 1:
            raise BraidSyntaxError(f"generator index {i} outside [1, {m - 1}]", pos)
        if c == 0:
            raise BraidSyntaxError("block multiple must be nonzero", pos)
        blocks.append((i, c))
    return PowerBlockWord(m, tuple(blocks), p)


def format_braid_word(b: BraidWord) -> str:
    """Canonical text: maximal runs of one letter printed as ``s<i>^<k>``."""
    parts = []
    runs: List[List[int]] = []
    for i, e in b.letters:
        if runs and runs[-1][0] == i and (runs[-1][1] > 0) == (e > 0):
            runs[-1][1] += e
        else:
            runs.append([i, e])
    for i, k in runs:
        parts.append(f"s{i}" if k == 1 else f"s{i}^{k}")
    return f"m={b.degree}: " + " ".join(parts) if parts else f"m={b.degree}:"
