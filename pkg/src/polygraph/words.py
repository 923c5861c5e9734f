"""Zigzag words: formal composable strings of signed generator letters.

A generator ``a : x -> y`` can be traversed forwards (written ``a``) or
backwards (written ``a'``).  A word is a finite sequence of such signed
letters whose endpoints chain up, together with its overall source and
target 0-cells.  Nothing is simplified implicitly: ``a a'`` is a perfectly
good word of length 2, distinct from the empty word at ``x``.  Free
reduction (cancelling adjacent ``a a'`` / ``a' a`` pairs) is a separate,
explicit operation.

Word values are immutable; every operation returns a new word.

Text syntax, used in presentation files and on the command line::

    word := "1" | term (ws term)*
    term := ident | ident "'" | ident "^" int

``a b' a^2`` denotes a+ b- a+ a+, ``a^-2`` denotes a- a-, ``a^0`` denotes
nothing, and ``1`` (or the empty string) denotes an identity word.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import EndpointMismatch, ParseError, SourceSpan, UnknownGenerator

__all__ = [
    "Letter",
    "Word",
    "parse_word",
    "format_word",
    "IDENT_RE",
]

# Identifiers for cells at every level: a letter, then letters/digits/underscores.
IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")

# Endpoint map type: generator name -> (source 0-cell, target 0-cell).
GenMap = Mapping[str, tuple[str, str]]


@dataclass(frozen=True)
class Letter:
    """One signed occurrence of a generator: ``sign`` is +1 or -1."""

    gen: str
    sign: int

    def inverse(self) -> "Letter":
        return Letter(self.gen, -self.sign)

    def endpoints(self, gens: GenMap) -> tuple[str, str]:
        """Source and target of this letter, given the generator endpoints."""
        if self.gen not in gens:
            raise UnknownGenerator(f"unknown generator {self.gen!r}")
        src, tgt = gens[self.gen]
        return (src, tgt) if self.sign > 0 else (tgt, src)

    def __str__(self) -> str:
        return self.gen if self.sign > 0 else self.gen + "'"


@dataclass(frozen=True)
class Word:
    """An immutable zigzag word with explicit source and target 0-cells."""

    letters: tuple[Letter, ...]
    src: str
    tgt: str

    @staticmethod
    def identity(at: str) -> "Word":
        """The empty word sitting at the 0-cell ``at``."""
        return Word((), at, at)

    @staticmethod
    def from_letters(letters, gens: GenMap, at: str | None = None) -> "Word":
        """Build a word from signed letters, checking that endpoints chain.

        ``at`` fixes the basepoint of an empty word; it is required there and
        ignored otherwise.
        """
        letters = tuple(letters)
        if not letters:
            if at is None:
                raise EndpointMismatch("an empty word needs an explicit 0-cell")
            return Word((), at, at)
        first_src, cursor = letters[0].endpoints(gens)
        for letter in letters[1:]:
            lsrc, ltgt = letter.endpoints(gens)
            if lsrc != cursor:
                raise EndpointMismatch(
                    f"letter {letter} starts at {lsrc!r} but the word is at {cursor!r}"
                )
            cursor = ltgt
        return Word(letters, first_src, cursor)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def reduce(self) -> "Word":
        """Freely reduce: cancel adjacent mutually-inverse letters, repeatedly.

        One stack pass suffices: each incoming letter either cancels the top
        of the stack or is pushed.  The result has no adjacent cancelling
        pair, and source/target are unchanged.
        """
        stack: list[Letter] = []
        for letter in self.letters:
            if stack and stack[-1].gen == letter.gen and stack[-1].sign == -letter.sign:
                stack.pop()
            else:
                stack.append(letter)
        return Word(tuple(stack), self.src, self.tgt)

    def concat(self, other: "Word") -> "Word":
        """Glue words end to start; raises EndpointMismatch if they don't meet."""
        if self.tgt != other.src:
            raise EndpointMismatch(
                f"cannot compose: word ends at {self.tgt!r}, next starts at {other.src!r}"
            )
        return Word(self.letters + other.letters, self.src, other.tgt)

    def invert(self) -> "Word":
        """Reverse the letter order and flip every sign; swaps src and tgt."""
        return Word(
            tuple(letter.inverse() for letter in reversed(self.letters)),
            self.tgt,
            self.src,
        )

    def __mul__(self, other: "Word") -> "Word":
        return self.concat(other)

    def __invert__(self) -> "Word":
        return self.invert()

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r}, {self.src!r} -> {self.tgt!r})"


def format_word(word: Word) -> str:
    """Render a word in text syntax; the empty word renders as ``1``.

    Runs of the same signed letter collapse to powers, so the output is
    ``a^2 b' c`` rather than ``a a b' c``; parse_word inverts this exactly.
    """
    if not word.letters:
        return "1"
    parts: list[str] = []
    i = 0
    letters = word.letters
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        run, letter = j - i, letters[i]
        if run == 1:
            parts.append(str(letter))
        else:
            parts.append(f"{letter.gen}^{run if letter.sign > 0 else -run}")
        i = j
    return " ".join(parts)


_TERM_RE = re.compile(
    r"(?P<ident>[A-Za-z][A-Za-z0-9_]*)(?:(?P<prime>')|\^(?P<exp>-?\d+))?$"
)


def parse_word(
    text: str,
    gens: GenMap,
    at: str | None = None,
    line: int = 1,
    column: int = 1,
) -> Word:
    """Parse word text syntax into a Word over the given generators.

    ``at`` supplies the 0-cell of an identity word ("1" or empty text);
    ``line``/``column`` seed error locations when the text is embedded in a
    larger file.
    """
    tokens = text.split()
    if not tokens or tokens == ["1"]:
        if at is None:
            raise ParseError(
                "identity word needs a 0-cell from context", SourceSpan(line, column)
            )
        return Word.identity(at)
    letters: list[Letter] = []
    for token in tokens:
        match = _TERM_RE.match(token)
        if match is None:
            raise ParseError(
                f"bad word term {token!r}", SourceSpan(line, column, len(token))
            )
        name = match.group("ident")
        if name not in gens:
            raise ParseError(
                f"unknown generator {name!r}", SourceSpan(line, column, len(name))
            )
        if match.group("prime"):
            letters.append(Letter(name, -1))
        elif match.group("exp") is not None:
            exp = int(match.group("exp"))
            sign = 1 if exp > 0 else -1
            letters.extend(Letter(name, sign) for _ in range(abs(exp)))
        else:
            letters.append(Letter(name, 1))
    try:
        return Word.from_letters(letters, gens, at=at)
    except EndpointMismatch as exc:
        raise ParseError(str(exc), SourceSpan(line, column)) from exc
