"""Alphabets, letters, words, and the basic word operations shared by every
other module: the order-reversing involution theta, supports, increasing
rearrangements and inflation.

Letters are 1-based integers carrying the natural total order; the display
layer maps 1..26 to a..z.  All values are immutable and all operations pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

Letter = int
Word = tuple[int, ...]
LetterSet = frozenset[int]

EMPTY_WORD: Word = ()

# Word-level operations accept alphabets up to this size; monoid enumeration
# enforces much tighter limits of its own.
MAX_ALPHABET = 12

# Canonical inflation exponents double per position; cap the word length so
# the inflated word stays around a million letters.
MAX_INFLATION_LENGTH = 20


@dataclass(frozen=True)
class Alphabet:
    """The totally ordered alphabet {1, ..., n}."""

    n: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ALPHABET:
            raise ValueError(f"alphabet size must be in 1..{MAX_ALPHABET}, got {self.n}")

    @property
    def letters(self) -> range:
        return range(1, self.n + 1)

    def __contains__(self, x: int) -> bool:
        return 1 <= x <= self.n

    def check_letter(self, x: int) -> None:
        if x not in self:
            raise ValueError(f"letter {x!r} outside alphabet of size {self.n}")

    def check_word(self, w: Word) -> None:
        for x in w:
            self.check_letter(x)

    def theta_letter(self, x: int) -> int:
        self.check_letter(x)
        return self.n + 1 - x

    def subsets(self) -> Iterator[LetterSet]:
        """All 2^n subsets of the alphabet, in bitmask order."""
        for mask in range(1 << self.n):
            yield frozenset(i + 1 for i in range(self.n) if mask >> i & 1)

    @property
    def full_set(self) -> LetterSet:
        return frozenset(self.letters)


def theta(w: Word, alphabet: Alphabet) -> Word:
    """Reverse the word and replace each letter x by n+1-x.

    This is an involutive anti-automorphism: theta(uv) = theta(v) theta(u).
    """
    alphabet.check_word(w)
    n = alphabet.n
    return tuple(n + 1 - x for x in reversed(w))


def support(w: Word) -> LetterSet:
    """The set of distinct letters appearing in w."""
    return frozenset(w)


def increasing_rearrangement(w: Word) -> Word:
    """The same multiset of letters, sorted weakly increasing."""
    return tuple(sorted(w))


def inflate(w: Word, exponents: Sequence[int]) -> Word:
    """Repeat the i-th letter of w exponents[i] times, in order."""
    if len(exponents) != len(w):
        raise ValueError(f"need {len(w)} exponents, got {len(exponents)}")
    out: list[int] = []
    for x, e in zip(w, exponents):
        if e < 1:
            raise ValueError(f"inflation exponents must be positive, got {e}")
        out.extend([x] * e)
    return tuple(out)


def canonical_inflation_exponents(length: int) -> tuple[int, ...]:
    """Exponents x_i = 2^(length-i), the minimal solution of
    x_i - sum(x_j for j > i) >= 1 with equality throughout."""
    if length < 1:
        raise ValueError("length must be >= 1")
    if length > MAX_INFLATION_LENGTH:
        raise ValueError(f"inflation length capped at {MAX_INFLATION_LENGTH}")
    return tuple(1 << (length - i) for i in range(1, length + 1))


def shift_down_word(w: Word) -> Word:
    """Send each letter to the one preceding it (all letters must be >= 2)."""
    if any(x <= 1 for x in w):
        raise ValueError("cannot shift down a word containing the smallest letter")
    return tuple(x - 1 for x in w)


def shift_up_word(w: Word) -> Word:
    """Send each letter to the one following it."""
    return tuple(x + 1 for x in w)


def increasing_word(s: LetterSet) -> Word:
    return tuple(sorted(s))


def decreasing_word(s: LetterSet) -> Word:
    return tuple(sorted(s, reverse=True))


# ---------------------------------------------------------------------------
# Text formats.  Words render as lowercase letters without separators
# ("cabd"); the dotted numeric form "3.1.2.4" is accepted on input as well.


def render_letter(x: int) -> str:
    if 1 <= x <= 26:
        return chr(ord("a") + x - 1)
    return str(x)


def render_word(w: Word) -> str:
    if all(1 <= x <= 26 for x in w):
        return "".join(render_letter(x) for x in w)
    return ".".join(str(x) for x in w)


def render_letter_set(s: LetterSet) -> str:
    return "".join(render_letter(x) for x in sorted(s))


def parse_word(text: str) -> Word:
    """Parse "cabd" or dotted numeric "3.1.2.4"; the empty string is the
    empty word."""
    text = text.strip()
    if not text:
        return ()
    if "." in text:
        return tuple(_parse_int_letter(part) for part in text.split("."))
    if text.isdigit():
        return tuple(_parse_int_letter(ch) for ch in text)
    return tuple(_parse_alpha_letter(ch) for ch in text)


def _parse_alpha_letter(ch: str) -> int:
    if len(ch) == 1 and "a" <= ch <= "z":
        return ord(ch) - ord("a") + 1
    raise ValueError(f"bad letter {ch!r}: expected a lowercase letter a-z")


def _parse_int_letter(token: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ValueError(f"bad numeric letter {token!r}") from None
    if value < 1:
        raise ValueError(f"letters are positive integers, got {value}")
    return value
