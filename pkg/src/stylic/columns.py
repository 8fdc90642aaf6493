"""The column state space and the left action of words on columns.

A column is a subset of the alphabet, equivalently the strictly decreasing
word of its elements; the empty column is the identity state and renders as
"1".  The action of a letter is the closed form
    x . gamma = (gamma \\ y) | {x},   y = min{z in gamma : z >= x},
with a plain union when no such y exists; tableau insertion is kept as an
oracle.  The column order extends both the alphabet order on singletons and
reverse inclusion.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .core import Alphabet, LetterSet, Word, decreasing_word, render_letter, support
from .tableaux import p_tableau

Column = frozenset

EMPTY_COLUMN: LetterSet = frozenset()


def act_letter(x: int, column: LetterSet) -> LetterSet:
    """Column insertion of a single letter; the result always contains x."""
    candidates = [z for z in column if z >= x]
    if not candidates:
        return column | {x}
    return (column - {min(candidates)}) | {x}


def act_word(w: Word, column: LetterSet) -> LetterSet:
    """Left action of a word: letters applied right to left, so that
    (uv).gamma = u.(v.gamma)."""
    for x in reversed(w):
        column = act_letter(x, column)
    return column


def act_word_via_tableau(w: Word, column: LetterSet) -> LetterSet:
    """Oracle: w.gamma is the first column of P(w r(gamma))."""
    t = p_tableau(w + decreasing_word(column))
    return t.first_column()


def all_columns(alphabet: Alphabet) -> list[LetterSet]:
    """All 2^n columns, in bitmask order."""
    return list(alphabet.subsets())


def column_leq(c1: LetterSet, c2: LetterSet) -> bool:
    """The column order: c1 <= c2 when the two columns can stand side by
    side in a tableau, with every column below the empty one.

    Concretely: c2 empty, or both nonempty with |c1| >= |c2| and the i-th
    smallest element of c1 at most the i-th smallest of c2.
    """
    if not c2:
        return True
    if not c1 or len(c1) < len(c2):
        return False
    s1, s2 = sorted(c1), sorted(c2)
    return all(a <= b for a, b in zip(s1, s2))


def column_leq_bruteforce(c1: LetterSet, c2: LetterSet) -> bool:
    """c1 <= c2 iff there is a regressive injection from c2 into c1
    (f(x) <= x for all x); exhaustive search, for cross-checking."""
    if not c2:
        return True
    if len(c1) < len(c2):
        return False
    targets = sorted(c2)
    for image in permutations(sorted(c1), len(targets)):
        if all(f <= x for f, x in zip(image, targets)):
            return True
    return False


def gamma_minus(column: LetterSet, alphabet: Alphabet) -> LetterSet:
    """Shift every letter down by one, dropping the smallest letter."""
    for x in column:
        alphabet.check_letter(x)
    return frozenset(x - 1 for x in column if x > 1)


def gamma_plus(column: LetterSet, alphabet: Alphabet) -> LetterSet:
    """Shift every letter up by one; the column must avoid the largest
    letter of the alphabet."""
    if alphabet.n in column:
        raise ValueError("cannot shift up a column containing the largest letter")
    for x in column:
        alphabet.check_letter(x)
    return frozenset(x + 1 for x in column)


def below(column: LetterSet, x: int) -> LetterSet:
    """The elements of the column strictly smaller than x."""
    return frozenset(y for y in column if y < x)


def above(column: LetterSet, x: int) -> LetterSet:
    """The elements of the column strictly larger than x."""
    return frozenset(y for y in column if y > x)


def fixpoints(w: Word, alphabet: Alphabet) -> set[LetterSet]:
    """The columns fixed by w: exactly those containing Supp(w)."""
    supp = support(w)
    alphabet.check_word(w)
    rest = sorted(alphabet.full_set - supp)
    out: set[LetterSet] = set()
    for mask in range(1 << len(rest)):
        extra = frozenset(rest[i] for i in range(len(rest)) if mask >> i & 1)
        out.add(supp | extra)
    return out


@dataclass(frozen=True)
class KernelInterval:
    """The fibre of an idempotent action over one of its fixpoints."""

    minimum: LetterSet
    maximum: LetterSet
    members: frozenset[LetterSet]

    @property
    def size(self) -> int:
        return len(self.members)


def kernel_interval(w: Word, delta: LetterSet, alphabet: Alphabet) -> KernelInterval:
    """All columns gamma with w.gamma = delta, for a strictly decreasing w
    and a fixpoint delta of w.

    The fibre is scanned over the whole column space and certified to be the
    interval [delta, maximum] of the column order.
    """
    letters = list(w)
    if letters != sorted(letters, reverse=True) or len(set(letters)) != len(letters):
        raise ValueError("w must be a strictly decreasing word")
    if not support(w) <= delta:
        raise ValueError("delta must be a fixpoint of w (it must contain Supp(w))")
    members = frozenset(g for g in all_columns(alphabet) if act_word(w, g) == delta)
    assert delta in members
    assert all(column_leq(delta, g) for g in members), "fixpoint is not the minimum"
    maximal = [g for g in members if not any(column_leq(g, h) and g != h for h in members)]
    assert len(maximal) == 1, f"fibre has {len(maximal)} maximal elements, expected 1"
    maximum = maximal[0]
    interval = frozenset(
        g for g in all_columns(alphabet) if column_leq(delta, g) and column_leq(g, maximum)
    )
    assert members == interval, "fibre is not an interval of the column order"
    return KernelInterval(minimum=delta, maximum=maximum, members=members)


def split_action_check(w: Word, column: LetterSet, pivot: int) -> bool:
    """For a letter in w.gamma but not in Supp(w), the action splits at that
    letter:  w.gamma = w_< . gamma_< + {pivot} + w_> . gamma_>."""
    image = act_word(w, column)
    if pivot not in image or pivot in support(w):
        raise ValueError("pivot must lie in w.gamma but not in Supp(w)")
    lower = act_word(tuple(x for x in w if x < pivot), below(column, pivot))
    upper = act_word(tuple(x for x in w if x > pivot), above(column, pivot))
    return image == lower | upper | {pivot}


def render_column(column: LetterSet) -> str:
    """Strictly decreasing letter string; the empty column renders as "1"."""
    if not column:
        return "1"
    return "".join(render_letter(x) for x in sorted(column, reverse=True))


def parse_column(text: str) -> LetterSet:
    """Parse a strictly decreasing letter string; "1" or "" is the empty
    column."""
    text = text.strip()
    if text in ("", "1"):
        return frozenset()
    letters = []
    for ch in text:
        if not ("a" <= ch <= "z"):
            raise ValueError(f"bad column letter {ch!r}")
        letters.append(ord(ch) - ord("a") + 1)
    if letters != sorted(letters, reverse=True):
        raise ValueError(f"column {text!r} is not strictly decreasing")
    return frozenset(letters)
