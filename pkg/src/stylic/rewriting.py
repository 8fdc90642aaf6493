"""Relation systems and rewriting.

Two layers: bounded congruence closure over plain words (the Knuth relations,
plus the idempotent relations x^2 = x), and the quadratic rewriting system on
words of columns, whose normal forms are exactly the column factorizations of
insertion tableaux.
"""

from __future__ import annotations

import random
import re
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Union

from .core import Alphabet, LetterSet, Word, decreasing_word
from .columns import act_word, column_leq, parse_column, render_column
from .tableaux import Tableau

Relation = tuple[Word, Word]
ColumnWord = tuple[LetterSet, ...]


def knuth_relations(alphabet: Alphabet) -> list[Relation]:
    """All instances of the four cubic relations over the alphabet."""
    rels: list[Relation] = []
    letters = list(alphabet.letters)
    for a, b, c in combinations(letters, 3):
        rels.append(((b, a, c), (b, c, a)))
        rels.append(((a, c, b), (c, a, b)))
    for a, b in combinations(letters, 2):
        rels.append(((b, a, a), (a, b, a)))
        rels.append(((b, b, a), (b, a, b)))
    return rels


def stylic_relations(alphabet: Alphabet) -> list[Relation]:
    """The cubic relations together with x^2 = x for every letter."""
    rels = knuth_relations(alphabet)
    for x in alphabet.letters:
        rels.append(((x, x), (x,)))
    return rels


def _bfs(
    start: Word,
    relations: Iterable[Relation],
    maxlen: int,
    targets: Optional[set[bytes]] = None,
) -> tuple[set[bytes], bool]:
    """Breadth-first closure under relation moves in both directions,
    pruning words longer than maxlen.  Stops early once every target has
    been reached.  Returns (reached set, whether pruning occurred)."""
    if len(start) > maxlen:
        raise ValueError(f"start word longer than the cap {maxlen}")
    rules: list[tuple[bytes, bytes]] = []
    for l, r in relations:
        lb, rb = bytes(l), bytes(r)
        rules.append((lb, rb))
        rules.append((rb, lb))
    origin = bytes(start)
    seen: set[bytes] = {origin}
    queue: deque[bytes] = deque([origin])
    remaining = set(targets) - seen if targets is not None else None
    pruned = False
    while queue:
        if remaining is not None and not remaining:
            break
        s = queue.popleft()
        for l, r in rules:
            if len(s) - len(l) + len(r) > maxlen:
                if l in s:
                    pruned = True
                continue
            i = s.find(l)
            while i != -1:
                t = s[:i] + r + s[i + len(l):]
                if t not in seen:
                    seen.add(t)
                    queue.append(t)
                    if remaining is not None:
                        remaining.discard(t)
                i = s.find(l, i + 1)
    return seen, pruned


def congruence_equal(u: Word, v: Word, relations: Iterable[Relation], maxlen: int) -> bool:
    """Bounded decision: can u be rewritten into v by relation moves without
    ever exceeding maxlen letters?  Sound, and complete only within the cap."""
    if len(v) > maxlen:
        raise ValueError(f"target word longer than the cap {maxlen}")
    if u == v:
        return True
    seen, _ = _bfs(u, relations, maxlen, targets={bytes(v)})
    return bytes(v) in seen


def congruence_class(u: Word, relations: Iterable[Relation], maxlen: int) -> tuple[set[Word], bool]:
    """Every word reachable from u within the cap, plus a pruning flag."""
    seen, pruned = _bfs(u, relations, maxlen)
    return {tuple(s) for s in seen}, pruned


def congruence_reaches(
    u: Word, targets: Iterable[Word], relations: Iterable[Relation], maxlen: int
) -> tuple[set[Word], bool]:
    """The subset of targets reachable from u within the cap (early exit as
    soon as all are found), plus a pruning flag."""
    wanted = {bytes(t) for t in targets}
    seen, pruned = _bfs(u, relations, maxlen, targets=set(wanted))
    return {tuple(t) for t in wanted if t in seen}, pruned


# ---------------------------------------------------------------------------
# The column rewriting system.


def column_pair_reduce(c1: LetterSet, c2: LetterSet) -> tuple[LetterSet, LetterSet]:
    """Reduce an adjacent column pair: the first column absorbs what it can
    (by acting on the second), the multiset leftover forms the new second
    column.  Fixed point exactly when the pair already sits in a tableau."""
    reduced = act_word(decreasing_word(c1), c2)
    leftover = set()
    for x in c1 | c2:
        count = (x in c1) + (x in c2) - (x in reduced)
        assert 0 <= count <= 1, "multiset leftover must be a plain set"
        if count:
            leftover.add(x)
    return reduced, frozenset(leftover)


def check_column_word(word: ColumnWord) -> None:
    for c in word:
        if not c:
            raise ValueError("column words may not contain the empty column")


def flatten_column_word(word: ColumnWord) -> Word:
    out: list[int] = []
    for c in word:
        out.extend(decreasing_word(c))
    return tuple(out)


def reducible_positions(word: ColumnWord) -> list[int]:
    return [i for i in range(len(word) - 1) if not column_leq(word[i], word[i + 1])]


def rewrite_at(word: ColumnWord, i: int) -> ColumnWord:
    reduced, leftover = column_pair_reduce(word[i], word[i + 1])
    middle: ColumnWord = (reduced,) if not leftover else (reduced, leftover)
    return word[:i] + middle + word[i + 2:]


def measure_less(after: ColumnWord, before: ColumnWord) -> bool:
    """The termination measure: first by length, then columnwise at the
    first difference in the column order."""
    if len(after) != len(before):
        return len(after) < len(before)
    for a, b in zip(after, before):
        if a != b:
            return column_leq(a, b) and a != b
    return False


Strategy = Union[str, random.Random]


def normalize_column_word(word: ColumnWord, strategy: Strategy = "leftmost") -> ColumnWord:
    """Apply rules until none applies; the normal form is the unique
    weakly increasing column word in the class, independent of strategy."""
    check_column_word(word)
    current = tuple(word)
    while True:
        slots = reducible_positions(current)
        if not slots:
            break
        if strategy == "leftmost":
            i = slots[0]
        elif strategy == "rightmost":
            i = slots[-1]
        elif isinstance(strategy, random.Random):
            i = strategy.choice(slots)
        else:
            raise ValueError(f"unknown strategy {strategy!r}")
        current = rewrite_at(current, i)
    assert all(column_leq(current[i], current[i + 1]) for i in range(len(current) - 1))
    return current


def all_normal_forms(word: ColumnWord) -> tuple[set[ColumnWord], list[tuple]]:
    """Explore every rewrite order from the given column word; returns the
    set of normal forms (a singleton, by confluence) and any violations of
    the termination measure encountered."""
    check_column_word(word)
    seen = {tuple(word)}
    stack = [tuple(word)]
    normal_forms: set[ColumnWord] = set()
    violations: list[tuple] = []
    while stack:
        w = stack.pop()
        slots = reducible_positions(w)
        if not slots:
            normal_forms.add(w)
            continue
        for i in slots:
            w2 = rewrite_at(w, i)
            if not measure_less(w2, w):
                violations.append((w, i, w2))
            if w2 not in seen:
                seen.add(w2)
                stack.append(w2)
    return normal_forms, violations


def tableau_column_word(tableau: Tableau) -> ColumnWord:
    """The columns of a tableau, left to right, as a column word."""
    return tuple(frozenset(col) for col in tableau.columns())


@dataclass
class ConfluenceReport:
    triples: int
    overlapping: int
    nonjoinable: list[dict]
    measure_violations: list[dict]

    @property
    def ok(self) -> bool:
        return not self.nonjoinable and not self.measure_violations

    def to_json(self) -> dict:
        return {
            "triples": self.triples,
            "overlappingPeaks": self.overlapping,
            "nonJoinable": self.nonjoinable,
            "measureViolations": self.measure_violations,
        }


def local_confluence_check(alphabet: Alphabet) -> ConfluenceReport:
    """Scan every triple of nonempty columns with two overlapping redexes
    and verify both peaks rejoin; also checks that every rewrite step
    strictly decreases the termination measure."""
    columns = [c for c in alphabet.subsets() if c]
    report = ConfluenceReport(0, 0, [], [])
    for c1 in columns:
        for c2 in columns:
            left = not column_leq(c1, c2)
            for c3 in columns:
                report.triples += 1
                if not (left and not column_leq(c2, c3)):
                    continue
                report.overlapping += 1
                forms, violations = all_normal_forms((c1, c2, c3))
                for before, i, after in violations:
                    report.measure_violations.append(
                        {
                            "before": render_column_word(before),
                            "position": i,
                            "after": render_column_word(after),
                        }
                    )
                if len(forms) != 1:
                    report.nonjoinable.append(
                        {
                            "peak": render_column_word((c1, c2, c3)),
                            "normalForms": sorted(
                                render_column_word(w) for w in forms
                            ),
                        }
                    )
    return report


def render_column_word(word: ColumnWord) -> str:
    if not word:
        return "1"
    return "".join(f"({render_column(c)})" for c in word)


def parse_column_word(text: str) -> ColumnWord:
    text = text.strip()
    if text in ("", "1"):
        return ()
    groups = re.findall(r"\(([^()]*)\)", text)
    if "".join(f"({g})" for g in groups) != text:
        raise ValueError(f"bad column word {text!r}: expected (..)(..) groups")
    word = tuple(parse_column(g) for g in groups)
    check_column_word(word)
    return word
