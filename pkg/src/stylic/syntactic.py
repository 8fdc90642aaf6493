"""Syntactic congruences of word statistics.

Two statistics matter here: the length of the longest strictly decreasing
subsequence (whose left congruence classes are indexed by the columns, and
whose syntactic monoid is the enumerated monoid of column transformations),
and the shape of the insertion tableau (whose left syntactic congruence is
the tableau congruence itself, certified by constructed separating contexts).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .columns import EMPTY_COLUMN, act_word
from .core import Alphabet, LetterSet, Word, decreasing_word, render_word
from .monoid import StylicMonoid, enumerate_styl
from .tableaux import Shape, longest_strictly_decreasing, p_tableau


def f_decr(w: Word) -> int:
    """Longest strictly decreasing subsequence length."""
    return longest_strictly_decreasing(w)


def lambda_shape(w: Word) -> Shape:
    """The shape of the insertion tableau of w."""
    return p_tableau(w).shape()


@dataclass
class CongruenceReport:
    classes: int
    pairs_checked: int
    failures: list[str] = field(default_factory=list)
    witnesses: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "classes": self.classes,
            "pairsChecked": self.pairs_checked,
            "failures": self.failures,
            "witnesses": self.witnesses,
        }


def all_words(alphabet: Alphabet, maxlen: int) -> list[Word]:
    out: list[Word] = [()]
    frontier: list[Word] = [()]
    for _ in range(maxlen):
        frontier = [w + (x,) for w in frontier for x in alphabet.letters]
        out.extend(frontier)
    return out


def column_separating_word(c1: LetterSet, c2: LetterSet, alphabet: Alphabet) -> Word:
    """A word x whose action sends the two distinct columns to columns of
    different sizes, built the way the left-congruence classes are told
    apart: by size, then by largest letter, then by shifting the prefix
    above the first disagreement."""
    if c1 == c2:
        raise ValueError("columns are equal; no separating word exists")
    if len(c1) != len(c2):
        return ()
    d1, d2 = decreasing_word(c1), decreasing_word(c2)
    if d1[0] != d2[0]:
        return (max(d1[0], d2[0]),)
    p = next(i for i in range(len(d1)) if d1[i] != d2[i])
    bigger = max(d1[p], d2[p])
    w = d1[1:p] + (bigger,)
    rest = column_separating_word(act_word(w, c1), act_word(w, c2), alphabet)
    x = rest + w
    assert len(act_word(x, c1)) != len(act_word(x, c2))
    return x


def left_syntactic_check(
    alphabet: Alphabet, maxlen: int, deep_maxlen: Optional[int] = None
) -> CongruenceReport:
    """Partition the words of length <= maxlen by the column their action
    produces from the empty column, and certify the partition is the left
    syntactic one: a separating context is constructed and verified (with
    the decreasing-subsequence statistic evaluated directly) for every pair
    of distinct columns.

    With deep_maxlen set, additionally compare against the brute-force
    partition by statistic profiles over all contexts of length up to
    deep_maxlen.
    """
    words = all_words(alphabet, maxlen)
    buckets: dict[LetterSet, Word] = {}
    for w in words:
        col = act_word(w, EMPTY_COLUMN)
        buckets.setdefault(col, w)
    report = CongruenceReport(classes=len(buckets), pairs_checked=0)
    if maxlen >= alphabet.n and len(buckets) != 2 ** alphabet.n:
        report.failures.append(
            f"expected {2 ** alphabet.n} classes, found {len(buckets)}"
        )
    for c1, c2 in combinations(sorted(buckets, key=sorted), 2):
        report.pairs_checked += 1
        u, v = buckets[c1], buckets[c2]
        x = column_separating_word(c1, c2, alphabet)
        if f_decr(x + u) == f_decr(x + v):
            report.failures.append(
                f"context {render_word(x)!r} fails to separate "
                f"{render_word(u)!r} and {render_word(v)!r}"
            )
        else:
            report.witnesses.append(
                {"u": render_word(u), "v": render_word(v), "x": render_word(x)}
            )
    if deep_maxlen is not None:
        contexts = all_words(alphabet, deep_maxlen)
        signature = {
            w: tuple(f_decr(x + w) for x in contexts) for w in words
        }
        for w1, w2 in combinations(words, 2):
            same_bucket = act_word(w1, EMPTY_COLUMN) == act_word(w2, EMPTY_COLUMN)
            if same_bucket != (signature[w1] == signature[w2]):
                report.failures.append(
                    f"bounded-context partition disagrees on "
                    f"{render_word(w1)!r} vs {render_word(w2)!r}"
                )
    return report


def syntactic_monoid_check(alphabet: Alphabet, monoid: Optional[StylicMonoid] = None) -> bool:
    """The two-sided syntactic congruence of the induced statistic
    m -> |m . empty| on the enumerated monoid is equality: scanning every
    context pair (p, q) distinguishes every pair of distinct elements."""
    m = monoid if monoid is not None else enumerate_styl(alphabet)
    table = m.multiplication_table()
    size = len(m)
    stat = [bin(e.transform[0]).count("1") for e in m.elements]
    signatures = set()
    pairs = [(p, q) for p in range(size) for q in range(size)]
    for i in range(size):
        sig = tuple(stat[table[table[p][i]][q]] for p, q in pairs)
        if sig in signatures:
            return False
        signatures.add(sig)
    return True


def plactic_separator(
    u: Word, v: Word, alphabet: Alphabet, extra_cap: int = 0
) -> Optional[Word]:
    """For words with distinct insertion tableaux, a left context x with
    lambda_shape(xu) != lambda_shape(xv): the empty word when the shapes
    already differ, otherwise a power of the decreasing word of all letters
    at least the larger of the first disagreeing column letters.

    Every candidate is verified by direct evaluation before being returned;
    None signals an exhausted search (which would falsify the statement
    being exercised).
    """
    pu, pv = p_tableau(u), p_tableau(v)
    if pu == pv:
        raise ValueError("words have the same insertion tableau")
    if pu.shape() != pv.shape():
        return ()
    cols_u = [frozenset(c) for c in pu.columns()]
    cols_v = [frozenset(c) for c in pv.columns()]
    nc = next(i for i in range(len(cols_u)) if cols_u[i] != cols_v[i])
    du = decreasing_word(cols_u[nc])
    dv = decreasing_word(cols_v[nc])
    p = next(i for i in range(len(du)) if du[i] != dv[i])
    b = max(du[p], dv[p])
    y = tuple(x for x in sorted(alphabet.letters, reverse=True) if x >= b)
    cap = nc + 1 + alphabet.n + extra_cap
    for m in range(1, cap + 1):
        x = y * m
        if lambda_shape(x + u) != lambda_shape(x + v):
            return x
    return None


def plactic_left_syntactic_check(alphabet: Alphabet, maxlen: int) -> CongruenceReport:
    """Bounded-scale certification that the tableau congruence is the left
    syntactic congruence of the shape statistic: separators are found and
    verified for every pair of distinct tableaux, and sampled contexts never
    separate words with equal tableaux."""
    words = all_words(alphabet, maxlen)
    buckets: dict = {}
    for w in words:
        buckets.setdefault(p_tableau(w), []).append(w)
    report = CongruenceReport(classes=len(buckets), pairs_checked=0)
    reps = [(t, ws[0]) for t, ws in buckets.items()]
    for (t1, u), (t2, v) in combinations(reps, 2):
        report.pairs_checked += 1
        x = plactic_separator(u, v, alphabet)
        if x is None:
            report.failures.append(
                f"no separator found for {render_word(u)!r} vs {render_word(v)!r}"
            )
        else:
            report.witnesses.append(
                {"u": render_word(u), "v": render_word(v), "x": render_word(x)}
            )
    contexts = all_words(alphabet, 2)
    for t, ws in buckets.items():
        rep = ws[0]
        for w in ws[1:]:
            report.pairs_checked += 1
            for x in contexts:
                if lambda_shape(x + rep) != lambda_shape(x + w):
                    report.failures.append(
                        f"equivalent words {render_word(rep)!r}, {render_word(w)!r} "
                        f"separated by {render_word(x)!r}"
                    )
                    break
    return report
