"""N-tableaux, the N-insertion algorithm, left insertion, the bijection with
set partitions, and the enumerated finite monoid of column transformations.

An N-tableau has strictly increasing rows, each row containing the row above
it; it is the canonical form of the congruence class of a word under the
column action.  Classes of words biject with partitions of subsets of the
alphabet, so the monoid on n letters has Bell(n+1) elements.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .core import (
    Alphabet,
    LetterSet,
    Word,
    decreasing_word,
    increasing_word,
    render_letter,
    render_word,
    support,
    theta,
)

DEFAULT_ENUMERATION_LIMIT = 6


def bell_number(k: int) -> int:
    """Number of partitions of a k-element set (Peirce triangle)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    row = [1]
    for _ in range(k):
        nxt = [row[-1]]
        for value in row:
            nxt.append(nxt[-1] + value)
        row = nxt
    return row[0]


@dataclass(frozen=True)
class NTableau:
    rows: tuple[Word, ...]

    def __post_init__(self) -> None:
        prev: Optional[frozenset] = None
        prev_min: Optional[int] = None
        for row in self.rows:
            if not row:
                raise ValueError("N-tableau rows must be nonempty")
            if any(row[j] >= row[j + 1] for j in range(len(row) - 1)):
                raise ValueError(f"row {row} is not strictly increasing")
            s = frozenset(row)
            if prev is not None:
                if not s <= prev:
                    raise ValueError("each row must be contained in the row below")
                if row[0] <= prev_min:
                    raise ValueError("row minima must strictly increase")
            prev, prev_min = s, row[0]

    def row_sets(self) -> list[frozenset]:
        return [frozenset(row) for row in self.rows]

    def row_word(self) -> Word:
        """Rows read left to right, topmost first."""
        out: list[int] = []
        for row in reversed(self.rows):
            out.extend(row)
        return tuple(out)

    def boxes(self) -> int:
        return sum(len(row) for row in self.rows)

    def shape(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.rows)

    def first_column(self) -> LetterSet:
        return frozenset(row[0] for row in self.rows)

    def supp(self) -> LetterSet:
        return frozenset(self.rows[0]) if self.rows else frozenset()

    def render(self) -> str:
        if not self.rows:
            return "(empty tableau)"
        return "\n".join(
            " ".join(render_letter(x) for x in row) for row in reversed(self.rows)
        )

    def to_json(self) -> dict:
        return {"rows": [[render_letter(x) for x in row] for row in self.rows]}


EMPTY_NTABLEAU = NTableau(())


@dataclass(frozen=True)
class SetPartition:
    """Partition of a subset of the alphabet; blocks are kept sorted and
    ordered by their minima."""

    blocks: tuple[Word, ...]

    def __post_init__(self) -> None:
        if any(not b for b in self.blocks):
            raise ValueError("partition blocks must be nonempty")
        normalized = tuple(
            sorted((tuple(sorted(b)) for b in self.blocks), key=lambda b: b[0])
        )
        object.__setattr__(self, "blocks", normalized)
        seen: set[int] = set()
        for b in self.blocks:
            if len(set(b)) != len(b) or seen & set(b):
                raise ValueError("partition blocks must be disjoint")
            seen |= set(b)

    def ground(self) -> LetterSet:
        return frozenset(x for b in self.blocks for x in b)

    def shape(self) -> tuple[int, ...]:
        """Block sizes in min-order; the ideal underlying the partition."""
        return tuple(len(b) for b in self.blocks)

    def block_count(self) -> int:
        return len(self.blocks)

    def render(self, digits: bool = False) -> str:
        if not self.blocks:
            return "(empty)"
        if digits:
            sep = "" if all(x <= 9 for x in self.ground()) else "."
            return "/".join(sep.join(str(x) for x in b) for b in self.blocks)
        return "/".join("".join(render_letter(x) for x in b) for b in self.blocks)

    def to_json(self) -> list[list[str]]:
        return [[render_letter(x) for x in b] for b in self.blocks]


EMPTY_PARTITION = SetPartition(())


def ntableau_from_json(data: dict) -> NTableau:
    from .core import parse_word

    rows = []
    for row in data["rows"]:
        rows.append(tuple(parse_word(str(cell))[0] for cell in row))
    return NTableau(tuple(rows))


def partition_from_json(data: list) -> SetPartition:
    from .core import parse_word

    blocks = []
    for block in data:
        blocks.append(tuple(parse_word(str(cell))[0] for cell in block))
    return SetPartition(tuple(blocks))


def parse_partition(text: str) -> SetPartition:
    """Parse slash-separated blocks: "ac/b/de" or "13/28/457/6"."""
    text = text.strip()
    if not text or text == "(empty)":
        return EMPTY_PARTITION
    blocks = []
    for token in text.split("/"):
        token = token.strip()
        if not token:
            raise ValueError("empty partition block")
        if "." in token:
            blocks.append(tuple(int(t) for t in token.split(".")))
        elif token.isdigit():
            blocks.append(tuple(int(ch) for ch in token))
        else:
            blocks.append(tuple(ord(ch) - ord("a") + 1 for ch in token))
    return SetPartition(tuple(blocks))


def all_set_partitions(letters: Iterable[int]) -> Iterator[SetPartition]:
    """All partitions of the given ground set."""
    items = sorted(letters)
    blocks: list[list[int]] = []

    def rec(i: int) -> Iterator[SetPartition]:
        if i == len(items):
            yield SetPartition(tuple(tuple(b) for b in blocks))
            return
        x = items[i]
        for b in blocks:
            b.append(x)
            yield from rec(i + 1)
            b.pop()
        blocks.append([x])
        yield from rec(i + 1)
        blocks.pop()

    yield from rec(0)


def all_partitions_of_subsets(alphabet: Alphabet) -> Iterator[SetPartition]:
    for subset in alphabet.subsets():
        yield from all_set_partitions(subset)


# ---------------------------------------------------------------------------
# The N-algorithm.


def up(x: int, letters: Iterable[int]) -> Optional[int]:
    """The smallest letter of the set strictly greater than x, if any."""
    bigger = [y for y in letters if y > x]
    return min(bigger) if bigger else None


def delta_word(w: Word) -> Word:
    """The word of letters bumped out of the first row by the N-algorithm:
    each letter contributes the least strictly larger letter already seen."""
    seen: set[int] = set()
    out: list[int] = []
    for x in w:
        y = up(x, seen)
        if y is not None:
            out.append(y)
        seen.add(x)
    return tuple(out)


def d_operator(target: LetterSet, source: LetterSet) -> LetterSet:
    """{up(c, target) : c in source, defined}; a subset of target."""
    return frozenset(
        y for y in (up(c, target) for c in source) if y is not None
    )


def n_insert_row(row: LetterSet, x: int) -> tuple[LetterSet, Optional[int]]:
    """Insert x into a row-set: the row absorbs x, and a copy of the
    smallest element strictly larger than x is bumped (when one exists)."""
    return row | {x}, up(x, row)


def n_insert(tableau: NTableau, x: int) -> NTableau:
    """N-insertion of a letter, bottom row first; bumped copies cascade up."""
    rows = [set(row) for row in tableau.rows]
    carry: Optional[int] = x
    i = 0
    while carry is not None:
        if i == len(rows):
            rows.append({carry})
            carry = None
        else:
            new_row, carry = n_insert_row(frozenset(rows[i]), carry)
            rows[i] = set(new_row)
        i += 1
    return NTableau(tuple(tuple(sorted(r)) for r in rows))


def n_tableau(w: Word) -> NTableau:
    """The N-tableau of a word, by N-inserting its letters left to right."""
    t = EMPTY_NTABLEAU
    for x in w:
        t = n_insert(t, x)
    return t


def n_tableau_recursive(w: Word) -> NTableau:
    """Oracle: the first row is Supp(w) and the rest is the N-tableau of the
    bumped-letter word."""
    if not w:
        return EMPTY_NTABLEAU
    rest = n_tableau_recursive(delta_word(w))
    return NTableau((increasing_word(support(w)),) + rest.rows)


def left_insert(x: int, tableau: NTableau) -> NTableau:
    """Left insertion of a letter into an N-tableau; corresponds to
    multiplying the class of the tableau by x on the left."""
    rows = [set(row) for row in tableau.rows]
    k = len(rows)
    if k == 0:
        return NTableau(((x,),))
    minima = [min(r) for r in rows]
    if x <= minima[0]:
        rows[0].add(x)
        return NTableau(tuple(tuple(sorted(r)) for r in rows))
    t = max(i for i in range(1, k + 1) if x > minima[i - 1]) + 1
    if t <= k and x >= minima[t - 1]:
        assert x == minima[t - 1]
        return tableau
    # Deepest row still containing x; x is absent from rows r+1..t.
    r = max((i for i in range(1, k + 1) if x in rows[i - 1]), default=0)
    bumps: dict[int, Optional[int]] = {
        i: up(x, frozenset(rows[i - 1])) for i in range(1, k + 1)
    }
    if t == k + 1:
        rows.append(set())
        bumps[k + 1] = None
    for i in range(r + 1, t + 1):
        rows[i - 1].add(x)
    for i in range(r + 2, t + 1):
        if bumps[i] is not None and bumps[i] == bumps[i - 1]:
            rows[i - 1].discard(bumps[i])
    return NTableau(tuple(tuple(sorted(r)) for r in rows))


def to_partition(tableau: NTableau) -> SetPartition:
    """The partition whose blocks are the successive row differences, the
    top row first."""
    sets = tableau.row_sets()
    k = len(sets)
    blocks = []
    for i in range(k):
        block = sets[i] - (sets[i + 1] if i + 1 < k else frozenset())
        blocks.append(tuple(sorted(block)))
    return SetPartition(tuple(blocks))


def from_partition(partition: SetPartition) -> NTableau:
    """Rows are the unions of the block tails: row i = B_i | B_{i+1} | ..."""
    blocks = [frozenset(b) for b in partition.blocks]
    rows = []
    running: frozenset = frozenset()
    for b in reversed(blocks):
        running = running | b
        rows.append(increasing_word(running))
    return NTableau(tuple(reversed(rows)))


def pi(w: Word) -> SetPartition:
    """The set partition of Supp(w) canonically attached to the class of w."""
    return to_partition(n_tableau(w))


def zero_tableau(alphabet: Alphabet) -> NTableau:
    """The class of the full decreasing word: a staircase with n(n+1)/2
    boxes, the absorbing element of the monoid."""
    return n_tableau(decreasing_word(alphabet.full_set))


def theta_tableau(tableau: NTableau, alphabet: Alphabet) -> NTableau:
    """The image of a class under the order-reversing anti-automorphism."""
    return n_tableau(theta(tableau.row_word(), alphabet))


# ---------------------------------------------------------------------------
# The enumerated monoid of column transformations.


def _act_mask(x: int, mask: int) -> int:
    """Column insertion of letter x, on columns encoded as bitmasks."""
    ge = mask >> (x - 1) << (x - 1)
    bit = 1 << (x - 1)
    if ge == 0:
        return mask | bit
    y = ge & -ge
    return (mask & ~y) | bit


def _mask_of(column: LetterSet) -> int:
    m = 0
    for x in column:
        m |= 1 << (x - 1)
    return m


def _column_of(mask: int, n: int) -> LetterSet:
    return frozenset(i + 1 for i in range(n) if mask >> i & 1)


@dataclass(frozen=True)
class StylicElement:
    index: int
    word: Word
    transform: tuple[int, ...]
    tableau: NTableau
    parent: int
    via_letter: int

    def render_word(self) -> str:
        return render_word(self.word) or "1"


@dataclass
class JOrder:
    """The two-sided-ideal order of the monoid, with its grading data."""

    down_sets: list[frozenset[int]]
    hasse_edges: list[tuple[int, int]]
    coranks: list[int]
    height: int

    def leq(self, u: int, v: int) -> bool:
        return u in self.down_sets[v]


class StylicMonoid:
    """The finite monoid of transformations of the column space induced by
    the left action of words, enumerated by closure over the generators."""

    def __init__(self, alphabet: Alphabet, max_size: int = DEFAULT_ENUMERATION_LIMIT):
        if alphabet.n > max_size:
            raise ValueError(
                f"enumeration limited to alphabets of size {max_size} "
                f"(requested {alphabet.n}); raise max_size explicitly to override"
            )
        self.alphabet = alphabet
        n = alphabet.n
        size = 1 << n
        self._mask_count = size
        act = {
            x: tuple(_act_mask(x, m) for m in range(size)) for x in alphabet.letters
        }
        self._letter_transforms = act

        identity = tuple(range(size))
        elements: list[StylicElement] = []
        index: dict[tuple[int, ...], int] = {}

        def add(word: Word, transform: tuple[int, ...], parent: int, via: int) -> int:
            i = len(elements)
            elements.append(
                StylicElement(i, word, transform, n_tableau(word), parent, via)
            )
            index[transform] = i
            return i

        add((), identity, -1, 0)
        queue = deque([0])
        while queue:
            i = queue.popleft()
            t = elements[i].transform
            w = elements[i].word
            for x in alphabet.letters:
                child = tuple(t[a] for a in act[x])
                if child not in index:
                    queue.append(add(w + (x,), child, i, x))

        self.elements = elements
        self._index = index
        self.identity = 0
        self.zero = self.class_of_word(decreasing_word(alphabet.full_set))

        expected = sum(
            _binomial(n, k) * bell_number(k) for k in range(n + 1)
        )
        assert len(elements) == expected == bell_number(n + 1), (
            f"closure found {len(elements)} transformations, "
            f"expected Bell({n + 1}) = {bell_number(n + 1)}"
        )

        self.right_by_letter = {
            x: [index[tuple(e.transform[a] for a in act[x])] for e in elements]
            for x in alphabet.letters
        }
        self.left_by_letter = {
            x: [index[tuple(act[x][v] for v in e.transform)] for e in elements]
            for x in alphabet.letters
        }
        self._table: Optional[list[list[int]]] = None

    def __len__(self) -> int:
        return len(self.elements)

    def class_of_word(self, w: Word) -> int:
        self.alphabet.check_word(w)
        transform = []
        for m in range(self._mask_count):
            for x in reversed(w):
                m = self._letter_transforms[x][m]
            transform.append(m)
        return self._index[tuple(transform)]

    def act_on_column(self, i: int, column: LetterSet) -> LetterSet:
        image = self.elements[i].transform[_mask_of(column)]
        return _column_of(image, self.alphabet.n)

    def multiplication_table(self) -> list[list[int]]:
        """table[i][j] = index of the product element_i * element_j."""
        if self._table is None:
            size = len(self.elements)
            table = [[0] * size for _ in range(size)]
            for i in range(size):
                row = table[i]
                row[0] = i
                for j in range(1, size):
                    e = self.elements[j]
                    row[j] = self.right_by_letter[e.via_letter][row[e.parent]]
            self._table = table
        return self._table

    def multiply(self, i: int, j: int) -> int:
        return self.multiplication_table()[i][j]

    def idempotents(self) -> list[int]:
        out = []
        for e in self.elements:
            t = e.transform
            if all(t[t[m]] == t[m] for m in range(self._mask_count)):
                out.append(e.index)
        return out

    def supports(self) -> list[LetterSet]:
        return [e.tableau.supp() for e in self.elements]

    def j_order(self) -> JOrder:
        """Compute the two-sided-ideal order; certifies antisymmetry and the
        box-count grading, raising ValueError on any violation."""
        size = len(self.elements)
        down: list[frozenset[int]] = []
        for v in range(size):
            seen = {v}
            stack = [v]
            while stack:
                m = stack.pop()
                for x in self.alphabet.letters:
                    for nb in (self.left_by_letter[x][m], self.right_by_letter[x][m]):
                        if nb not in seen:
                            seen.add(nb)
                            stack.append(nb)
            down.append(frozenset(seen))

        boxes = [e.tableau.boxes() for e in self.elements]
        for v in range(size):
            for u in down[v]:
                if u != v:
                    if v in down[u]:
                        raise ValueError(
                            f"order is not antisymmetric at elements {u}, {v}"
                        )
                    if boxes[u] <= boxes[v]:
                        raise ValueError(
                            f"box count does not strictly decrease from {v} to {u}"
                        )

        hasse: list[tuple[int, int]] = []
        for v in range(size):
            strict = down[v] - {v}
            dominated: set[int] = set()
            for w in strict:
                dominated |= down[w] - {w}
            for u in strict - dominated:
                hasse.append((u, v))
                if boxes[u] != boxes[v] + 1:
                    raise ValueError(
                        f"cover {u} -> {v} changes box count by "
                        f"{boxes[u] - boxes[v]}, expected 1"
                    )

        n = self.alphabet.n
        height = n * (n + 1) // 2
        assert boxes[self.identity] == 0 and boxes[self.zero] == height
        return JOrder(down_sets=down, hasse_edges=hasse, coranks=boxes, height=height)

    def to_json(self, with_table: bool = True) -> dict:
        idem = set(self.idempotents())
        data = {
            "n": self.alphabet.n,
            "size": len(self.elements),
            "identity": self.identity,
            "zero": self.zero,
            "elements": [
                {
                    "index": e.index,
                    "word": e.render_word(),
                    "support": "".join(render_letter(x) for x in sorted(e.tableau.supp())),
                    "rows": e.tableau.to_json()["rows"],
                    "corank": e.tableau.boxes(),
                    "idempotent": e.index in idem,
                }
                for e in self.elements
            ],
        }
        if with_table:
            data["table"] = self.multiplication_table()
        return data

    def jorder_dot(self) -> str:
        """DOT digraph of the ideal-order Hasse diagram, ranked by co-rank."""
        order = self.j_order()
        lines = [
            "digraph jorder {",
            "  rankdir=BT;",
            '  node [shape=box, fontname="monospace"];',
        ]
        for e in self.elements:
            lines.append(f'  e{e.index} [label="{e.render_word()}"];')
        by_rank: dict[int, list[int]] = {}
        for e in self.elements:
            by_rank.setdefault(order.coranks[e.index], []).append(e.index)
        for rank in sorted(by_rank):
            nodes = " ".join(f"e{i};" for i in by_rank[rank])
            lines.append(f"  {{ rank=same; {nodes} }}")
        for u, v in order.hasse_edges:
            lines.append(f"  e{u} -> e{v};")
        lines.append("}")
        return "\n".join(lines)


def _binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    out = 1
    for i in range(min(k, n - k)):
        out = out * (n - i) // (i + 1)
    return out


def enumerate_styl(alphabet: Alphabet, max_size: int = DEFAULT_ENUMERATION_LIMIT) -> StylicMonoid:
    """Enumerate the monoid of column transformations on the given alphabet."""
    return StylicMonoid(alphabet, max_size=max_size)


def complete_elements_bijection_check(alphabet: Alphabet) -> bool:
    """Elements with full support number Bell(n), and dropping the first
    bumped-letter word one alphabet step down intertwines the two actions:
    u = shift_down(delta(w)) satisfies u.g = (w.g)^- on columns avoiding the
    largest letter."""
    from .columns import act_word, gamma_minus
    from .core import shift_down_word

    n = alphabet.n
    monoid = enumerate_styl(alphabet)
    full = alphabet.full_set
    complete = [e for e in monoid.elements if e.tableau.supp() == full]
    if len(complete) != bell_number(n):
        return False
    if n == 1:
        return True

    small = Alphabet(n - 1)
    small_monoid = enumerate_styl(small)
    small_columns = list(small.subsets())
    images = set()
    for e in complete:
        u = shift_down_word(delta_word(e.word))
        for g in small_columns:
            if act_word(u, g) != gamma_minus(act_word(e.word, g), alphabet):
                return False
        images.add(small_monoid.class_of_word(u))
    return len(images) == len(complete) == len(small_monoid)
