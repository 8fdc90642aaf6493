"""Set-partition evacuation via jeu de taquin and growth pyramids.

The plane is ordered so that going right inside a row and going up inside the
first column are the covering moves; finite lower ideals of that order are
exactly the compositions.  A partition of a subset of the alphabet is an
increasing labelling of such an ideal, one block per row.  Removing the
smallest letter and sliding (the delta operator), together with the
order-reversing involution of the alphabet, produce an evacuation map that is
an involution on partitions; the growth pyramid recomputes it purely at the
level of composition chains.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Optional, Union

from .core import Alphabet, Word, render_letter
from .monoid import SetPartition

Composition = tuple[int, ...]
Point = tuple[int, int]  # (x, y), both 1-based


def check_composition(comp: Composition) -> None:
    if any(part < 1 for part in comp):
        raise ValueError(f"composition parts must be positive: {comp}")


def ideal_points(comp: Composition) -> frozenset[Point]:
    check_composition(comp)
    return frozenset(
        (x, y) for y, part in enumerate(comp, start=1) for x in range(1, part + 1)
    )


def preceq(p: Point, q: Point) -> bool:
    """The plane order: within a row move right, within the first column
    move up."""
    return (p[1] == q[1] and p[0] <= q[0]) or (p[0] == 1 and p[1] <= q[1])


def point_covers(p: Point) -> list[Point]:
    """The at most two points covering p: its right neighbour, and the point
    above when p sits in the first column."""
    x, y = p
    covers = [(x + 1, y)]
    if x == 1:
        covers.append((1, y + 1))
    return covers


def composition_covers(comp: Composition) -> list[Composition]:
    """All compositions covering this one: bump one part, or append a part 1."""
    check_composition(comp)
    out = [
        comp[:i] + (comp[i] + 1,) + comp[i + 1 :] for i in range(len(comp))
    ]
    out.append(comp + (1,))
    return out


def is_composition_cover(lower: Composition, upper: Composition) -> bool:
    return upper in composition_covers(lower)


def interval_middles(c1: Composition, c3: Composition) -> set[Composition]:
    """The middle compositions of a length-2 interval; always one or two."""
    middles = {m for m in composition_covers(c1) if is_composition_cover(m, c3)}
    if not middles:
        raise ValueError(f"{c1} -> .. -> {c3} is not a length-2 interval")
    assert len(middles) in (1, 2)
    return middles


def contains_ideal(outer: Composition, inner: Composition) -> bool:
    if len(inner) > len(outer):
        return False
    return all(i <= o for i, o in zip(inner, outer))


def remove_point(comp: Composition, p: Point) -> Composition:
    """Remove a maximal point from an ideal, keeping it an ideal."""
    x, y = p
    if y > len(comp) or comp[y - 1] != x:
        raise ValueError(f"{p} is not at the end of its row in {comp}")
    if x == 1 and y != len(comp):
        raise ValueError(f"{p} is not a maximal point of {comp}")
    parts = list(comp)
    parts[y - 1] -= 1
    if parts[y - 1] == 0:
        parts.pop()
    return tuple(parts)


@dataclass(frozen=True)
class SkewPartition:
    """An increasing labelling of a difference of ideals, possibly with one
    unlabelled point (the hole)."""

    outer: Composition
    inner: Composition = ()
    labels: tuple[tuple[Point, int], ...] = ()
    hole: Optional[Point] = None

    def __post_init__(self) -> None:
        check_composition(self.outer)
        check_composition(self.inner)
        if not contains_ideal(self.outer, self.inner):
            raise ValueError("inner ideal must be contained in the outer ideal")
        object.__setattr__(self, "labels", tuple(sorted(self.labels)))
        region = self.region()
        expected = set(region)
        if self.hole is not None:
            if self.hole not in region:
                raise ValueError("hole must lie in the skew shape")
            expected.discard(self.hole)
        got = [p for p, _ in self.labels]
        if set(got) != expected or len(got) != len(expected):
            raise ValueError("labels must cover the shape minus the hole, once each")
        values = [v for _, v in self.labels]
        if len(set(values)) != len(values):
            raise ValueError("labels must be distinct letters")
        label = dict(self.labels)
        for p in expected:
            for q in expected:
                if p != q and preceq(p, q) and label[p] >= label[q]:
                    raise ValueError(
                        f"labelling is not increasing: {p}:{label[p]} vs {q}:{label[q]}"
                    )

    def region(self) -> frozenset[Point]:
        return ideal_points(self.outer) - ideal_points(self.inner)

    def label_map(self) -> dict[Point, int]:
        return dict(self.labels)

    def row_word(self) -> Word:
        """Top row, then each longer suffix of rows rearranged increasing."""
        label = self.label_map()
        k = len(self.outer)
        row_letters = [
            sorted(v for (x, y), v in label.items() if y == i) for i in range(1, k + 1)
        ]
        out: list[int] = []
        tail: list[int] = []
        for i in range(k, 0, -1):
            tail.extend(row_letters[i - 1])
            tail.sort()
            out.extend(tail)
        return tuple(out)

    def is_partition(self) -> bool:
        return not self.inner and self.hole is None

    def to_partition(self) -> SetPartition:
        if not self.is_partition():
            raise ValueError("shape still has an inner ideal or a hole")
        label = self.label_map()
        blocks = []
        for y in range(1, len(self.outer) + 1):
            blocks.append(tuple(sorted(v for (px, py), v in label.items() if py == y)))
        return SetPartition(tuple(blocks))

    def render(self) -> str:
        lines = []
        for y in range(len(self.outer), 0, -1):
            cells = []
            label = self.label_map()
            for x in range(1, self.outer[y - 1] + 1):
                if (x, y) in ideal_points(self.inner):
                    cells.append("*")
                elif (x, y) == self.hole:
                    cells.append("o")
                else:
                    cells.append(render_letter(label[(x, y)]))
            lines.append(" ".join(cells))
        return "\n".join(lines)

    def to_json(self) -> dict:
        data = {
            "outer": list(self.outer),
            "inner": list(self.inner),
            "labels": [[list(p), render_letter(v)] for p, v in self.labels],
        }
        if self.hole is not None:
            data["hole"] = list(self.hole)
        return data


def skew_from_json(data: dict) -> SkewPartition:
    from .core import parse_word

    labels = []
    for point, letter in data["labels"]:
        (value,) = parse_word(str(letter))
        labels.append(((point[0], point[1]), value))
    hole = tuple(data["hole"]) if "hole" in data else None
    return SkewPartition(
        outer=tuple(data["outer"]),
        inner=tuple(data.get("inner", ())),
        labels=tuple(labels),
        hole=hole,  # type: ignore[arg-type]
    )


def partition_to_skew(partition: SetPartition) -> SkewPartition:
    labels = []
    for y, block in enumerate(partition.blocks, start=1):
        for x, letter in enumerate(block, start=1):
            labels.append(((x, y), letter))
    return SkewPartition(outer=partition.shape(), labels=tuple(labels))


# ---------------------------------------------------------------------------
# Jeu de taquin.


def downward_move(skew: SkewPartition) -> SkewPartition:
    """One hole move: an upper hole leaves the shape; otherwise the smaller
    of the labels covering the hole slides into it."""
    if skew.hole is None:
        raise ValueError("downward_move needs a hole")
    region = skew.region()
    label = skew.label_map()
    covers = [p for p in point_covers(skew.hole) if p in region]
    if not covers:
        return SkewPartition(
            outer=remove_point(skew.outer, skew.hole),
            inner=skew.inner,
            labels=skew.labels,
        )
    mover = min(covers, key=lambda p: label[p])
    new_labels = dict(label)
    new_labels[skew.hole] = new_labels.pop(mover)
    return SkewPartition(
        outer=skew.outer,
        inner=skew.inner,
        labels=tuple(new_labels.items()),
        hole=mover,
    )


def maximal_inner_points(skew: SkewPartition) -> list[Point]:
    inner = ideal_points(skew.inner)
    return sorted(p for p in inner if not any(q in inner for q in point_covers(p)))


def downward_slide(skew: SkewPartition, start: Point) -> SkewPartition:
    """Open a hole at a maximal point of the inner shape and move it until
    it leaves through an upper corner."""
    if skew.hole is not None:
        raise ValueError("cannot start a slide on a shape that already has a hole")
    if start not in maximal_inner_points(skew):
        raise ValueError(f"{start} is not a maximal point of the inner ideal")
    state = SkewPartition(
        outer=skew.outer,
        inner=remove_point(skew.inner, start),
        labels=skew.labels,
        hole=start,
    )
    while state.hole is not None:
        state = downward_move(state)
    return state


Strategy = Union[str, Callable[[list[Point]], Point]]


def jdt(skew: SkewPartition, strategy: Strategy = "first", rng: Optional[random.Random] = None) -> SetPartition:
    """Slide until no inner shape remains; the resulting partition does not
    depend on the choice of starting corners."""
    state = skew
    while not state.is_partition():
        choices = maximal_inner_points(state)
        if strategy == "first":
            pick = choices[0]
        elif strategy == "last":
            pick = choices[-1]
        elif strategy == "random":
            pick = (rng or random).choice(choices)
        else:
            pick = strategy(choices)  # type: ignore[operator]
        state = downward_slide(state, pick)
    return state.to_partition()


def jdt_all_results(skew: SkewPartition) -> set[SetPartition]:
    """Results over every sequence of corner choices (memoized)."""
    memo: dict[SkewPartition, frozenset[SetPartition]] = {}

    def rec(state: SkewPartition) -> frozenset[SetPartition]:
        if state.is_partition():
            return frozenset([state.to_partition()])
        if state in memo:
            return memo[state]
        out: set[SetPartition] = set()
        for pick in maximal_inner_points(state):
            out |= rec(downward_slide(state, pick))
        memo[state] = frozenset(out)
        return memo[state]

    return set(rec(skew))


# ---------------------------------------------------------------------------
# The delta operator and evacuation.


def e_of(partition: SetPartition) -> int:
    """The block index reached by repeatedly jumping to the smallest letter
    to the right, as long as it is a block minimum."""
    if not partition.blocks:
        raise ValueError("empty partition")
    word: list[int] = [x for b in partition.blocks for x in b]
    minima = {b[0]: j for j, b in enumerate(partition.blocks, start=1)}
    x = partition.blocks[0][0]
    e = 1
    while True:
        pos = word.index(x)
        rest = word[pos + 1 :]
        if not rest:
            return e
        smallest = min(rest)
        if smallest not in minima:
            return e
        e = minima[smallest]
        x = smallest


def delta_direct(partition: SetPartition) -> SetPartition:
    """Remove the global minimum and shift the minima of the first e blocks
    down one block."""
    if not partition.blocks:
        raise ValueError("empty partition")
    e = e_of(partition)
    blocks = [set(b) for b in partition.blocks]
    k = len(blocks)
    minima = [b[0] for b in partition.blocks]
    for j in range(1, e):
        blocks[j - 1].discard(minima[j - 1])
        blocks[j - 1].add(minima[j])
    blocks[e - 1].discard(minima[e - 1])
    if not blocks[e - 1]:
        assert e == k, "only the last block may empty out"
    return SetPartition(tuple(tuple(sorted(b)) for b in blocks if b))


def delta_jdt(partition: SetPartition) -> SetPartition:
    """Remove the minimum label from the origin cell and slide; agrees with
    delta_direct."""
    if not partition.blocks:
        raise ValueError("empty partition")
    skew = partition_to_skew(partition)
    smallest = min(partition.ground())
    labels = tuple((p, v) for p, v in skew.labels if v != smallest)
    assert dict(skew.labels)[(1, 1)] == smallest
    return jdt(SkewPartition(outer=skew.outer, inner=(1,), labels=labels))


def evac(partition: SetPartition, alphabet: Alphabet) -> SetPartition:
    """Evacuation: recursively evacuate delta of the partition, then place
    the reversal of the removed minimum into the block the delta jump chose.

    The result lives on the image of the ground set under the order
    reversal of the alphabet, has the same shape, and the map is an
    involution.
    """
    if not partition.blocks:
        return partition
    for x in partition.ground():
        alphabet.check_letter(x)
    b = min(partition.ground())
    e = e_of(partition)
    inner = evac(delta_direct(partition), alphabet)
    blocks = [list(block) for block in inner.blocks]
    replaced = alphabet.theta_letter(b)
    if e == len(blocks) + 1:
        blocks.append([replaced])
    else:
        blocks[e - 1].append(replaced)
    result = SetPartition(tuple(tuple(sorted(b)) for b in blocks))
    assert result.shape() == partition.shape()
    return result


# ---------------------------------------------------------------------------
# Composition chains and the growth pyramid.


def partition_chain(partition: SetPartition) -> list[Composition]:
    """Shapes of the sub-labellings by the j smallest letters, j = 1..m."""
    row_of = {}
    for y, block in enumerate(partition.blocks, start=1):
        for letter in block:
            row_of[letter] = y
    chain: list[Composition] = []
    current: list[int] = []
    for letter in sorted(row_of):
        y = row_of[letter]
        if y == len(current) + 1:
            current.append(1)
        else:
            current[y - 1] += 1
        chain.append(tuple(current))
    return chain


def partition_from_chain(chain: list[Composition], letters: list[int]) -> SetPartition:
    """Inverse of partition_chain: rebuild the partition from its chain of
    shapes and the sorted list of letters to place."""
    steps = [()] + list(chain) if not chain or chain[0] != () else list(chain)
    if len(steps) - 1 != len(letters):
        raise ValueError("chain length does not match the number of letters")
    blocks: dict[int, list[int]] = {}
    for j in range(1, len(steps)):
        prev, cur = steps[j - 1], steps[j]
        if not is_composition_cover(prev, cur):
            raise ValueError(f"chain step {prev} -> {cur} is not a covering move")
        if len(cur) == len(prev) + 1:
            y = len(cur)
        else:
            y = next(i + 1 for i in range(len(prev)) if cur[i] != prev[i])
        blocks.setdefault(y, []).append(letters[j - 1])
    ordered = [tuple(blocks[y]) for y in sorted(blocks)]
    return SetPartition(tuple(ordered))


@dataclass(frozen=True)
class EvacuationPyramid:
    """Triangular array of composition chains: row i is the chain of the
    i-th delta iterate, prefixed by the empty composition; the anti-diagonal
    read bottom-to-top is the chain of the evacuated partition."""

    chains: tuple[tuple[Composition, ...], ...]

    @property
    def size(self) -> int:
        return len(self.chains) - 1

    def right_side(self) -> list[Composition]:
        m = self.size
        return [self.chains[m - j][j] for j in range(m + 1)]

    def validate_covers(self) -> None:
        m = self.size
        for i in range(m + 1):
            chain = self.chains[i]
            for j in range(len(chain) - 1):
                if not is_composition_cover(chain[j], chain[j + 1]):
                    raise ValueError(f"chain {i} step {j} is not a covering move")
        for i in range(m):
            for j in range(m - i):
                lower = self.chains[i + 1][j]
                upper = self.chains[i][j + 1]
                if not is_composition_cover(lower, upper):
                    raise ValueError(
                        f"cross arrow ({i + 1},{j}) -> ({i},{j + 1}) is not a covering move"
                    )

    def to_json(self) -> list[list[list[int]]]:
        return [[list(c) for c in chain] for chain in self.chains]


def build_pyramid(partition: SetPartition) -> EvacuationPyramid:
    """Pyramid of the chains of the delta iterates, validated so that every
    arrow in both directions is a covering move."""
    chains = []
    current = partition
    m = len(partition.ground())
    for _ in range(m + 1):
        chains.append(((),) + tuple(partition_chain(current)))
        if current.blocks:
            current = delta_direct(current)
    pyramid = EvacuationPyramid(tuple(chains))
    pyramid.validate_covers()
    return pyramid


def complete_rhombus(c1: Composition, c2: Composition, c3: Composition) -> Composition:
    """Missing corner of a rhombus: the other middle of the interval when
    there are two, the same middle when it is unique."""
    middles = interval_middles(c1, c3)
    if c2 not in middles:
        raise ValueError(f"{c2} is not a middle of [{c1}, {c3}]")
    if len(middles) == 2:
        (other,) = middles - {c2}
        return other
    return c2


def pyramid_by_completion(partition: SetPartition) -> EvacuationPyramid:
    """Rebuild the whole pyramid from its leftmost chain alone, one rhombus
    at a time; agrees with build_pyramid."""
    m = len(partition.ground())
    rows: list[tuple[Composition, ...]] = [((),) + tuple(partition_chain(partition))]
    for i in range(m):
        prev = rows[i]
        row: list[Composition] = [()]
        for j in range(1, m - i):
            row.append(complete_rhombus(row[j - 1], prev[j], prev[j + 1]))
        rows.append(tuple(row))
    return EvacuationPyramid(tuple(rows))


def evac_via_pyramid(partition: SetPartition, alphabet: Alphabet) -> SetPartition:
    """Read the evacuated partition off the right side of the pyramid."""
    if not partition.blocks:
        return partition
    pyramid = build_pyramid(partition)
    letters = sorted(alphabet.theta_letter(x) for x in partition.ground())
    return partition_from_chain(pyramid.right_side(), letters)


# ---------------------------------------------------------------------------
# Removals and alphabet shifts.


def remove_letter(w: Word, x: int) -> Word:
    """The word with every occurrence of x removed."""
    return tuple(y for y in w if y != x)


def remove_from_partition(partition: SetPartition, z: int) -> SetPartition:
    """Drop the largest letter of the ground set from its block."""
    ground = partition.ground()
    if not ground or z != max(ground):
        raise ValueError("only the largest letter of the ground set can be removed")
    blocks = [tuple(x for x in b if x != z) for b in partition.blocks]
    return SetPartition(tuple(b for b in blocks if b))


def shift_down_partition(partition: SetPartition) -> SetPartition:
    if any(x <= 1 for x in partition.ground()):
        raise ValueError("cannot shift down a partition containing the smallest letter")
    return SetPartition(tuple(tuple(x - 1 for x in b) for b in partition.blocks))


def shift_up_partition(partition: SetPartition) -> SetPartition:
    return SetPartition(tuple(tuple(x + 1 for x in b) for b in partition.blocks))
