"""Domain types: finite posets, intervals, boxes, and k-ary chain forests.

Elements of a poset are the integers ``0..n-1``.  The strict order is stored
transitively closed, so ``less(x, z)`` is a single lookup.  Coordinates of
intervals and boxes are exact numbers (``int`` or ``fractions.Fraction``) in
library mode; the Monte-Carlo simulator feeds plain floats through the same
types.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union

Coord = Union[int, Fraction, float]


class CycleError(ValueError):
    """The input relations contradict a strict partial order."""


class IdOutOfRange(ValueError):
    """A relation names an element id outside 0..n-1."""


class NotAPermutation(ValueError):
    """The input sequence is not a bijection on 0..n-1."""


class ElementMismatch(ValueError):
    """A forest does not cover exactly the poset's elements."""


@dataclass(frozen=True)
class Interval:
    """Closed interval [left, right] with left <= right."""

    left: Coord
    right: Coord

    def __post_init__(self):
        if self.left > self.right:
            raise ValueError(f"interval endpoints out of order: [{self.left}, {self.right}]")


@dataclass(frozen=True)
class Box:
    """Axis-parallel box given by its lower and upper corners."""

    lower: tuple[Coord, Coord]
    upper: tuple[Coord, Coord]

    def __post_init__(self):
        if self.lower[0] > self.upper[0] or self.lower[1] > self.upper[1]:
            raise ValueError(f"box corners out of order: {self.lower} / {self.upper}")

    def y_interval(self) -> Interval:
        """Projection onto the y axis."""
        return Interval(self.lower[1], self.upper[1])


class Poset:
    """Strict partial order on 0..n-1, transitively closed.

    Successor sets are bitmasks, so ``less`` is O(1) and closure-based
    constructions stay cheap up to a few thousand elements.
    """

    __slots__ = ("n", "_succ")

    def __init__(self, n: int, succ_masks: list[int]):
        self.n = n
        self._succ = tuple(succ_masks)

    def less(self, x: int, y: int) -> bool:
        """True iff x strictly precedes y."""
        return (self._succ[x] >> y) & 1 == 1

    def successors(self, x: int) -> list[int]:
        """Elements strictly above x, ascending."""
        mask = self._succ[x]
        return [y for y in range(self.n) if (mask >> y) & 1]

    def predecessors(self, y: int) -> list[int]:
        """Elements strictly below y, ascending."""
        return [x for x in range(self.n) if (self._succ[x] >> y) & 1]

    def pairs(self) -> list[tuple[int, int]]:
        """All comparable pairs (x, y) with x strictly below y."""
        return [(x, y) for x in range(self.n) for y in self.successors(x)]

    def relation_count(self) -> int:
        return sum(mask.bit_count() for mask in self._succ)

    def __eq__(self, other):
        return isinstance(other, Poset) and self.n == other.n and self._succ == other._succ

    def __hash__(self):
        return hash((self.n, self._succ))

    def __repr__(self):
        return f"Poset(n={self.n}, relations={self.pairs()!r})"


def _check_arity(k: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"arity must be an integer >= 1, got {k!r}")


def poset_from_relations(n: int, pairs: Iterable[tuple[int, int]]) -> Poset:
    """Transitive closure of the given (smaller, larger) pairs.

    Raises CycleError if the closure would relate any element to itself,
    IdOutOfRange for ids outside 0..n-1.
    """
    direct = [0] * n
    for x, y in pairs:
        if not (0 <= x < n and 0 <= y < n):
            raise IdOutOfRange(f"relation ({x}, {y}) outside 0..{n - 1}")
        if x == y:
            raise CycleError(f"element {x} related to itself")
        direct[x] |= 1 << y

    # Kahn topological order over the direct edges; a leftover node means a cycle.
    indegree = [0] * n
    for x in range(n):
        mask = direct[x]
        while mask:
            low = mask & -mask
            indegree[low.bit_length() - 1] += 1
            mask ^= low
    queue = [x for x in range(n) if indegree[x] == 0]
    order = []
    while queue:
        x = queue.pop()
        order.append(x)
        mask = direct[x]
        while mask:
            low = mask & -mask
            y = low.bit_length() - 1
            indegree[y] -= 1
            if indegree[y] == 0:
                queue.append(y)
            mask ^= low
    if len(order) != n:
        raise CycleError("relations contain a cycle")

    closed = [0] * n
    for x in reversed(order):
        mask = direct[x]
        acc = mask
        while mask:
            low = mask & -mask
            acc |= closed[low.bit_length() - 1]
            mask ^= low
        closed[x] = acc
    return Poset(n, closed)


def poset_from_permutation(perm: Iterable[int]) -> Poset:
    """Permutation order: less(a, b) iff a < b and a appears before b."""
    seq = list(perm)
    n = len(seq)
    if sorted(seq) != list(range(n)):
        raise NotAPermutation(f"not a bijection on 0..{n - 1}: {seq!r}")
    position = [0] * n
    for idx, value in enumerate(seq):
        position[value] = idx
    masks = [0] * n
    for a in range(n):
        for b in range(a + 1, n):
            if position[a] < position[b]:
                masks[a] |= 1 << b
    return Poset(n, masks)


def _dominance_masks(n: int, dominates) -> list[int]:
    """Pairwise dominance relation; rejects the (degenerate) symmetric case."""
    masks = [0] * n
    for i in range(n):
        for j in range(n):
            if i != j and dominates(i, j):
                masks[i] |= 1 << j
    for i in range(n):
        for j in range(i + 1, n):
            if (masks[i] >> j) & 1 and (masks[j] >> i) & 1:
                raise CycleError(
                    f"items {i} and {j} dominate each other (coincident degenerate inputs)"
                )
    return masks


def poset_from_interval_set(items: list[Interval]) -> Poset:
    """Interval dominance: less(i, j) iff items[i].right <= items[j].left."""
    return Poset(
        len(items),
        _dominance_masks(len(items), lambda i, j: items[i].right <= items[j].left),
    )


def poset_from_interval_sequence(items: list[Interval]) -> Poset:
    """Sequence order: less(i, j) iff i < j and items[i].right <= items[j].left."""
    n = len(items)
    masks = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if items[i].right <= items[j].left:
                masks[i] |= 1 << j
    return Poset(n, masks)


def poset_from_box_set(items: list[Box]) -> Poset:
    """Box dominance: componentwise upper(i) <= lower(j)."""

    def dom(i, j):
        return (
            items[i].upper[0] <= items[j].lower[0]
            and items[i].upper[1] <= items[j].lower[1]
        )

    return Poset(len(items), _dominance_masks(len(items), dom))


def compare_total(i1: Interval, i2: Interval) -> int:
    """Total order on intervals: right endpoint first, then left.

    Returns a negative / zero / positive int like the old cmp convention.
    """
    if i1.right != i2.right:
        return -1 if i1.right < i2.right else 1
    if i1.left != i2.left:
        return -1 if i1.left < i2.left else 1
    return 0


def total_order_key(item: Interval) -> tuple[Coord, Coord]:
    """Sort key realizing compare_total; stable sorts break ties by index."""
    return (item.right, item.left)


@dataclass(frozen=True)
class HeapForest:
    """Partition of elements into rooted trees with at most k children per node.

    ``parent`` maps every covered element to its parent id, or None for roots.
    """

    k: int
    parent: Mapping[int, Optional[int]]

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(sorted(self.parent))

    @property
    def roots(self) -> tuple[int, ...]:
        return tuple(sorted(e for e, p in self.parent.items() if p is None))

    def children_of(self, x: int) -> tuple[int, ...]:
        return tuple(sorted(c for c, p in self.parent.items() if p == x))

    def root_of(self, x: int) -> int:
        while self.parent[x] is not None:
            x = self.parent[x]
        return x


def verify_forest(poset: Poset, forest: HeapForest, k: int) -> bool:
    """Validate a forest against a poset: coverage, arity <= k, parent precedes child.

    Raises ElementMismatch when the forest covers a different element set;
    dominance, arity and partition violations just return False.
    """
    _check_arity(k)
    if set(forest.parent) != set(range(poset.n)):
        raise ElementMismatch(
            f"forest covers {len(forest.parent)} elements, poset has {poset.n}"
        )
    child_count = dict.fromkeys(forest.parent, 0)
    for child, par in forest.parent.items():
        if par is None:
            continue
        if par not in child_count:
            return False
        child_count[par] += 1
        if child_count[par] > k:
            return False
        # Strict dominance also rules out parent-pointer cycles.
        if not poset.less(par, child):
            return False
    return True
