"""Greedy best-fit slot algorithms for intervals and permutations.

When an item joins a chain it opens k single-use *slots*, all valued at the
item's right endpoint (the item's own value, for permutations).  A later
interval may attach beneath a slot whose value does not exceed its left
endpoint; best fit always consumes the highest compatible slot.  The sorted
vector of outstanding slot values (the *signature*) drives all optimality
arguments, so it is exposed here together with the pointwise domination
check used by the property tests.

Slot multisets are plain iterables of exact numeric values; signatures are
sorted tuples.
"""

from __future__ import annotations

import math
from bisect import bisect_right, insort
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from sortedcontainers import SortedList

from .poset import Coord, HeapForest, Interval, NotAPermutation, _check_arity, total_order_key

NEW_CHAIN = "new_chain"
ATTACHED = "attached"
REJECTED = "rejected"


class IncompatibleChoice(ValueError):
    """ChooseSlot named a slot that is absent or too high for the interval."""


@dataclass(frozen=True)
class TraceStep:
    """One greedy decision: which item, what happened, which slot it consumed."""

    item: int
    kind: str
    parent: Optional[int] = None
    slot: Optional[Coord] = None


def signature(slots: Iterable[Coord]) -> tuple[Coord, ...]:
    """Slot values sorted ascending."""
    return tuple(sorted(slots))


def dominates(a: Iterable[Coord], b: Iterable[Coord]) -> bool:
    """True iff sig(a) is no longer than sig(b) and pointwise <= on the prefix."""
    sig_a, sig_b = signature(a), signature(b)
    return len(sig_a) <= len(sig_b) and all(x <= y for x, y in zip(sig_a, sig_b))


def insert_interval(
    slots: Iterable[Coord], item: Interval, k: int, choose: Optional[Coord] = None
) -> tuple[tuple[Coord, ...], Optional[Coord]]:
    """Insert one interval into a bare slot multiset.

    Best fit consumes the highest slot value <= item.left; ``choose`` forces a
    specific compatible slot value instead.  Either way k copies of
    item.right are added.  Returns the new multiset (sorted) and the consumed
    slot value, or None when the interval started a new chain.
    """
    _check_arity(k)
    values = list(signature(slots))
    consumed: Optional[Coord] = None
    if choose is not None:
        if choose > item.left:
            raise IncompatibleChoice(f"slot {choose} exceeds left endpoint {item.left}")
        idx = bisect_right(values, choose) - 1
        if idx < 0 or values[idx] != choose:
            raise IncompatibleChoice(f"slot {choose} not present in the multiset")
        consumed = values.pop(idx)
    else:
        idx = bisect_right(values, item.left) - 1
        if idx >= 0:
            consumed = values.pop(idx)
    for _ in range(k):
        insort(values, item.right)
    return tuple(values), consumed


class _SlotPool:
    """Slot copies as (value, owner) pairs; best fit takes the highest value,
    breaking ties toward the lowest owner id."""

    def __init__(self):
        self._entries = SortedList()

    def __len__(self) -> int:
        return len(self._entries)

    def add(self, value: Coord, owner: int, copies: int) -> None:
        for _ in range(copies):
            self._entries.add((value, owner))

    def take_best(self, bound: Coord, strict: bool = False) -> Optional[tuple[Coord, int]]:
        if strict:
            idx = self._entries.bisect_left((bound,)) - 1
        else:
            idx = self._entries.bisect_right((bound, math.inf)) - 1
        if idx < 0:
            return None
        value = self._entries[idx][0]
        return self._entries.pop(self._entries.bisect_left((value,)))

    def values(self) -> tuple[Coord, ...]:
        return tuple(entry[0] for entry in self._entries)


def _run_best_fit(
    items: Sequence[Interval], order: Sequence[int], k: int
) -> tuple[int, HeapForest, tuple[TraceStep, ...]]:
    pool = _SlotPool()
    parent: dict[int, Optional[int]] = {}
    trace = []
    count = 0
    for i in order:
        item = items[i]
        best = pool.take_best(item.left)
        if best is None:
            parent[i] = None
            count += 1
            trace.append(TraceStep(i, NEW_CHAIN))
        else:
            value, owner = best
            parent[i] = owner
            trace.append(TraceStep(i, ATTACHED, parent=owner, slot=value))
        pool.add(item.right, i, k)
    return count, HeapForest(k, parent), tuple(trace)


def greedy_partition_sequence(
    items: Sequence[Interval], k: int
) -> tuple[int, HeapForest, tuple[TraceStep, ...]]:
    """Minimum partition of an interval sequence into k-ary chains (best fit)."""
    _check_arity(k)
    return _run_best_fit(items, range(len(items)), k)


def sorted_set_order(items: Sequence[Interval]) -> list[int]:
    """Item ids in the total order: right endpoint, then left, then input index."""
    return sorted(range(len(items)), key=lambda i: total_order_key(items[i]))


def greedy_partition_set(
    items: Sequence[Interval], k: int
) -> tuple[int, HeapForest, tuple[TraceStep, ...]]:
    """Minimum partition of an interval set: sort by the total order, then best fit."""
    _check_arity(k)
    return _run_best_fit(items, sorted_set_order(items), k)


def greedy_partition_permutation(perm: Sequence[int], k: int) -> tuple[int, HeapForest]:
    """Minimum partition of a permutation into k-ary chains.

    Compatibility is strict here: a value may only attach beneath a strictly
    smaller earlier value.
    """
    _check_arity(k)
    seq = list(perm)
    if sorted(seq) != list(range(len(seq))):
        raise NotAPermutation(f"not a bijection on 0..{len(seq) - 1}: {seq!r}")
    pool = _SlotPool()
    parent: dict[int, Optional[int]] = {}
    count = 0
    for value in seq:
        best = pool.take_best(value, strict=True)
        if best is None:
            parent[value] = None
            count += 1
        else:
            parent[value] = best[1]
        pool.add(value, value, k)
    return count, HeapForest(k, parent)


def greedy_max_heapable_subset(
    items: Sequence[Interval], k: int
) -> tuple[tuple[int, ...], HeapForest, tuple[TraceStep, ...]]:
    """Largest subset of an interval set that forms a single k-ary chain.

    Items are taken in the total order; the first roots the tree, and later
    items either attach best-fit or are rejected outright (rejected items
    never open slots).
    """
    _check_arity(k)
    pool = _SlotPool()
    parent: dict[int, Optional[int]] = {}
    subset: list[int] = []
    trace = []
    for i in sorted_set_order(items):
        item = items[i]
        if not subset:
            parent[i] = None
            trace.append(TraceStep(i, NEW_CHAIN))
        else:
            best = pool.take_best(item.left)
            if best is None:
                trace.append(TraceStep(i, REJECTED))
                continue
            value, owner = best
            parent[i] = owner
            trace.append(TraceStep(i, ATTACHED, parent=owner, slot=value))
        subset.append(i)
        pool.add(item.right, i, k)
    return tuple(sorted(subset)), HeapForest(k, parent), tuple(trace)


def chain_signatures(
    forest: HeapForest, items: Sequence[Interval]
) -> dict[int, tuple[Coord, ...]]:
    """Per-chain signatures of a forest: each node keeps k - (child count)
    unused slots valued at its right endpoint."""
    free = {e: forest.k for e in forest.parent}
    for par in forest.parent.values():
        if par is not None:
            free[par] -= 1
    per_root: dict[int, list[Coord]] = {root: [] for root in forest.roots}
    for e in forest.parent:
        per_root[forest.root_of(e)].extend([items[e].right] * free[e])
    return {root: signature(values) for root, values in per_root.items()}
