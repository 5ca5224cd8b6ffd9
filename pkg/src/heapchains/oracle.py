"""Independent brute-force references for the optimality claims.

These exist to cross-check the solvers on small instances and deliberately
share no search logic with them.  Size guards are hard errors: past the
guards the searches are exponential and the oracles are not meant to run.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .flow import k_width
from .poset import CycleError, Interval, Poset, _check_arity, poset_from_interval_set


class TooLarge(ValueError):
    """Instance exceeds the oracle's hard size guard."""


def oracle_k_width(poset: Poset, k: int) -> int:
    """Minimum root count over all valid parent assignments, by backtracking."""
    _check_arity(k)
    n = poset.n
    if n > 8:
        raise TooLarge(f"oracle_k_width is limited to n <= 8, got {n}")
    preds = [poset.predecessors(x) for x in range(n)]
    child_count = [0] * n
    best = n

    def assign(x: int, roots: int) -> None:
        nonlocal best
        if roots >= best:
            return
        if x == n:
            best = roots
            return
        for p in preds[x]:
            if child_count[p] < k:
                child_count[p] += 1
                assign(x + 1, roots)
                child_count[p] -= 1
        assign(x + 1, roots + 1)

    assign(0, 0)
    return best


def oracle_max_heapable(items: Sequence[Interval], k: int) -> int:
    """Largest subset forming a single k-ary chain, by subset enumeration."""
    _check_arity(k)
    n = len(items)
    if n > 12:
        raise TooLarge(f"oracle_max_heapable is limited to n <= 12, got {n}")
    for size in range(n, 0, -1):
        for subset in combinations(range(n), size):
            try:
                sub = poset_from_interval_set([items[i] for i in subset])
            except CycleError:
                continue  # mutually dominating degenerate duplicates: never a chain
            if k_width(sub, k)[0] == 1:
                return size
    return 0


def oracle_width_antichain(poset: Poset) -> int:
    """Largest pairwise-incomparable subset, by pruned subset search."""
    n = poset.n
    if n > 20:
        raise TooLarge(f"oracle_width_antichain is limited to n <= 20, got {n}")
    incomparable = []
    for x in range(n):
        mask = 0
        for y in range(n):
            if y != x and not poset.less(x, y) and not poset.less(y, x):
                mask |= 1 << y
        incomparable.append(mask)
    best = 0

    def grow(candidates: int, size: int) -> None:
        nonlocal best
        if size + candidates.bit_count() <= best:
            return
        if candidates == 0:
            best = max(best, size)
            return
        low = candidates & -candidates
        x = low.bit_length() - 1
        grow(candidates & incomparable[x], size + 1)
        grow(candidates ^ low, size)

    grow((1 << n) - 1, 0)
    return best


def max_clique_intervals(items: Sequence[Interval]) -> int:
    """Maximum number of intervals sharing a point (closed intervals), by sweep."""
    events = []
    for item in items:
        events.append((item.left, 0))  # starts before ends: touching endpoints overlap
        events.append((item.right, 1))
    events.sort()
    depth = best = 0
    for _, kind in events:
        if kind == 0:
            depth += 1
            best = max(best, depth)
        else:
            depth -= 1
    return best
