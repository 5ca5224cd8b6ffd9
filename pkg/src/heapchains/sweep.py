"""Sweep-line partition of box sequences into k-ary chains.

Boxes are processed as corner events from left to right.  A box's k slots
(valued at its upper y) are created when its lower corner is reached but stay
*unavailable* until its upper corner has been swept, because only a box whose
x-extent is fully to the left may serve as a parent.  A lower corner attaches
to the highest available slot at or below its y, or starts a new chain when
none exists (the permanent sentinel below all inputs).
"""

from __future__ import annotations

from typing import Optional, Sequence

from .greedy import _SlotPool
from .poset import Box, Coord, HeapForest, _check_arity

_UPPER = 0  # at equal x, upper corners are swept before lower corners
_LOWER = 1


def sweep_partition(boxes: Sequence[Box], k: int) -> tuple[int, HeapForest]:
    """Optimal partition into k-ary chains of boxes ordered by upper-corner x.

    Input in any order is normalized by a stable sort on upper x.  Returns the
    chain count and a forest over the original box ids.
    """
    _check_arity(k)
    order = sorted(range(len(boxes)), key=lambda i: boxes[i].upper[0])
    rank = {bid: pos for pos, bid in enumerate(order)}
    events = []
    for bid, box in enumerate(boxes):
        events.append((box.upper[0], _UPPER, rank[bid], bid))
        events.append((box.lower[0], _LOWER, rank[bid], bid))
    events.sort(key=lambda e: e[:3])

    available = _SlotPool()
    pending: dict[int, Coord] = {}  # box id -> slot value awaiting its upper corner
    swept: set[int] = set()
    parent: dict[int, Optional[int]] = {}
    count = 0
    for _, kind, _, bid in events:
        box = boxes[bid]
        if kind == _UPPER:
            swept.add(bid)
            if bid in pending:
                available.add(pending.pop(bid), bid, k)
        else:
            best = available.take_best(box.lower[1])
            if best is None:
                parent[bid] = None
                count += 1
            else:
                parent[bid] = best[1]
            # A zero-x-extent box has already been swept; its slots open available.
            if bid in swept:
                available.add(box.upper[1], bid, k)
            else:
                pending[bid] = box.upper[1]
    return count, HeapForest(k, parent)
