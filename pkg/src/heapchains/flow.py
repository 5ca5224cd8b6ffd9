"""Exact minimum partition into k-ary chains via matching on the k-split graph.

Each element contributes a minus node of capacity k (it may feed up to k
children) and a plus node of capacity 1 (it has at most one parent); an edge
joins x-minus to y-plus whenever x strictly precedes y.  A maximum matching
that respects these capacities leaves exactly ``n - |matching|`` elements
parentless, and those are the chain roots of an optimal partition.

The matching is computed as max flow on the network
``source -(k)-> minus -(1)-> plus -(1)-> sink`` using shortest augmenting
paths in phases (Dinic); integral capacities keep the flow integral, and
fixed ascending-id edge order keeps the result deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .poset import HeapForest, Poset, _check_arity


class InvalidMatching(ValueError):
    """An edge set violates the left-k / right-1 degree constraints."""


@dataclass(frozen=True)
class SplitGraph:
    """Bipartite split graph of a poset, capacities folded into the nodes.

    ``adj[x]`` lists the plus-side elements y with x strictly below y.
    Every minus node has capacity k, every plus node capacity 1.
    """

    n: int
    k: int
    adj: tuple[tuple[int, ...], ...]

    @property
    def left_capacity(self) -> int:
        return self.k

    @property
    def right_capacity(self) -> int:
        return 1

    def edge_count(self) -> int:
        return sum(len(row) for row in self.adj)


@dataclass(frozen=True)
class LeftKMatching:
    """Chosen (x, y) edges with out-degree <= k per x and in-degree <= 1 per y."""

    k: int
    edges: frozenset[tuple[int, int]]

    def __len__(self) -> int:
        return len(self.edges)


def build_split_graph(poset: Poset, k: int) -> SplitGraph:
    _check_arity(k)
    return SplitGraph(poset.n, k, tuple(tuple(poset.successors(x)) for x in range(poset.n)))


class _FlowNetwork:
    """Dinic max flow on small integral networks."""

    def __init__(self, size: int):
        self.graph: list[list[list[int]]] = [[] for _ in range(size)]

    def add_edge(self, u: int, v: int, cap: int) -> None:
        self.graph[u].append([v, cap, len(self.graph[v])])
        self.graph[v].append([u, 0, len(self.graph[u]) - 1])

    def _levels(self, s: int, t: int) -> list[int]:
        level = [-1] * len(self.graph)
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v, cap, _ in self.graph[u]:
                if cap > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level

    def _augment(self, u: int, t: int, limit: int, level: list[int], it: list[int]) -> int:
        if u == t:
            return limit
        while it[u] < len(self.graph[u]):
            edge = self.graph[u][it[u]]
            v, cap, rev = edge
            if cap > 0 and level[v] == level[u] + 1:
                pushed = self._augment(v, t, min(limit, cap), level, it)
                if pushed > 0:
                    edge[1] -= pushed
                    self.graph[v][rev][1] += pushed
                    return pushed
            it[u] += 1
        return 0

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        while True:
            level = self._levels(s, t)
            if level[t] < 0:
                return total
            it = [0] * len(self.graph)
            while True:
                pushed = self._augment(s, t, 1 << 60, level, it)
                if pushed == 0:
                    break
                total += pushed


def max_left_k_matching(graph: SplitGraph) -> LeftKMatching:
    """Maximum-cardinality matching respecting the split-graph capacities."""
    n, k = graph.n, graph.k
    source, sink = 2 * n, 2 * n + 1
    net = _FlowNetwork(2 * n + 2)
    middle_edges = {}
    for x in range(n):
        net.add_edge(source, x, k)
    for x in range(n):
        for y in graph.adj[x]:
            middle_edges[(x, y)] = len(net.graph[x])
            net.add_edge(x, n + y, 1)
    for y in range(n):
        net.add_edge(n + y, sink, 1)
    net.max_flow(source, sink)
    chosen = frozenset(
        (x, y) for (x, y), idx in middle_edges.items() if net.graph[x][idx][1] == 0
    )
    return LeftKMatching(k, chosen)


def matching_to_partition(poset: Poset, matching: LeftKMatching) -> HeapForest:
    """Forest with parent(y) = x for each chosen edge; unmatched elements are roots.

    Raises InvalidMatching when an edge is outside the split graph or a degree
    bound is exceeded.
    """
    parent: dict[int, int | None] = dict.fromkeys(range(poset.n))
    out_degree = [0] * poset.n
    for x, y in sorted(matching.edges):
        if not poset.less(x, y):
            raise InvalidMatching(f"edge ({x}, {y}) not present in the split graph")
        if parent[y] is not None:
            raise InvalidMatching(f"element {y} matched to two parents")
        out_degree[x] += 1
        if out_degree[x] > matching.k:
            raise InvalidMatching(f"element {x} matched to more than k={matching.k} children")
        parent[y] = x
    return HeapForest(matching.k, parent)


def k_width(poset: Poset, k: int) -> tuple[int, HeapForest]:
    """Minimum number of k-ary chains partitioning the poset, with a witness."""
    matching = max_left_k_matching(build_split_graph(poset, k))
    forest = matching_to_partition(poset, matching)
    return poset.n - len(matching), forest
